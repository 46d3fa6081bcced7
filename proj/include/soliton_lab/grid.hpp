#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace soliton_lab {

/// Rectangular tensor grid [a_min, a_max] x [b_min, b_max] with na x nb nodes.
struct GridSpec {
  double a_min = -1.0, a_max = 1.0, b_min = -1.0, b_max = 1.0;
  int na = 41, nb = 41;

  /// Parses "a_min:a_max:b_min:b_max:na:nb". Throws std::invalid_argument.
  static GridSpec parse(const std::string& text);
  std::string to_string() const;
  void validate() const;

  double a(int i) const;
  double b(int j) const;
  /// Row-major nodes: index = i * nb + j.
  std::vector<std::pair<double, double>> points() const;
  double step_a() const { return (a_max - a_min) / (na - 1); }
  double step_b() const { return (b_max - b_min) / (nb - 1); }
};

/// Worker count: SOLITON_LAB_THREADS when set and positive, else hardware
/// concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. If any call
/// throws, the exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace soliton_lab
