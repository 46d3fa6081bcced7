#include "soliton_lab/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace soliton_lab {

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 6)
    throw std::invalid_argument("grid must be a_min:a_max:b_min:b_max:na:nb, got '" + text + "'");
  GridSpec g;
  try {
    std::size_t used = 0;
    auto num = [&](const std::string& s) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    };
    auto count = [&](const std::string& s) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    };
    g.a_min = num(parts[0]);
    g.a_max = num(parts[1]);
    g.b_min = num(parts[2]);
    g.b_max = num(parts[3]);
    g.na = count(parts[4]);
    g.nb = count(parts[5]);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("grid has a malformed number: '" + text + "'");
  }
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (na < 2 || nb < 2) throw std::invalid_argument("grid needs at least 2 nodes per axis");
  for (double v : {a_min, a_max, b_min, b_max})
    if (!std::isfinite(v)) throw std::invalid_argument("grid bounds must be finite");
  if (!(a_max > a_min) || !(b_max > b_min))
    throw std::invalid_argument("grid bounds must be increasing");
}

std::string GridSpec::to_string() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%.17g:%.17g:%d:%d", a_min, a_max, b_min, b_max,
                na, nb);
  return buf;
}

double GridSpec::a(int i) const {
  return i == na - 1 ? a_max : a_min + i * (a_max - a_min) / (na - 1);
}

double GridSpec::b(int j) const {
  return j == nb - 1 ? b_max : b_min + j * (b_max - b_min) / (nb - 1);
}

std::vector<std::pair<double, double>> GridSpec::points() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) out.emplace_back(a(i), b(j));
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SOLITON_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace soliton_lab
