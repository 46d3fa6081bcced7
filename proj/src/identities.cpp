#include "soliton_lab/identities.hpp"

#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "soliton_lab/errors.hpp"

namespace soliton_lab::identities {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Partial sums of term(1..K) and term(1..2K); finish maps a sum to the partial.
template <class Term, class Finish>
TruncationResult run_series(long K, CNum lhs, Term term, Finish finish) {
  if (K < 0) throw std::invalid_argument("K must be non-negative");
  CNum s{};
  CNum at_k{};
  for (long k = 1; k <= 2 * K; ++k) {
    s += term(k);
    if (k == K) at_k = s;
  }
  TruncationResult r;
  r.K = K;
  r.lhs = lhs;
  r.partial = finish(at_k, K);
  r.abs_err = std::abs(r.partial - lhs);
  r.imag_residue = r.partial.imag();
  const double err2 = std::abs(finish(s, 2 * K) - lhs);
  r.est_order = (r.abs_err > 0 && err2 > 0 && K > 0) ? std::log2(r.abs_err / err2) : kNaN;
  return r;
}

// sum_{k > K} 1 / k^2
double inverse_square_tail(long K) { return boost::math::trigamma(static_cast<double>(K) + 1.0); }

double distance_to_lattice(CNum a, double offset, double period) {
  const double n = std::round((a.real() - offset) / period);
  return std::abs(a - CNum(offset + n * period, 0.0));
}

void check_zeta_points(CNum zeta, std::initializer_list<CNum> points, double margin) {
  for (CNum p : points)
    if (std::abs(zeta - p) <= margin) throw ExcludedPoint("zeta is within the excluded radius of a singular point");
}

}  // namespace

TruncationResult ram_cos_product(CNum X, CNum A, long K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  if (distance_to_lattice(A, kPi / 2, kPi) <= kAngleMargin)
    throw ExcludedPoint("A is an odd multiple of pi/2");
  const CNum lhs = std::cos(X + A) / std::cos(A);
  return run_series(
      K, lhs,
      [&](long k) {
        const double c = (k - 0.5) * kPi;
        return std::log(1.0 - X / (c - A)) + std::log(1.0 + X / (c + A));
      },
      [](CNum s, long) { return std::exp(s); });
}

TruncationResult ram_arctan_sum(double X, double A, long K, bool tail) {
  if (distance_to_lattice(A, 0.0, kPi) <= kAngleMargin) throw ExcludedPoint("A is a multiple of pi");
  const double lhs = std::atan(std::tanh(X) / std::tan(A));
  auto r = run_series(
      K, lhs,
      [&](long k) { return CNum(std::atan(X / (k * kPi + A)) - std::atan(X / (k * kPi - A))); },
      [&](CNum s, long n) {
        double p = std::atan(X / A) + s.real();
        if (tail) p += -2.0 * X * A / (kPi * kPi) * inverse_square_tail(n);
        return CNum(p);
      });
  r.tail_corrected = tail;
  return r;
}

TruncationResult scherk_identity(CNum zeta, long K, double margin) {
  check_zeta_points(zeta, {1.0, -1.0, kI, -kI}, margin);
  const double x = std::log(std::abs(zeta + 1.0)) - std::log(std::abs(zeta - 1.0));
  const double y = std::log(std::abs(zeta - kI)) - std::log(std::abs(zeta + kI));
  const double lhs = std::log(std::abs(zeta * zeta - 1.0)) - std::log(std::abs(zeta * zeta + 1.0));
  return run_series(
      K, lhs,
      [&](long k) {
        const double c = (k - 0.5) * kPi;
        return std::log(CNum(c, -y) / CNum(c, -x)) + std::log(CNum(c, y) / CNum(c, x));
      },
      [](CNum s, long) { return s; });
}

TruncationResult helicoid2_identity(CNum zeta, long K, double margin) {
  if (std::abs(zeta) <= margin) throw ExcludedPoint("zeta = 0");
  if (std::abs(std::abs(zeta) - 1.0) <= margin)
    throw ExcludedPoint("|zeta| = 1: the k = 1 factor vanishes");
  const double den = (zeta - 1.0 / zeta).imag();
  if (std::abs(den) <= margin) throw ExcludedPoint("Im(zeta - 1/zeta) = 0");
  const double L = std::log(std::abs(zeta));
  const double lhs = (zeta + 1.0 / zeta).imag() / den;
  return run_series(
      K, lhs,
      [&](long k) {
        const double h = (k - 0.5) * kPi;
        return std::log(CNum((k - 1) * kPi, L) / CNum(h, L)) +
               std::log(CNum(k * kPi, -L) / CNum(h, -L));
      },
      [](CNum s, long) { return -kI * std::exp(s); });
}

int constant_sign(double u, double v) {
  if (u == 0.0 || v == 0.0) return 1;
  return (u > 0.0) == (v > 0.0) ? 1 : -1;
}

TruncationResult lorentz_helicoid_identity(CNum zeta, long K, bool tail, double margin) {
  if (std::abs(zeta) <= margin) throw ExcludedPoint("zeta = 0");
  const double R = (zeta + 1.0 / zeta).real();
  const double I = (zeta - 1.0 / zeta).imag();
  if (distance_to_lattice(0.5 * I, 0.0, kPi) <= kAngleMargin)
    throw ExcludedPoint("cot(Im(zeta - 1/zeta) / 2) is undefined");
  const double u = zeta.real(), v = zeta.imag();
  // Helicoid height on the sheet the quadrant rule refers to: atan(v/u),
  // with u = 0 mapped to +pi/2.
  const double height = u == 0.0 ? kPi / 2 : std::atan(v / u);
  const double lhs = height - std::atan(std::tanh(-0.5 * R) / std::tan(0.5 * I));
  const double constant = constant_sign(u, v) * kPi / 2;
  auto r = run_series(
      K, lhs,
      [&](long k) {
        return CNum(std::atan(R / (I - 2.0 * k * kPi)) + std::atan(R / (I + 2.0 * k * kPi)));
      },
      [&](CNum s, long n) {
        double p = constant + s.real();
        if (tail) p += -R * I / (2.0 * kPi * kPi) * inverse_square_tail(n);
        return CNum(p);
      });
  r.tail_corrected = tail;
  return r;
}

IdentitySpec identity_spec(const std::string& name) {
  IdentitySpec s;
  s.name = name;
  if (name == "ram_cos_product") {
    s.kind = Kind::Product;
    s.evaluate = [](const IdentityArgs& a, long K) { return ram_cos_product(a.X, a.A, K); };
    s.validate = [](const IdentityArgs& a) { ram_cos_product(a.X, a.A, 1); };
  } else if (name == "ram_arctan_sum") {
    s.evaluate = [](const IdentityArgs& a, long K) {
      return ram_arctan_sum(a.X.real(), a.A.real(), K, a.tail);
    };
    s.validate = [](const IdentityArgs& a) { ram_arctan_sum(a.X.real(), a.A.real(), 0); };
  } else if (name == "scherk_identity") {
    s.evaluate = [](const IdentityArgs& a, long K) { return scherk_identity(a.zeta, K, a.margin); };
    s.validate = [](const IdentityArgs& a) { scherk_identity(a.zeta, 0, a.margin); };
  } else if (name == "helicoid2_identity") {
    s.kind = Kind::Product;
    s.evaluate = [](const IdentityArgs& a, long K) { return helicoid2_identity(a.zeta, K, a.margin); };
    s.validate = [](const IdentityArgs& a) { helicoid2_identity(a.zeta, 0, a.margin); };
  } else if (name == "lorentz_helicoid_identity") {
    s.evaluate = [](const IdentityArgs& a, long K) {
      return lorentz_helicoid_identity(a.zeta, K, a.tail, a.margin);
    };
    s.validate = [](const IdentityArgs& a) { lorentz_helicoid_identity(a.zeta, 0, false, a.margin); };
  } else {
    throw std::invalid_argument("unknown identity '" + name + "'");
  }
  return s;
}

std::vector<std::string> identity_names() {
  return {"ram_cos_product", "ram_arctan_sum", "scherk_identity", "helicoid2_identity",
          "lorentz_helicoid_identity"};
}

std::vector<TruncationResult> convergence_order(const IdentitySpec& spec, const IdentityArgs& args,
                                                const std::vector<long>& K_list) {
  spec.validate(args);
  for (std::size_t i = 1; i < K_list.size(); ++i)
    if (K_list[i] <= K_list[i - 1]) throw std::invalid_argument("K list must be increasing");
  std::vector<TruncationResult> out;
  for (std::size_t i = 0; i < K_list.size(); ++i) {
    TruncationResult r = spec.evaluate(args, K_list[i]);
    if (i > 0) {
      const auto& prev = out.back();
      r.est_order = (prev.abs_err > 0 && r.abs_err > 0)
                        ? std::log(prev.abs_err / r.abs_err) /
                              std::log(static_cast<double>(r.K) / static_cast<double>(prev.K))
                        : kNaN;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace soliton_lab::identities
