#pragma once

// Ramanujan's cosine-product and arctangent-sum identities and the three
// identities obtained from them through maximal-surface parametrisations.

#include <functional>
#include <string>
#include <vector>

#include "soliton_lab/jet.hpp"

namespace soliton_lab::identities {

struct TruncationResult {
  long K = 0;
  CNum partial{};
  CNum lhs{};
  double abs_err = 0;
  /// log2(err(K) / err(2K)); NaN when either error vanishes.
  double est_order = 0;
  /// Im(partial) for identities whose limit is real.
  double imag_residue = 0;
  bool tail_corrected = false;
};

/// Margin for A near odd multiples of pi/2 (cos product) or multiples of pi
/// (arctan sum).
inline constexpr double kAngleMargin = 1e-6;
/// Default excluded radius around the zeta-plane singular sets.
inline constexpr double kZetaMargin = 1e-2;

TruncationResult ram_cos_product(CNum X, CNum A, long K);
TruncationResult ram_arctan_sum(double X, double A, long K, bool tail = false);
TruncationResult scherk_identity(CNum zeta, long K, double margin = kZetaMargin);
TruncationResult helicoid2_identity(CNum zeta, long K, double margin = kZetaMargin);
TruncationResult lorentz_helicoid_identity(CNum zeta, long K, bool tail = false,
                                           double margin = kZetaMargin);

/// +1 when u v > 0 or u = 0 or v = 0, else -1.
int constant_sign(double u, double v);

enum class Kind { Sum, Product };

struct IdentityArgs {
  CNum X{}, A{}, zeta{};
  bool tail = false;
  double margin = kZetaMargin;
};

struct IdentitySpec {
  std::string name;
  Kind kind = Kind::Sum;
  std::function<TruncationResult(const IdentityArgs&, long)> evaluate;
  /// Throws ExcludedPoint when args are outside the identity's hypotheses.
  std::function<void(const IdentityArgs&)> validate;
};

/// ram_cos_product, ram_arctan_sum, scherk_identity, helicoid2_identity,
/// lorentz_helicoid_identity.
IdentitySpec identity_spec(const std::string& name);
std::vector<std::string> identity_names();

/// Evaluates at each K; est_order of entry i > 0 is fitted from entries i-1, i.
std::vector<TruncationResult> convergence_order(const IdentitySpec& spec, const IdentityArgs& args,
                                                const std::vector<long>& K_list);

}  // namespace soliton_lab::identities
