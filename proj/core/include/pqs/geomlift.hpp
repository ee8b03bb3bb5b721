#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pqs/algebra0d.hpp"

namespace pqs {

/// Y -> (num_i(Y) / den(Y))_i, all over one variable space.
struct RationalMap {
  std::vector<EMPoly> num;
  EMPoly den;
};

/// Current system polynomial F and image map P; variable roles are indices
/// into F's variables (-1 when absent).
struct LiftState {
  EMPoly F;
  std::vector<EMPoly> P;
  int y0 = -1;      // norm variable
  int yq = -1;      // inverse of the denominator
  int ybound = -1;  // bounding variable
  int dbar = 0;
  TowerPtr tower;
  int mu_pos = -1, zeta_pos = -1;

  std::size_t nvars() const { return F.nvars(); }
};

/// F = F0' + (1 - Y_q Lambda)^2 with F0' = F0^2 unless nonneg; P_i = Y_q Omega_i.
/// Y_q is appended after F0's variables.
LiftState algebraize(const EMPoly& F0, const RationalMap& Psi, bool assume_nonneg = false);

/// Without the Y_q variable: F = F0', P_i = Omega_i / Lambda for a nonzero
/// rational constant Lambda.
LiftState algebraize_constant(const EMPoly& F0, const RationalMap& Psi, bool assume_nonneg = false);

/// F' = F + (Y_0 - sum P_i^2)^2, Y_0 appended.
LiftState add_norm_var(LiftState s);

/// F_mu = F' + (1 - mu^2 sum_j Y_j^2)^2, Y_{q+1} appended; mu is tower position
/// mu_pos of `tower`, which must extend the state's tower.
LiftState bound_mu(LiftState s, const TowerPtr& tower, std::size_t mu_pos);

/// F_zeta = zeta (mu^dbar (Y_0^dbar + sum_{j != 0} (Y_j^dbar + Y_j^2)) - (2V - 1)) + (1 - zeta) F_mu
/// with V the number of variables and dbar the least even integer > deg F_mu.
/// zeta must be the innermost position of `tower`; mu^dbar is omitted when the
/// state carries no mu.
LiftState smooth_zeta(LiftState s, const TowerPtr& tower, std::size_t zeta_pos);

/// Smallest even integer strictly above d.
int dbar_for(int d);

/// The partials dF_zeta/dY_j (j != Y_0) and F_zeta reduced by them, as a
/// validated special basis; N = dbar (dbar - 1)^{V-1}.
SpecialBasis<EpsScalar> critical_basis(const LiftState& s);

/// Quotient dimension critical_basis would produce, without building it.
std::size_t critical_dimension(const LiftState& s);

/// Lifts every coefficient into the (longer) tower `t`.
EMPoly lift_poly(const EMPoly& p, const TowerPtr& t);

struct ImageLimitOptions {
  bool assume_nonneg = false;
  bool assume_bounded = false;
  std::size_t n_cap = 0;  // 0 means no cap
  CandidateOptions cand;
  unsigned seed = 1;
};

/// Points meeting every connected component of lim Psi(Z(F0)), where the limit
/// runs over the `inner` innermost infinitesimals of F0's tower. The result
/// lives in that tower shortened by `inner`. Throws Error(Resource) if the
/// quotient dimension exceeds n_cap.
std::vector<URep<EpsScalar>> limits_of_image(const EMPoly& F0, const RationalMap& Psi, std::size_t inner,
                                             const ImageLimitOptions& opt = {});

}  // namespace pqs
