#pragma once

#include <cstddef>
#include <vector>

#include "pqs/mpoly.hpp"

namespace pqs {

/// Q_j(X) = 1/2 X^T H X + b^T X + c.
struct QuadComponent {
  std::vector<std::vector<EpsScalar>> H;
  std::vector<EpsScalar> b;
  EpsScalar c;
  bool operator==(const QuadComponent&) const = default;
};

/// (H, b, c) of a polynomial of total degree <= 2; throws Error(Domain) otherwise.
QuadComponent quad_from_poly(const EMPoly& q);

/// Quadratic map K^n -> K^k.
struct QuadMap {
  std::size_t n = 0;
  std::vector<QuadComponent> comps;

  std::size_t k() const { return comps.size(); }
  /// Throws Error(Input) on asymmetric or mis-sized data.
  void validate() const;
  /// Q_j as a polynomial in n variables.
  EMPoly poly(std::size_t j) const;
  std::vector<EMPoly> polys() const;
  std::vector<EpsScalar> eval(const std::vector<EpsScalar>& x) const;
  bool operator==(const QuadMap&) const = default;
};

/// The set Z(p(Q(X)) - level); `dist` is the coordinate of the projection X -> X_dist.
struct Problem {
  EMPoly p;
  QuadMap Q;
  EpsScalar level;
  std::size_t dist = 0;

  std::size_t n() const { return Q.n; }
  std::size_t k() const { return Q.k(); }
  void validate() const;
  /// p(Q(X)) - level.
  EMPoly composed() const;
};

/// The tower carried by the coefficients of the problem (longest one).
TowerPtr problem_tower(const Problem& prob);

}  // namespace pqs
