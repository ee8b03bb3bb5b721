#pragma once

#include <vector>

#include "pqs/polylinalg.hpp"
#include "pqs/problem.hpp"
#include "pqs/realroots.hpp"

namespace pqs {

/// Cells of a uniform grid that may meet Z(p(Q(X)) - level), grouped into
/// face/edge/corner-connected clusters.
struct GridReport {
  Rat resolution;
  std::size_t count = 0;
  std::vector<std::vector<Rat>> samples;  // one cell centre per cluster
  std::vector<std::vector<std::vector<Rat>>> cells;  // centres of every cell, per cluster
};

/// Box [lo, hi]^n with cells of side `resolution`. n <= 3, rational data.
GridReport grid_components(const Problem& prob, const Rat& lo, const Rat& hi, const Rat& resolution);

/// Laplace expansion along the first row; size <= 4.
template <class C>
MPoly<C> cofactor_det(const PolyMatrix<C>& M) {
  require(M.rows() == M.cols(), ErrorKind::Shape, "cofactor_det of a non-square matrix");
  require(M.rows() <= 4, ErrorKind::Resource, "cofactor_det supports at most 4 x 4");
  std::size_t n = M.rows();
  if (n == 0) return MPoly<C>(M.nvars(), scalar_one<C>());
  if (n == 1) return M.at(0, 0);
  MPoly<C> acc(M.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (M.at(0, j).is_zero()) continue;
    MPoly<C> t = M.at(0, j) * cofactor_det(minor_matrix(M, 0, j));
    if (j % 2 == 0) acc += t;
    else acc -= t;
  }
  return acc;
}

/// Exact critical points of X -> X_dist on Z(p(Q(X)) - level) for n = 2 and
/// rational data, by resultant elimination along a sheared coordinate. Throws
/// Error(Inconclusive) when the critical set is not finite or elimination degenerates.
std::vector<RealURep> resultant_critical(const Problem& prob);

}  // namespace pqs
