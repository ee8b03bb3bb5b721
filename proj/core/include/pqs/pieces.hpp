#pragma once

#include <cstddef>
#include <vector>

#include "pqs/geomlift.hpp"
#include "pqs/polylinalg.hpp"
#include "pqs/problem.hpp"

namespace pqs {

/// Phi(Y) = sum_j p_j(Y) H^_j and b(Y) = -sum_j p_j(Y) b^_j, where ^ drops the
/// distinguished row. Row i of Phi is coordinate row_coordinate(prob, i).
struct PhiData {
  PolyMatrix<EpsScalar> Phi;
  std::vector<EMPoly> b;
};

std::size_t row_coordinate(const Problem& prob, std::size_t row);

PhiData phi_data(const Problem& prob);

/// Chart of the critical locus of X -> X_dist on which Phi_{UW} is a maximal
/// invertible block. Polynomials live in k + (n - |W|) variables (Y, then T);
/// T_i stands for X_{free[i]}.
struct Piece {
  IndexPair pair;  // U: rows of Phi, W: columns (coordinates)
  std::vector<std::size_t> free;
  EMPoly omega;
  std::vector<EMPoly> theta;  // X_{W[i]} = theta[i] / omega
  std::vector<EMPoly> equations;
  EMPoly inequation;

  std::size_t nvars() const { return omega.nvars(); }
  /// Omega vanishes identically: the chart is empty.
  bool degenerate() const { return omega.is_zero(); }
};

/// One piece per (U, W) with r <= |U| = |W| <= n - 1, in enum_uw order.
/// Throws Error(Domain) when k = 0.
std::vector<Piece> enum_pieces(const Problem& prob, std::size_t r);

/// Number of pieces enum_pieces emits.
std::size_t piece_count(std::size_t n, std::size_t r);

/// Builds omega, theta, equations and inequation for `pair`.
Piece make_piece(const Problem& prob, const PhiData& phi, const IndexPair& pair);

/// phi^{-1}_{UW}: n numerators over the common denominator omega.
RationalMap piece_inverse(const Piece& piece, const Problem& prob);

/// phi_W(x) = (Q(x), x_free).
std::vector<EpsScalar> piece_forward(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& x);

/// phi^{-1}_{UW}(y, t); throws Error(Domain) where omega vanishes.
std::vector<EpsScalar> piece_backward(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& yt);

/// The piece's defining conditions as polynomials in X: equations (on V,
/// critical, bordering minors), the inequation det Phi(Q(X))_{UW}, and the
/// roundtrip residuals theta_i(phi_W(X)) - X_{W[i]} omega(phi_W(X)).
struct PieceXSide {
  std::vector<EMPoly> equations;
  EMPoly inequation;
  std::vector<EMPoly> roundtrip;
};

PieceXSide x_side(const Piece& piece, const Problem& prob);

/// x lies on V, is critical for X -> X_dist, and Phi(Q(x)) has (U, W) as a
/// maximal invertible block.
bool on_piece(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& x);

/// Upper bound on the total degree of the piece equations.
int piece_degree_bound(std::size_t w, int deg_p);

}  // namespace pqs
