#include "pqs/pieces.hpp"

#include <algorithm>

namespace pqs {

namespace {

/// sum_m c_m prod maps^m den^{D - |m|}, for q of total degree <= D.
EMPoly homogenized_compose(const EMPoly& q, const std::vector<EMPoly>& maps, const EMPoly& den, int D,
                           std::size_t nv) {
  std::vector<EMPoly> den_pow{EMPoly(nv, EpsScalar(1))};
  while (static_cast<int>(den_pow.size()) <= D) den_pow.push_back(den_pow.back() * den);
  EMPoly acc(nv);
  for (const auto& [m, c] : q.terms()) {
    int d = mono_degree(m);
    require(d <= D, ErrorKind::Integrity, "homogenization degree too small");
    EMPoly t = den_pow[static_cast<std::size_t>(D - d)].scaled(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= maps[i];
    acc += t;
  }
  return acc;
}

std::vector<std::size_t> with_index(std::vector<std::size_t> s, std::size_t i) {
  s.insert(std::upper_bound(s.begin(), s.end(), i), i);
  return s;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t row_coordinate(const Problem& prob, std::size_t row) {
  require(row + 1 < prob.n(), ErrorKind::Dimension, "row index out of range");
  return row < prob.dist ? row : row + 1;
}

PhiData phi_data(const Problem& prob) {
  std::size_t n = prob.n(), k = prob.k();
  require(n >= 1, ErrorKind::Domain, "phi_data needs n >= 1");
  std::vector<EMPoly> pj;
  for (std::size_t j = 0; j < k; ++j) pj.push_back(prob.p.partial(j));
  PhiData d{PolyMatrix<EpsScalar>(n - 1, n, k), std::vector<EMPoly>(n - 1, EMPoly(k))};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t x = row_coordinate(prob, i);
    for (std::size_t j = 0; j < k; ++j) {
      const auto& q = prob.Q.comps[j];
      for (std::size_t c = 0; c < n; ++c)
        if (!q.H[x][c].is_zero()) d.Phi.at(i, c) += pj[j].scaled(q.H[x][c]);
      if (!q.b[x].is_zero()) d.b[i] -= pj[j].scaled(q.b[x]);
    }
  }
  return d;
}

std::size_t piece_count(std::size_t n, std::size_t r) {
  std::size_t s = 0;
  for (std::size_t m = r; m + 1 <= n; ++m) s += binom(n - 1, m) * binom(n, m);
  return s;
}

int piece_degree_bound(std::size_t w, int deg_p) {
  int m = static_cast<int>(w), e = std::max(deg_p - 1, 0);
  return std::max({deg_p, 2 * m * e + 2, (m + 1) * e});
}

Piece make_piece(const Problem& prob, const PhiData& phi, const IndexPair& pair) {
  std::size_t n = prob.n(), k = prob.k(), m = pair.W.size();
  require(pair.U.size() == m && m + 1 <= n, ErrorKind::Dimension, "piece index sets must satisfy |U| = |W| <= n - 1");
  Piece pc;
  pc.pair = pair;
  pc.free = complement(pair.W, n);
  std::size_t nt = pc.free.size(), nv = k + nt;

  PolyMatrix<EpsScalar> Phi(phi.Phi.rows(), n, nv);
  for (std::size_t i = 0; i < Phi.rows(); ++i)
    for (std::size_t c = 0; c < n; ++c) Phi.at(i, c) = phi.Phi.at(i, c).with_extra_vars(nt);
  std::vector<EMPoly> b;
  for (const auto& x : phi.b) b.push_back(x.with_extra_vars(nt));
  auto T = [&](std::size_t f) { return EMPoly::var(nv, k + f); };

  PolyMatrix<EpsScalar> Psi = submatrix(Phi, pair);
  PolyMatrix<EpsScalar> adj = adjugate(Psi);
  pc.omega = det(Psi);

  std::vector<EMPoly> bU, rhs;
  for (std::size_t i = 0; i < m; ++i) {
    bU.push_back(b[pair.U[i]]);
    EMPoly r = b[pair.U[i]];
    for (std::size_t f = 0; f < nt; ++f) r -= Phi.at(pair.U[i], pc.free[f]) * T(f);
    rhs.push_back(std::move(r));
  }
  auto apply_adj = [&](const std::vector<EMPoly>& v) {
    std::vector<EMPoly> out(m, EMPoly(nv));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out[i] += adj.at(i, j) * v[j];
    return out;
  };
  pc.theta = apply_adj(rhs);

  // p(Y) = level
  pc.equations.push_back(prob.p.with_extra_vars(nt) - EMPoly(nv, prob.level));
  // Omega^2 Y = Omega^2 Q(phi^{-1}(Y, T))
  std::vector<EMPoly> xmap(n, EMPoly(nv));
  for (std::size_t i = 0; i < m; ++i) xmap[pair.W[i]] = pc.theta[i];
  for (std::size_t f = 0; f < nt; ++f) xmap[pc.free[f]] = pc.omega * T(f);
  EMPoly om2 = pc.omega * pc.omega;
  for (std::size_t j = 0; j < k; ++j)
    pc.equations.push_back(om2 * EMPoly::var(nv, j) - homogenized_compose(prob.Q.poly(j), xmap, pc.omega, 2, nv));
  // Omega b_u = Phi_{uW} adj(Psi) b_U for rows u outside U
  std::vector<EMPoly> w = apply_adj(bU);
  std::vector<std::size_t> Ubar = complement(pair.U, Phi.rows());
  for (std::size_t u : Ubar) {
    EMPoly e = pc.omega * b[u];
    for (std::size_t i = 0; i < m; ++i) e -= Phi.at(u, pair.W[i]) * w[i];
    pc.equations.push_back(std::move(e));
  }
  // bordering minors vanish
  for (std::size_t u : Ubar)
    for (std::size_t c : pc.free) pc.equations.push_back(det(submatrix(Phi, IndexPair{with_index(pair.U, u), with_index(pair.W, c)})));
  pc.inequation = pc.omega;
  return pc;
}

std::vector<Piece> enum_pieces(const Problem& prob, std::size_t r) {
  require(prob.k() >= 1, ErrorKind::Domain, "pieces need k >= 1 (no p_j)");
  prob.validate();
  std::size_t n = prob.n();
  std::vector<Piece> out;
  if (n == 0 || r + 1 > n) return out;
  PhiData phi = phi_data(prob);
  for (const auto& pair : enum_uw(n - 1, n, r)) {
    if (pair.W.size() + 1 > n) continue;
    out.push_back(make_piece(prob, phi, pair));
  }
  return out;
}

RationalMap piece_inverse(const Piece& piece, const Problem& prob) {
  std::size_t n = prob.n(), nv = piece.nvars(), k = prob.k();
  RationalMap rm{std::vector<EMPoly>(n, EMPoly(nv)), piece.omega};
  for (std::size_t i = 0; i < piece.pair.W.size(); ++i) rm.num[piece.pair.W[i]] = piece.theta[i];
  for (std::size_t f = 0; f < piece.free.size(); ++f) rm.num[piece.free[f]] = piece.omega * EMPoly::var(nv, k + f);
  return rm;
}

std::vector<EpsScalar> piece_forward(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& x) {
  std::vector<EpsScalar> out = prob.Q.eval(x);
  for (std::size_t f : piece.free) out.push_back(x[f]);
  return out;
}

std::vector<EpsScalar> piece_backward(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& yt) {
  require(yt.size() == piece.nvars(), ErrorKind::Dimension, "piece point arity mismatch");
  EpsScalar om = piece.omega.eval(yt);
  require(!om.is_zero(), ErrorKind::Domain, "omega vanishes at the point");
  std::vector<EpsScalar> x(prob.n(), EpsScalar(0));
  for (std::size_t i = 0; i < piece.pair.W.size(); ++i) x[piece.pair.W[i]] = exact_quo(piece.theta[i].eval(yt), om);
  for (std::size_t f = 0; f < piece.free.size(); ++f) x[piece.free[f]] = yt[prob.k() + f];
  return x;
}

PieceXSide x_side(const Piece& piece, const Problem& prob) {
  std::size_t n = prob.n();
  std::vector<EMPoly> Q = prob.Q.polys();
  PieceXSide xs;
  xs.equations.push_back(prob.composed());
  PhiData phi = phi_data(prob);
  PolyMatrix<EpsScalar> PhiX(phi.Phi.rows(), n, n);
  for (std::size_t i = 0; i < PhiX.rows(); ++i)
    for (std::size_t c = 0; c < n; ++c) PhiX.at(i, c) = compose(phi.Phi.at(i, c), Q, n);
  for (std::size_t i = 0; i < PhiX.rows(); ++i) {
    EMPoly e = -compose(phi.b[i], Q, n);
    for (std::size_t c = 0; c < n; ++c) e += PhiX.at(i, c) * EMPoly::var(n, c);
    xs.equations.push_back(std::move(e));
  }
  for (std::size_t u : complement(piece.pair.U, PhiX.rows()))
    for (std::size_t c : piece.free)
      xs.equations.push_back(det(submatrix(PhiX, IndexPair{with_index(piece.pair.U, u), with_index(piece.pair.W, c)})));
  xs.inequation = det(submatrix(PhiX, piece.pair));
  std::vector<EMPoly> fwd = Q;
  for (std::size_t f : piece.free) fwd.push_back(EMPoly::var(n, f));
  EMPoly om = compose(piece.omega, fwd, n);
  for (std::size_t i = 0; i < piece.pair.W.size(); ++i)
    xs.roundtrip.push_back(compose(piece.theta[i], fwd, n) - om * EMPoly::var(n, piece.pair.W[i]));
  return xs;
}

bool on_piece(const Piece& piece, const Problem& prob, const std::vector<EpsScalar>& x) {
  require(x.size() == prob.n(), ErrorKind::Dimension, "point arity mismatch");
  PieceXSide xs = x_side(piece, prob);
  for (const auto& e : xs.equations)
    if (!e.eval(x).is_zero()) return false;
  return !xs.inequation.eval(x).is_zero();
}

}  // namespace pqs
