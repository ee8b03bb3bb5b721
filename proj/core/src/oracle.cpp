#include "pqs/oracle.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numeric>

namespace pqs {

namespace {

struct Interval {
  double lo, hi;
};

Interval mul(Interval a, Interval b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval ipow(Interval a, int e) {
  if (e == 0) return {1, 1};
  double l = std::pow(a.lo, e), h = std::pow(a.hi, e);
  if (e % 2 == 1) return {l, h};
  if (a.lo <= 0 && a.hi >= 0) return {0, std::max(l, h)};
  return {std::min(l, h), std::max(l, h)};
}

/// Natural interval extension of f over a box, widened by a relative margin.
bool may_vanish(const std::vector<std::pair<Mono, double>>& f, const std::vector<Interval>& box) {
  double lo = 0, hi = 0, mag = 0;
  for (const auto& [m, c] : f) {
    Interval t{c, c};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = mul(t, ipow(box[i], m[i]));
    lo += t.lo;
    hi += t.hi;
    mag += std::max(std::abs(t.lo), std::abs(t.hi));
  }
  double margin = 1e-9 * (mag + 1);
  return lo - margin <= 0 && hi + margin >= 0;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

QPoly to_upoly(const QMPoly& p) {
  require(p.nvars() == 1, ErrorKind::Dimension, "expected a univariate polynomial");
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.total_degree() + 1, 0)));
  for (const auto& [m, x] : p.terms()) c[static_cast<std::size_t>(m[0])] = x;
  return QPoly(std::move(c));
}

QMPoly from_upoly(const QPoly& p) {
  QMPoly r(1);
  for (int i = 0; i <= p.degree(); ++i) r.add_term(Mono{i}, p[static_cast<std::size_t>(i)]);
  return r;
}

/// Determinant of the Sylvester-type matrix whose leading columns are the
/// coefficients of X^{top}..X^{j+1} and whose last column is X^i.
QPoly sres_coeff(const std::vector<QPoly>& A, const std::vector<QPoly>& B, int j, int i) {
  int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
  int size = m + n - 2 * j;
  PolyMatrix<Rat> M(static_cast<std::size_t>(size), static_cast<std::size_t>(size), 1);
  int top = m + n - j - 1;
  auto col_of = [&](int deg) -> int {
    if (deg == i) return size - 1;
    if (deg > j && deg <= top) return top - deg;
    return -1;
  };
  int row = 0;
  auto put = [&](const std::vector<QPoly>& P, int shift) {
    for (int d = 0; d < static_cast<int>(P.size()); ++d) {
      int c = col_of(d + shift);
      if (c >= 0 && !P[static_cast<std::size_t>(d)].is_zero())
        M.at(static_cast<std::size_t>(row), static_cast<std::size_t>(c)) = from_upoly(P[static_cast<std::size_t>(d)]);
    }
    ++row;
  };
  for (int s = n - j - 1; s >= 0; --s) put(A, s);
  for (int s = m - j - 1; s >= 0; --s) put(B, s);
  return to_upoly(det(M));
}

/// Coefficients in variable 1 of a bivariate polynomial, as polynomials in variable 0.
std::vector<QPoly> split(const QMPoly& F) {
  auto cs = F.coefficients_in(1);
  std::vector<QPoly> out;
  for (const auto& c : cs) out.push_back(to_upoly(c.remapped(1, {0, 0})));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace

GridReport grid_components(const Problem& prob, const Rat& lo, const Rat& hi, const Rat& resolution) {
  std::size_t n = prob.n();
  require(n >= 1 && n <= 3, ErrorKind::Resource, "grid oracle supports 1 <= n <= 3");
  require(resolution > 0 && hi > lo, ErrorKind::Domain, "grid oracle needs a positive resolution and a nonempty box");
  QMPoly F = to_rational(prob.composed());
  std::vector<std::pair<Mono, double>> fd;
  for (const auto& [m, c] : F.terms()) fd.emplace_back(m, c.get_d());
  Rat cells_r = (hi - lo) / resolution;
  std::size_t side = static_cast<std::size_t>(std::ceil(cells_r.get_d()));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= side;
  std::vector<char> hit(total, 0);
  std::vector<std::size_t> idx(n);
  auto decode = [&](std::size_t c) {
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = c % side;
      c /= side;
    }
  };
  for (std::size_t c = 0; c < total; ++c) {
    decode(c);
    std::vector<Interval> box;
    for (std::size_t i = 0; i < n; ++i) {
      Rat a = lo + resolution * Rat(static_cast<long>(idx[i]));
      box.push_back({a.get_d(), Rat(a + resolution).get_d()});
    }
    hit[c] = may_vanish(fd, box);
  }
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t nb = 1;
  for (std::size_t i = 0; i < n; ++i) nb *= 3;
  for (std::size_t c = 0; c < total; ++c) {
    if (!hit[c]) continue;
    decode(c);
    for (std::size_t d = 0; d < nb; ++d) {
      std::size_t t = d, other = 0, mul = 1;
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        long v = static_cast<long>(idx[i]) + static_cast<long>(t % 3) - 1;
        t /= 3;
        if (v < 0 || v >= static_cast<long>(side)) ok = false;
        other += static_cast<std::size_t>(std::max(v, 0L)) * mul;
        mul *= side;
      }
      if (ok && hit[other]) parent[find(parent, c)] = find(parent, other);
    }
  }
  GridReport rep;
  rep.resolution = resolution;
  std::map<std::size_t, std::size_t> label;
  for (std::size_t c = 0; c < total; ++c) {
    if (!hit[c]) continue;
    std::size_t r = find(parent, c);
    decode(c);
    std::vector<Rat> centre;
    for (std::size_t i = 0; i < n; ++i) centre.push_back(lo + resolution * (Rat(static_cast<long>(idx[i])) + make_rat(1, 2)));
    auto it = label.find(r);
    if (it == label.end()) {
      it = label.emplace(r, rep.count++).first;
      rep.samples.push_back(centre);
      rep.cells.emplace_back();
    }
    rep.cells[it->second].push_back(std::move(centre));
  }
  return rep;
}

std::vector<RealURep> resultant_critical(const Problem& prob) {
  require(prob.n() == 2, ErrorKind::Domain, "resultant oracle needs n = 2");
  std::size_t d = prob.dist, o = 1 - prob.dist;
  QMPoly F0 = to_rational(prob.composed());
  if (F0.is_zero()) fail(ErrorKind::Inconclusive, "p(Q(X)) - level vanishes identically");
  if (F0.is_constant()) return {};
  QMPoly G0 = F0.partial(o);
  for (long lambda : {0L, 1L, -1L, 2L, -2L, 3L, 5L, -7L}) {
    // X_d = u - lambda X_o; variables (u, X_o)
    std::vector<QMPoly> sub(2, QMPoly(2));
    sub[d] = QMPoly::var(2, 0) - QMPoly::var(2, 1).scaled(Rat(lambda));
    sub[o] = QMPoly::var(2, 1);
    auto A = split(compose(F0, sub, 2)), B = split(compose(G0, sub, 2));
    if (A.size() < 2 || B.size() < 2) continue;
    if (A.back().degree() != 0) continue;
    QPoly R = sres_coeff(A, B, 0, 0);
    if (R.is_zero()) fail(ErrorKind::Inconclusive, "resultant vanishes identically (critical set not finite)");
    QPoly s11, s10;
    if (B.size() == 2) {
      s11 = B[1];
      s10 = B[0];
    } else {
      s11 = sres_coeff(A, B, 1, 1);
      s10 = sres_coeff(A, B, 1, 0);
    }
    QPoly f = sqfree_part(R);
    if (f.degree() <= 0) return {};
    bool good = true;
    for (const auto& iv : isolate(f))
      if (sign_at(f, iv, s11) == 0) good = false;
    if (!good) continue;
    std::vector<RealURep> out;
    QPoly u = QPoly::var();
    std::vector<QPoly> g(2);
    g[o] = reduce_mod(-s10, f);
    g[d] = reduce_mod(u * s11 + s10.scaled(Rat(lambda)), f);
    QPoly g0 = reduce_mod(s11, f);
    for (const auto& [iv, sigma] : thom(f)) out.push_back(RealURep{f, g0, g, sigma});
    return out;
  }
  fail(ErrorKind::Inconclusive, "no shear separates the critical points");
}

}  // namespace pqs
