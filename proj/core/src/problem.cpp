#include "pqs/problem.hpp"

#include <string>

namespace pqs {

void QuadMap::validate() const {
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& q = comps[j];
    std::string tag = "Q[" + std::to_string(j) + "]";
    require(q.H.size() == n, ErrorKind::Input, tag + ".H must have " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r)
      require(q.H[r].size() == n, ErrorKind::Input,
              tag + ".H row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        require(q.H[r][c] == q.H[c][r], ErrorKind::Input,
                tag + ".H is not symmetric at (" + std::to_string(r) + "," + std::to_string(c) + ")");
    require(q.b.size() == n, ErrorKind::Input, tag + ".b must have " + std::to_string(n) + " entries");
  }
}

QuadComponent quad_from_poly(const EMPoly& q) {
  require(q.total_degree() <= 2, ErrorKind::Domain, "quadratic component of degree > 2");
  std::size_t n = q.nvars();
  QuadComponent c{std::vector<std::vector<EpsScalar>>(n, std::vector<EpsScalar>(n, EpsScalar(0))),
                  std::vector<EpsScalar>(n, EpsScalar(0)), q.constant_term()};
  for (const auto& [m, x] : q.terms()) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < n; ++i)
      for (int e = 0; e < m[i]; ++e) at.push_back(i);
    if (at.size() == 1) c.b[at[0]] = x;
    else if (at.size() == 2 && at[0] == at[1]) c.H[at[0]][at[0]] = x * Rat(2);
    else if (at.size() == 2) c.H[at[0]][at[1]] = c.H[at[1]][at[0]] = x;
  }
  return c;
}

EMPoly QuadMap::poly(std::size_t j) const {
  require(j < comps.size(), ErrorKind::Dimension, "quadratic component index out of range");
  const auto& q = comps[j];
  EMPoly f(n, q.c);
  for (std::size_t r = 0; r < n; ++r) {
    Mono m(n, 0);
    m[r] = 1;
    f.add_term(m, q.b[r]);
    m[r] = 2;
    f.add_term(m, q.H[r][r] * make_rat(1, 2));
    m[r] = 1;
    for (std::size_t c = r + 1; c < n; ++c) {
      Mono mm = m;
      mm[c] = 1;
      f.add_term(mm, q.H[r][c]);
    }
  }
  return f;
}

std::vector<EMPoly> QuadMap::polys() const {
  std::vector<EMPoly> out;
  for (std::size_t j = 0; j < comps.size(); ++j) out.push_back(poly(j));
  return out;
}

std::vector<EpsScalar> QuadMap::eval(const std::vector<EpsScalar>& x) const {
  require(x.size() == n, ErrorKind::Dimension, "point arity mismatch");
  std::vector<EpsScalar> y;
  for (const auto& q : comps) {
    EpsScalar s = q.c;
    for (std::size_t r = 0; r < n; ++r) {
      EpsScalar hx(0);
      for (std::size_t c = 0; c < n; ++c) hx = hx + q.H[r][c] * x[c];
      s = s + x[r] * (hx * make_rat(1, 2) + q.b[r]);
    }
    y.push_back(s);
  }
  return y;
}

void Problem::validate() const {
  Q.validate();
  require(p.nvars() == Q.k(), ErrorKind::Input,
          "p has " + std::to_string(p.nvars()) + " variables but Q has " + std::to_string(Q.k()) + " components");
  require(dist < Q.n || Q.n == 0, ErrorKind::Input, "distinguished coordinate out of range");
}

EMPoly Problem::composed() const {
  return compose(p, Q.polys(), Q.n) - EMPoly(Q.n, level);
}

TowerPtr problem_tower(const Problem& prob) {
  TowerPtr t;
  auto see = [&](const EpsScalar& x) {
    if (x.tower_len() > tower_size(t)) t = x.tower();
  };
  for (const auto& [m, c] : prob.p.terms()) see(c);
  see(prob.level);
  for (const auto& q : prob.Q.comps) {
    see(q.c);
    for (const auto& x : q.b) see(x);
    for (const auto& row : q.H)
      for (const auto& x : row) see(x);
  }
  return t;
}

}  // namespace pqs
