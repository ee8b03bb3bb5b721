#pragma once

#include <random>
#include <string>
#include <vector>

#include "pqs/parse.hpp"
#include "pqs/problem.hpp"

namespace testing_support {

using namespace pqs;

inline QMPoly qp(const std::string& s, std::size_t n, const std::string& stem = "X") {
  return parse_qpoly(s, var_names(stem, n));
}

inline EMPoly ep(const std::string& s, std::size_t n, const TowerPtr& t, const std::string& stem = "S") {
  return parse_epoly(s, var_names(stem, n), t);
}

inline Rat random_rat(std::mt19937& rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return make_rat(num(rng), den(rng));
}

inline QMPoly random_qpoly(std::mt19937& rng, std::size_t n, int deg, int terms) {
  QMPoly p(n);
  std::uniform_int_distribution<int> e(0, deg);
  for (int t = 0; t < terms; ++t) {
    Mono m(n, 0);
    int budget = deg;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = std::min(e(rng), budget);
      budget -= m[i];
    }
    p.add_term(m, random_rat(rng));
  }
  return p;
}

inline EpsScalar random_eps(std::mt19937& rng, const TowerPtr& t, int terms = 3, int deg = 3) {
  std::vector<EpsScalar::Term> v;
  std::uniform_int_distribution<int> e(0, deg);
  for (int i = 0; i < terms; ++i) {
    Exps x(tower_size(t));
    for (auto& k : x) k = e(rng);
    v.emplace_back(x, random_rat(rng));
  }
  return EpsScalar(t, v);
}

/// Problem from p (in Y1..Yk) and the components of Q as polynomials in X1..Xn.
inline Problem problem(const std::string& p, const std::vector<std::string>& q, std::size_t n,
                       const TowerPtr& t = nullptr, const EpsScalar& level = EpsScalar(0)) {
  Problem pr;
  pr.p = parse_epoly(p, var_names("Y", q.size()), t);
  pr.Q.n = n;
  for (const auto& s : q) pr.Q.comps.push_back(quad_from_poly(parse_epoly(s, var_names("X", n), t)));
  pr.level = level;
  return pr;
}

}  // namespace testing_support
