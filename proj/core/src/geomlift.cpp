#include "pqs/geomlift.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pqs {

namespace {

TowerPtr longest_tower(const std::vector<const EMPoly*>& polys) {
  TowerPtr t;
  for (const auto* p : polys)
    for (const auto& [m, c] : p->terms())
      if (c.tower_len() > tower_size(t)) t = c.tower();
  return t;
}

EMPoly one(std::size_t nv) { return EMPoly(nv, EpsScalar(1)); }

std::string fresh_name(const TowerPtr& t, std::string stem) {
  auto taken = [&](const std::string& s) { return t && t->find(s) >= 0; };
  while (taken(stem)) stem += "'";
  return stem;
}

}  // namespace

EMPoly lift_poly(const EMPoly& p, const TowerPtr& t) {
  return p.map_coeffs([&](const EpsScalar& c) { return c.lifted(t); });
}

LiftState algebraize(const EMPoly& F0, const RationalMap& Psi, bool assume_nonneg) {
  std::size_t nv = F0.nvars();
  require(Psi.den.nvars() == nv, ErrorKind::Dimension, "denominator variable count mismatch");
  for (const auto& o : Psi.num) require(o.nvars() == nv, ErrorKind::Dimension, "numerator variable count mismatch");
  require(!Psi.den.is_zero(), ErrorKind::Domain, "rational map with zero denominator");
  LiftState s;
  EMPoly F0s = assume_nonneg ? F0 : F0 * F0;
  EMPoly Yq = EMPoly::var(nv + 1, nv);
  EMPoly d = one(nv + 1) - Yq * Psi.den.with_extra_vars(1);
  s.F = F0s.with_extra_vars(1) + d * d;
  for (const auto& o : Psi.num) s.P.push_back(Yq * o.with_extra_vars(1));
  s.yq = static_cast<int>(nv);
  std::vector<const EMPoly*> all{&s.F};
  for (const auto& p : s.P) all.push_back(&p);
  s.tower = longest_tower(all);
  return s;
}

LiftState algebraize_constant(const EMPoly& F0, const RationalMap& Psi, bool assume_nonneg) {
  require(Psi.den.is_constant() && !Psi.den.is_zero() && Psi.den.constant_term().is_rational(), ErrorKind::Domain,
          "denominator is not a nonzero rational constant");
  Rat inv = 1 / Psi.den.constant_term().rational();
  LiftState s;
  s.F = assume_nonneg ? F0 : F0 * F0;
  for (const auto& o : Psi.num) {
    require(o.nvars() == F0.nvars(), ErrorKind::Dimension, "numerator variable count mismatch");
    s.P.push_back(o.scaled(EpsScalar(inv)));
  }
  std::vector<const EMPoly*> all{&s.F};
  for (const auto& p : s.P) all.push_back(&p);
  s.tower = longest_tower(all);
  return s;
}

LiftState add_norm_var(LiftState s) {
  std::size_t nv = s.nvars();
  EMPoly sum(nv + 1);
  for (auto& p : s.P) {
    p = p.with_extra_vars(1);
    sum += p * p;
  }
  EMPoly d = EMPoly::var(nv + 1, nv) - sum;
  s.F = s.F.with_extra_vars(1) + d * d;
  s.y0 = static_cast<int>(nv);
  return s;
}

LiftState bound_mu(LiftState s, const TowerPtr& tower, std::size_t mu_pos) {
  require(mu_pos < tower_size(tower), ErrorKind::Domain, "mu is not in the tower");
  require(mu_pos >= tower_size(s.tower), ErrorKind::Domain, "mu must lie below every infinitesimal of the system");
  std::size_t nv = s.nvars() + 1;
  s.F = lift_poly(s.F, tower).with_extra_vars(1);
  for (auto& p : s.P) p = lift_poly(p, tower).with_extra_vars(1);
  EMPoly sum(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    EMPoly y = EMPoly::var(nv, j);
    sum += y * y;
  }
  EpsScalar mu = EpsScalar::eps(tower, mu_pos);
  EMPoly d = one(nv) - sum.scaled(mu * mu);
  s.F += d * d;
  s.ybound = static_cast<int>(nv - 1);
  s.tower = tower;
  s.mu_pos = static_cast<int>(mu_pos);
  return s;
}

int dbar_for(int d) {
  int e = d + 1;
  if (e % 2 != 0) ++e;
  return std::max(e, 2);
}

LiftState smooth_zeta(LiftState s, const TowerPtr& tower, std::size_t zeta_pos) {
  require(zeta_pos + 1 == tower_size(tower), ErrorKind::Domain, "zeta must be the innermost infinitesimal");
  require(s.mu_pos >= 0 ? static_cast<int>(zeta_pos) > s.mu_pos : zeta_pos >= tower_size(s.tower), ErrorKind::Domain,
          "zeta must lie below every infinitesimal of the system");
  require(s.y0 >= 0, ErrorKind::Domain, "smoothing needs the norm variable");
  std::size_t nv = s.nvars();
  s.F = lift_poly(s.F, tower);
  for (auto& p : s.P) p = lift_poly(p, tower);
  s.dbar = dbar_for(s.F.total_degree());
  EMPoly G(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    EMPoly y = EMPoly::var(nv, j);
    G += y.pow(s.dbar);
    if (static_cast<int>(j) != s.y0) G += y * y;
  }
  if (s.mu_pos >= 0) G = G.scaled(EpsScalar::eps(tower, static_cast<std::size_t>(s.mu_pos), s.dbar));
  G -= EMPoly(nv, EpsScalar(Rat(2 * static_cast<long>(nv) - 1)));
  EpsScalar zeta = EpsScalar::eps(tower, zeta_pos);
  s.F = G.scaled(zeta) + s.F.scaled(EpsScalar(1) - zeta);
  s.tower = tower;
  s.zeta_pos = static_cast<int>(zeta_pos);
  return s;
}

std::size_t critical_dimension(const LiftState& s) {
  require(s.dbar >= 2, ErrorKind::Domain, "state is not smoothed");
  std::size_t N = static_cast<std::size_t>(s.dbar), f = static_cast<std::size_t>(s.dbar - 1);
  for (std::size_t j = 1; j < s.nvars(); ++j) {
    if (N > std::numeric_limits<std::size_t>::max() / f) return std::numeric_limits<std::size_t>::max();
    N *= f;
  }
  return N;
}

SpecialBasis<EpsScalar> critical_basis(const LiftState& s) {
  require(s.dbar >= 2 && s.y0 >= 0, ErrorKind::Domain, "state is not smoothed");
  std::size_t nv = s.nvars(), y0 = static_cast<std::size_t>(s.y0);
  std::vector<EMPoly> gens(nv, EMPoly(nv));
  EMPoly red = s.F;
  EpsScalar inv(make_rat(1, s.dbar));
  for (std::size_t j = 0; j < nv; ++j) {
    if (j == y0) continue;
    gens[j] = s.F.partial(j);
    red -= (EMPoly::var(nv, j) * gens[j]).scaled(inv);
  }
  gens[y0] = red;
  try {
    return validate_special(gens);
  } catch (const Error& e) {
    fail(ErrorKind::Integrity, std::string("critical system is not a special basis: ") + e.what());
  }
}

std::vector<URep<EpsScalar>> limits_of_image(const EMPoly& F0, const RationalMap& Psi, std::size_t inner,
                                             const ImageLimitOptions& opt) {
  std::vector<const EMPoly*> all{&F0, &Psi.den};
  for (const auto& p : Psi.num) all.push_back(&p);
  TowerPtr base = longest_tower(all);
  std::size_t L = tower_size(base);
  require(inner <= L, ErrorKind::Domain, "more limits requested than infinitesimals present");
  require(!Psi.num.empty(), ErrorKind::Dimension, "the rational map needs at least one component");
  bool const_den = Psi.den.is_constant() && !Psi.den.is_zero() && Psi.den.constant_term().is_rational();
  LiftState s = const_den ? algebraize_constant(F0, Psi, opt.assume_nonneg) : algebraize(F0, Psi, opt.assume_nonneg);
  s = add_norm_var(s);
  std::vector<std::string> extra;
  if (!opt.assume_bounded) extra.push_back(fresh_name(base, "mu"));
  extra.push_back(fresh_name(base, "zeta"));
  TowerPtr t = extend(base, extra);
  if (!opt.assume_bounded) s = bound_mu(s, t, L);
  s = smooth_zeta(s, t, tower_size(t) - 1);
  std::size_t N = critical_dimension(s);
  if (opt.n_cap > 0 && N > opt.n_cap)
    fail(ErrorKind::Resource, "quotient dimension N = " + std::to_string(N) + " exceeds N_cap = " + std::to_string(opt.n_cap));
  SpecialAlgebra<EpsScalar> A(critical_basis(s));
  std::size_t drop = inner + extra.size();
  std::vector<std::vector<URep<EpsScalar>>> groups;
  for_each_separating(A, s.P, opt.cand, [&](long j, const CharpolyResult<EpsScalar>& res) {
    std::vector<URep<EpsScalar>> group;
    for (std::size_t mu = 0; mu < N; ++mu) {
      URep<EpsScalar> u;
      u.f = res.chi;
      u.g0 = nth_derivative(res.g[0], static_cast<int>(mu));
      for (std::size_t i = 1; i < res.g.size(); ++i) u.g.push_back(nth_derivative(res.g[i], static_cast<int>(mu)));
      u.mu = static_cast<int>(mu);
      u.j = j;
      if (u.g0.is_zero()) break;
      group.push_back(std::move(u));
    }
    auto lim = limit_candidates(group, drop);
    if (!lim.empty()) groups.push_back(std::move(lim));
    return true;
  });
  if (groups.empty()) return {};
  return filter_good(groups, opt.seed).front();
}

}  // namespace pqs
