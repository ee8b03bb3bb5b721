#include "pqs/algebra0d.hpp"

#include <random>
#include <tuple>

namespace pqs {

QMPoly sep_form(long j, std::size_t m) {
  require(j >= 0, ErrorKind::Domain, "separating index must be nonnegative");
  require(m >= 1, ErrorKind::Domain, "separating form needs at least one variable");
  QMPoly a(m);
  Rat w = 1;
  for (std::size_t i = 0; i < m; ++i) {
    a += QMPoly::var(m, i).scaled(w);
    w *= Rat(j);
  }
  return a;
}

Rat specialize(const EpsScalar& x, const std::vector<Rat>& values) {
  require(values.size() >= x.tower_len(), ErrorKind::Dimension, "too few specialization values");
  Rat s = 0;
  for (const auto& [e, c] : x.terms()) {
    Rat t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) t *= rat_pow(values[k], static_cast<unsigned>(e[k]));
    s += t;
  }
  return s;
}

QPoly specialize(const EPoly& f, const std::vector<Rat>& values) {
  std::vector<Rat> c;
  c.reserve(f.coefs().size());
  for (const auto& x : f.coefs()) c.push_back(specialize(x, values));
  return QPoly(std::move(c));
}

QPoly multiplicity_part(const QPoly& f, int mu) {
  require(!f.is_zero() && mu >= 0, ErrorKind::Domain, "multiplicity part of the zero polynomial");
  auto sq = sqfree_decomposition(f);
  if (static_cast<std::size_t>(mu) >= sq.size()) return QPoly(Rat(1));
  return sq[static_cast<std::size_t>(mu)];
}

Rat as_rational(const EpsScalar& x) { return x.rational(); }

QPoly as_rational(const EPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.coefs().size());
  for (const auto& x : f.coefs()) c.push_back(x.rational());
  return QPoly(std::move(c));
}

namespace {

TowerPtr poly_tower(const std::vector<const EPoly*>& polys) {
  TowerPtr t;
  for (const auto* f : polys)
    for (const auto& c : f->coefs())
      if (c.tower_len() > tower_size(t)) t = c.tower();
  return t;
}

/// Multiplies by eps_last^{-o} (exact on the terms kept) and sets eps_last = 0.
EpsScalar shift_and_limit(const EpsScalar& x, const TowerPtr& t, int o) {
  if (x.is_zero()) return EpsScalar(Rat(0), shorten(t, 1));
  EpsScalar y = x.lifted(t);
  std::size_t p = tower_size(t) - 1;
  std::vector<EpsScalar::Term> terms;
  for (const auto& [e, c] : y.terms()) {
    if (e[p] != o) continue;
    Exps ee(e.begin(), e.end() - 1);
    terms.emplace_back(std::move(ee), c);
  }
  TowerPtr s = shorten(t, 1);
  if (tower_size(s) == 0) s = nullptr;
  return EpsScalar(s, std::move(terms));
}

int last_order(const EPoly& f, const TowerPtr& t) {
  int o = -1;
  std::size_t p = tower_size(t) - 1;
  for (const auto& c : f.coefs()) {
    if (c.is_zero()) continue;
    int d = c.lifted(t).min_degree_in(p);
    o = (o < 0) ? d : std::min(o, d);
  }
  return o;
}

EPoly stage(const EPoly& f, const TowerPtr& t, int o) {
  std::vector<EpsScalar> c;
  c.reserve(f.coefs().size());
  for (const auto& x : f.coefs()) c.push_back(shift_and_limit(x, t, o));
  return EPoly(std::move(c));
}

}  // namespace

std::pair<EPoly, OrderVec> hat_normalize(const EPoly& f, std::size_t inner) {
  require(!f.is_zero(), ErrorKind::Undefined, "hat-normalization of the zero polynomial");
  TowerPtr t = poly_tower({&f});
  std::size_t l = tower_size(t);
  OrderVec ov{Exps(l, 0)};
  inner = std::min(inner, l);
  EPoly cur = f;
  for (std::size_t s = 0; s < inner; ++s) {
    int o = last_order(cur, t);
    ov.exponents[tower_size(t) - 1] = o;
    cur = stage(cur, t, o);
    t = shorten(t, 1);
  }
  return {cur, ov};
}

std::vector<URep<EpsScalar>> limit_candidates(const std::vector<URep<EpsScalar>>& cands,
                                              std::size_t inner) {
  std::vector<URep<EpsScalar>> out;
  for (const auto& u : cands) {
    std::vector<const EPoly*> all{&u.f, &u.g0};
    for (const auto& g : u.g) all.push_back(&g);
    TowerPtr t = poly_tower(all);
    std::size_t steps = std::min(inner, tower_size(t));
    if (u.f.is_zero() || u.g0.is_zero()) continue;
    URep<EpsScalar> cur = u;
    bool ok = true;
    for (std::size_t s = 0; s < steps && ok; ++s) {
      int of = last_order(cur.f, t);
      cur.f = stage(cur.f, t, of);
      // the g-tuple shares one normalization so coordinate ratios are kept
      int og = -1;
      for (const EPoly* g : {&cur.g0}) {
        int d = g->is_zero() ? -1 : last_order(*g, t);
        if (d >= 0) og = (og < 0) ? d : std::min(og, d);
      }
      for (const auto& g : cur.g) {
        int d = g.is_zero() ? -1 : last_order(g, t);
        if (d >= 0) og = (og < 0) ? d : std::min(og, d);
      }
      if (og < 0) {
        ok = false;
        break;
      }
      cur.g0 = stage(cur.g0, t, og);
      for (auto& g : cur.g) g = stage(g, t, og);
      t = shorten(t, 1);
      if (cur.f.degree() <= 0 || cur.g0.is_zero()) ok = false;
    }
    if (!ok || cur.f.degree() <= 0 || cur.g0.is_zero()) continue;
    out.push_back(std::move(cur));
  }
  return out;
}

std::vector<std::vector<URep<EpsScalar>>> filter_good(
    const std::vector<std::vector<URep<EpsScalar>>>& groups, unsigned seed) {
  if (groups.size() <= 1) return groups;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(1, 97);
  std::vector<Rat> vals;
  for (int i = 0; i < 16; ++i) vals.push_back(make_rat(num(rng), 101 + num(rng)));
  using Score = std::tuple<int, int, int>;
  std::size_t best = groups.size();
  Score best_score;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (groups[gi].empty()) continue;
    const EPoly& chi = groups[gi].front().f;
    if (chi.is_zero()) continue;
    std::size_t L = tower_size(poly_tower({&chi}));
    std::vector<Rat> v = vals;
    while (v.size() < L) v.push_back(make_rat(num(rng), 211));
    QPoly sp = specialize(chi, v);
    int d1 = gcd(sp, sp.derivative()).degree();
    auto hat = hat_normalize(chi, L).first;
    QPoly h = as_rational(hat);
    int d2 = gcd(h, h.derivative()).degree();
    Score sc{-chi.degree(), d1, d2};
    if (best == groups.size() || sc < best_score) {
      best = gi;
      best_score = sc;
    }
  }
  if (best == groups.size()) return groups;
  return {groups[best]};
}

}  // namespace pqs
