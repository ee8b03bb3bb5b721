#include "pqs/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pqs {

namespace {

struct OrdGreater {
  MonoOrder ord;
  bool operator()(const Mono& a, const Mono& b) const { return mono_greater(a, b, ord); }
};

/// Terms sorted by decreasing monomial; begin() is the leading term.
using Work = std::map<Mono, Rat, OrdGreater>;

struct GPoly {
  std::vector<std::pair<Mono, Rat>> terms;  // decreasing
  const Mono& lm() const { return terms.front().first; }
};

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Mono mono_sub(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool disjoint(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Work to_work(const QMPoly& f, MonoOrder ord) {
  Work w(OrdGreater{ord});
  for (const auto& [m, c] : f.terms()) w.emplace(m, c);
  return w;
}

GPoly monic_of(const Work& w) {
  GPoly g;
  Rat inv = 1 / w.begin()->second;
  for (const auto& [m, c] : w) g.terms.emplace_back(m, c * inv);
  return g;
}

QMPoly to_mpoly(std::size_t n, const GPoly& g) {
  QMPoly r(n);
  for (const auto& [m, c] : g.terms) r.add_term(m, c);
  return r;
}

void axpy(Work& w, const Mono& shift, const Rat& c, const GPoly& g, std::size_t skip) {
  for (std::size_t t = skip; t < g.terms.size(); ++t) {
    Mono m = g.terms[t].first;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
    Rat v = c * g.terms[t].second;
    auto [it, inserted] = w.try_emplace(std::move(m), v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) w.erase(it);
    }
  }
}

/// Full reduction of f by the monic polynomials `basis`.
Work reduce(Work f, const std::vector<const GPoly*>& basis) {
  Work r(f.key_comp());
  while (!f.empty()) {
    auto it = f.begin();
    const GPoly* div = nullptr;
    for (const GPoly* g : basis)
      if (divides(g->lm(), it->first)) {
        div = g;
        break;
      }
    if (!div) {
      r.insert(*it);
      f.erase(it);
      continue;
    }
    Mono shift = mono_sub(it->first, div->lm());
    Rat c = -it->second;
    f.erase(it);
    axpy(f, shift, c, *div, 1);
  }
  return r;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

}  // namespace

bool mono_greater(const Mono& a, const Mono& b, MonoOrder ord) {
  std::size_t start = 0;
  if (ord == MonoOrder::Elim0 && !a.empty()) {
    if (a[0] != b[0]) return a[0] > b[0];
    start = 1;
  }
  int da = 0, db = 0;
  for (std::size_t i = start; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > start;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Mono leading_mono(const QMPoly& f, MonoOrder ord) {
  require(!f.is_zero(), ErrorKind::Domain, "leading monomial of zero");
  const Mono* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || mono_greater(m, *best, ord)) best = &m;
  return *best;
}

std::vector<QMPoly> groebner_basis(const std::vector<QMPoly>& gens, MonoOrder ord) {
  std::size_t n = gens.empty() ? 0 : gens.front().nvars();
  std::vector<GPoly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto update = [&](std::size_t h) {
    const Mono& lh = polys[h].lm();
    std::deque<Pair> C;
    for (std::size_t g : active) C.push_back({h, g, mono_lcm(lh, polys[g].lm())});
    std::vector<Pair> D;
    while (!C.empty()) {
      Pair p = C.front();
      C.pop_front();
      bool keep = disjoint(lh, polys[p.j].lm());
      if (!keep) {
        auto hit = [&](const Pair& q) { return divides(q.lcm, p.lcm); };
        keep = std::none_of(C.begin(), C.end(), hit) && std::none_of(D.begin(), D.end(), hit);
      }
      if (keep) D.push_back(std::move(p));
    }
    std::vector<Pair> B;
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && mono_lcm(polys[p.i].lm(), lh) != p.lcm &&
                  mono_lcm(lh, polys[p.j].lm()) != p.lcm;
      if (!drop) B.push_back(std::move(p));
    }
    for (auto& p : D)
      if (!disjoint(lh, polys[p.j].lm())) B.push_back(std::move(p));
    pairs = std::move(B);
    std::vector<std::size_t> A;
    for (std::size_t g : active)
      if (!divides(lh, polys[g].lm())) A.push_back(g);
    A.push_back(h);
    active = std::move(A);
  };

  auto basis_ptrs = [&] {
    std::vector<const GPoly*> v;
    for (std::size_t g : active) v.push_back(&polys[g]);
    return v;
  };

  auto add = [&](const Work& w) -> bool {
    if (w.empty()) return false;
    polys.push_back(monic_of(w));
    if (mono_degree(polys.back().lm()) == 0) return true;
    update(polys.size() - 1);
    return false;
  };

  bool unit = false;
  for (const auto& g : gens) {
    require(g.nvars() == n, ErrorKind::Dimension, "groebner_basis variable count mismatch");
    if (g.is_zero()) continue;
    if ((unit = add(reduce(to_work(g, ord), basis_ptrs())))) break;
  }
  while (!unit && !pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int da = mono_degree(a.lcm), db = mono_degree(b.lcm);
      if (da != db) return da < db;
      return mono_greater(b.lcm, a.lcm, ord);
    });
    Pair p = *best;
    pairs.erase(best);
    Work s(OrdGreater{ord});
    axpy(s, mono_sub(p.lcm, polys[p.i].lm()), Rat(1), polys[p.i], 1);
    axpy(s, mono_sub(p.lcm, polys[p.j].lm()), Rat(-1), polys[p.j], 1);
    unit = add(reduce(std::move(s), basis_ptrs()));
  }
  if (unit) return {QMPoly(n, Rat(1))};

  // minimal, then reduced
  std::vector<std::size_t> minimal;
  for (std::size_t a : active) {
    bool redundant = false;
    for (std::size_t b : active)
      if (a != b && divides(polys[b].lm(), polys[a].lm()) && (polys[b].lm() != polys[a].lm() || b < a)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(a);
  }
  std::vector<GPoly> out;
  for (std::size_t a : minimal) {
    std::vector<const GPoly*> others;
    for (std::size_t b : minimal)
      if (b != a) others.push_back(&polys[b]);
    Work w(OrdGreater{ord});
    w.emplace(polys[a].terms.front());
    Work tail(OrdGreater{ord});
    for (std::size_t t = 1; t < polys[a].terms.size(); ++t) tail.insert(polys[a].terms[t]);
    for (auto& term : reduce(std::move(tail), others)) w.insert(term);
    out.push_back(monic_of(w));
  }
  std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) { return mono_greater(b.lm(), a.lm(), ord); });
  std::vector<QMPoly> G;
  for (const auto& g : out) G.push_back(to_mpoly(n, g));
  return G;
}

QMPoly normal_form(const QMPoly& f, const std::vector<QMPoly>& G, MonoOrder ord) {
  std::vector<GPoly> gs;
  for (const auto& g : G) {
    require(g.nvars() == f.nvars(), ErrorKind::Dimension, "normal_form variable count mismatch");
    gs.push_back(monic_of(to_work(g, ord)));
  }
  std::vector<const GPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  QMPoly r(f.nvars());
  for (const auto& [m, c] : reduce(to_work(f, ord), ptrs)) r.add_term(m, c);
  return r;
}

bool zero_dimensional(const std::vector<QMPoly>& G, MonoOrder ord) {
  if (G.empty()) return false;
  std::size_t n = G.front().nvars();
  std::vector<bool> hit(n, false);
  for (const auto& g : G) {
    Mono m = leading_mono(g, ord);
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++nz;
        at = i;
      }
    if (nz == 0) return true;
    if (nz == 1) hit[at] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Mono> staircase(const std::vector<QMPoly>& G, MonoOrder ord) {
  require(zero_dimensional(G, ord), ErrorKind::Domain, "staircase of a positive-dimensional ideal");
  std::size_t n = G.front().nvars();
  std::vector<Mono> lms;
  for (const auto& g : G) lms.push_back(leading_mono(g, ord));
  auto outside = [&](const Mono& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Mono& l) { return divides(l, m); });
  };
  std::set<Mono> seen;
  std::vector<Mono> out, todo;
  Mono zero(n, 0);
  if (outside(zero)) todo.push_back(zero);
  while (!todo.empty()) {
    Mono m = todo.back();
    todo.pop_back();
    if (!seen.insert(m).second) continue;
    out.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Mono next = m;
      ++next[i];
      if (!seen.count(next) && outside(next)) todo.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return mono_greater(b, a, ord); });
  return out;
}

QMPoly exact_divide(const QMPoly& a, const QMPoly& b) {
  require(!b.is_zero(), ErrorKind::Domain, "division by the zero polynomial");
  require(a.nvars() == b.nvars(), ErrorKind::Dimension, "exact_divide variable count mismatch");
  const auto ord = MonoOrder::Grevlex;
  Work r = to_work(a, ord);
  Work bw = to_work(b, ord);
  GPoly bg;
  for (const auto& t : bw) bg.terms.push_back(t);
  Rat lead = bg.terms.front().second;
  QMPoly q(a.nvars());
  while (!r.empty()) {
    auto it = r.begin();
    require(divides(bg.lm(), it->first), ErrorKind::Domain, "polynomial division is not exact");
    Mono shift = mono_sub(it->first, bg.lm());
    Rat c = it->second / lead;
    q.add_term(shift, c);
    r.erase(it);
    axpy(r, shift, -c, bg, 1);
  }
  return q;
}

namespace {

QMPoly normalized(const QMPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(1 / f.coeff(leading_mono(f, MonoOrder::Grevlex)));
}

/// f with a new variable in front.
QMPoly shifted(const QMPoly& f) {
  QMPoly r(f.nvars() + 1);
  for (const auto& [m, c] : f.terms()) {
    Mono e(1, 0);
    e.insert(e.end(), m.begin(), m.end());
    r.add_term(e, c);
  }
  return r;
}

QMPoly unshifted(const QMPoly& f) {
  QMPoly r(f.nvars() - 1);
  for (const auto& [m, c] : f.terms()) {
    require(m[0] == 0, ErrorKind::Integrity, "eliminated variable still present");
    r.add_term(Mono(m.begin() + 1, m.end()), c);
  }
  return r;
}

}  // namespace

QMPoly mgcd(const QMPoly& a, const QMPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return QMPoly(n, Rat(1));
  // (a) cap (b) = (t a, (1 - t) b) cap Q[X]
  QMPoly t = QMPoly::var(n + 1, 0);
  QMPoly one(n + 1, Rat(1));
  auto G = groebner_basis({t * shifted(a), (one - t) * shifted(b)}, MonoOrder::Elim0);
  std::vector<QMPoly> elim;
  for (const auto& g : G)
    if (leading_mono(g, MonoOrder::Elim0)[0] == 0) elim.push_back(unshifted(g));
  require(elim.size() == 1, ErrorKind::Integrity, "intersection of principal ideals is not principal");
  return normalized(exact_divide(a * b, elim.front()));
}

QMPoly msqfree_part(const QMPoly& f) {
  if (f.is_zero() || f.is_constant()) return f;
  QMPoly d = f;
  for (std::size_t i = 0; i < f.nvars() && !d.is_constant(); ++i) {
    QMPoly p = f.partial(i);
    if (!p.is_zero()) d = mgcd(d, p);
  }
  return d.is_constant() ? f : exact_divide(f, d);
}

GroebnerAlgebra::GroebnerAlgebra(std::size_t nvars, std::vector<QMPoly> G) : G_(std::move(G)) {
  require(!G_.empty() && G_.front().nvars() == nvars, ErrorKind::Dimension, "Groebner basis arity mismatch");
  set_basis(nvars, staircase(G_));
  for (const auto& m : basis()) border_degree_ = std::max(border_degree_, mono_degree(m) + 1);
}

std::vector<Rat> GroebnerAlgebra::coords_of(const QMPoly& r) const {
  std::vector<Rat> v(dim(), Rat(0));
  for (const auto& [m, c] : r.terms()) {
    std::size_t i = index_of(m);
    require(i < dim(), ErrorKind::Integrity, "normal form leaves the staircase");
    v[i] = c;
  }
  return v;
}

std::vector<Rat> GroebnerAlgebra::compute_product(const Mono& gamma) const {
  std::size_t i = index_of(gamma);
  if (i < dim()) return unit_vector(i);
  if (mono_degree(gamma) <= border_degree_)
    return coords_of(pqs::normal_form(QMPoly::monomial(nvars(), gamma, Rat(1)), G_));
  // gamma = (gamma - e_v) + e_v, with gamma - e_v of degree >= border_degree_
  std::size_t v = 0;
  while (gamma[v] == 0) ++v;
  Mono lower = gamma;
  --lower[v];
  std::vector<Rat> base = product(lower);
  std::vector<Rat> out(dim(), Rat(0));
  for (std::size_t b = 0; b < dim(); ++b) {
    if (base[b] == 0) continue;
    Mono up = basis()[b];
    ++up[v];
    const auto& w = product(up);
    for (std::size_t c = 0; c < dim(); ++c)
      if (w[c] != 0) out[c] += base[b] * w[c];
  }
  return out;
}

std::size_t GroebnerAlgebra::distinct_points() const {
  std::size_t N = dim();
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) M[a][b] = M[b][a] = trace_coords(product(add(basis()[a], basis()[b])));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < N && rank < N; ++col) {
    std::size_t piv = rank;
    while (piv < N && M[piv][col] == 0) ++piv;
    if (piv == N) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t r = rank + 1; r < N; ++r) {
      if (M[r][col] == 0) continue;
      Rat f = M[r][col] / M[rank][col];
      for (std::size_t c = col; c < N; ++c) M[r][c] -= f * M[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace pqs
