#include "pqs/realroots.hpp"

#include <algorithm>

namespace pqs {

namespace {

int sign_of(const Rat& x) { return sgn(x); }

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rat mid(const Rat& a, const Rat& b) { return (a + b) / 2; }

/// Positive rational multiple with integer coefficients.
QPoly positive_primitive(const QPoly& x) {
  QPoly p = primitive(x);
  if (!p.is_zero() && sgn(p.lead()) != sgn(x.lead())) p = -p;
  return p;
}

Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// Rational of least denominator in [lo, hi], lo <= hi.
Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_in(-hi, -lo);
  Int fl = floor_of(lo);
  if (Rat(fl) == lo) return lo;
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  Rat r = Rat(fl) + 1 / simplest_in(1 / (hi - Rat(fl)), 1 / (lo - Rat(fl)));
  r.canonicalize();
  return r;
}

}  // namespace

SturmChain::SturmChain(const QPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "Sturm chain of the zero polynomial");
  chain_.push_back(positive_primitive(f));
  if (f.degree() <= 0) return;
  chain_.push_back(positive_primitive(f.derivative()));
  while (chain_.back().degree() > 0) {
    QPoly r = rem(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(positive_primitive(-r));
  }
}

int SturmChain::variations(const Rat& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign_of(p.eval(x)));
  return count_variations(s);
}

int SturmChain::variations_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.lead()) * ((p.degree() % 2 == 0) ? 1 : -1));
  return count_variations(s);
}

int SturmChain::variations_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.lead()));
  return count_variations(s);
}

int SturmChain::count(const Rat& lo, const Rat& hi) const { return variations(lo) - variations(hi); }

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

Rat cauchy_root_bound(const QPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "root bound of the zero polynomial");
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rat(abs(f.coefs()[static_cast<std::size_t>(i)] / f.lead())));
  return m + 1;
}

std::vector<IsolInterval> isolate(const QPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "isolate: f = 0");
  std::vector<IsolInterval> out;
  if (f.degree() <= 0) return out;
  QPoly g = sqfree_part(f);
  SturmChain sc(g);
  Rat B = cauchy_root_bound(g);
  struct Job {
    Rat lo, hi;
    int n;
  };
  std::vector<Job> stack{{-B, B, sc.count(-B, B)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      if (is_zero(g.eval(j.hi))) out.push_back({j.hi, j.hi, j.hi});
      else out.push_back({j.lo, j.hi, std::nullopt});
      continue;
    }
    Rat m = mid(j.lo, j.hi);
    int left = sc.count(j.lo, m);
    stack.push_back({m, j.hi, j.n - left});
    stack.push_back({j.lo, m, left});
  }
  std::sort(out.begin(), out.end(), [](const IsolInterval& a, const IsolInterval& b) { return a.hi < b.hi; });
  return out;
}

IsolInterval refine_interval(const SturmChain& sf, IsolInterval iv, const Rat& width) {
  const QPoly& g = sf.poly();
  while (!iv.exact && iv.hi - iv.lo > width) {
    Rat c = simplest_in(iv.lo, iv.hi);
    if (c != iv.lo && is_zero(g.eval(c))) {
      iv = {c, c, c};
      break;
    }
    Rat m = mid(iv.lo, iv.hi);
    if (is_zero(g.eval(m))) {
      iv = {m, m, m};
      break;
    }
    if (sf.count(iv.lo, m) == 1) iv.hi = m;
    else iv.lo = m;
  }
  return iv;
}

int sign_at(const QPoly& f, const IsolInterval& root, const QPoly& h) {
  if (root.exact) return sgn(h.eval(*root.exact));
  QPoly r = rem(h, f);
  if (r.is_zero()) return 0;
  if (r.degree() == 0) return sgn(r.lead());
  QPoly sf = sqfree_part(f);
  QPoly d = gcd(sf, r);
  if (d.degree() > 0 && SturmChain(d).count(root.lo, root.hi) > 0) return 0;
  SturmChain rs(sqfree_part(r));
  SturmChain fs(sf);
  IsolInterval iv = root;
  while (true) {
    if (iv.exact) return sgn(r.eval(*iv.exact));
    if (rs.count(iv.lo, iv.hi) == 0) return sgn(r.eval(iv.hi));
    iv = refine_interval(fs, iv, (iv.hi - iv.lo) / 4);
  }
}

std::vector<std::pair<IsolInterval, ThomEncoding>> thom(const QPoly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "thom: f = 0");
  std::vector<std::pair<IsolInterval, ThomEncoding>> out;
  std::vector<QPoly> ders;
  QPoly d = f;
  for (int k = 1; k < f.degree(); ++k) {
    d = d.derivative();
    ders.push_back(d);
  }
  for (const auto& iv : isolate(f)) {
    ThomEncoding s;
    for (const auto& dk : ders) s.push_back(sign_at(f, iv, dk));
    out.emplace_back(iv, std::move(s));
  }
  return out;
}

IsolInterval locate(const QPoly& f, const ThomEncoding& sigma) {
  require(sigma.size() == static_cast<std::size_t>(std::max(f.degree() - 1, 0)), ErrorKind::Integrity,
          "Thom encoding length does not match deg f - 1");
  for (const auto& [iv, s] : thom(f))
    if (s == sigma) return iv;
  fail(ErrorKind::Integrity, "no real root of f has the given Thom encoding");
}

int sign_at(const QPoly& f, const ThomEncoding& sigma, const QPoly& h) {
  return sign_at(f, locate(f, sigma), h);
}

int sign_at_point(const QMPoly& h, const RealURep& rep) {
  require(h.nvars() == rep.g.size(), ErrorKind::Dimension, "point arity mismatch");
  IsolInterval iv = locate(rep.f, rep.sigma);
  int s0 = sign_at(rep.f, iv, rep.g0);
  require(s0 != 0, ErrorKind::Integrity, "g0 vanishes at the root");
  auto [num, E] = compose_weighted(h, rep.g, std::vector<int>(rep.g.size(), 1), rep.g0);
  int s = sign_at(rep.f, iv, num);
  return (E % 2 != 0 && s0 < 0) ? -s : s;
}

std::pair<Rat, Rat> eval_interval(const QPoly& h, const Rat& lo, const Rat& hi) {
  Rat a = 0, b = 0;
  const auto& c = h.coefs();
  for (std::size_t i = c.size(); i-- > 0;) {
    // [a,b] * [lo,hi] + c_i
    Rat p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    a = std::min({p1, p2, p3, p4}) + c[i];
    b = std::max({p1, p2, p3, p4}) + c[i];
  }
  return {a, b};
}

std::vector<Rat> refine(const RealURep& rep, int bits) {
  IsolInterval iv = locate(rep.f, rep.sigma);
  require(sign_at(rep.f, iv, rep.g0) != 0, ErrorKind::Integrity, "g0 vanishes at the root");
  std::vector<Rat> out(rep.g.size());
  if (iv.exact) {
    Rat d = rep.g0.eval(*iv.exact);
    for (std::size_t i = 0; i < rep.g.size(); ++i) out[i] = rep.g[i].eval(*iv.exact) / d;
    return out;
  }
  Rat tol = 1;
  for (int i = 0; i < bits; ++i) tol /= 2;
  SturmChain fs(sqfree_part(rep.f));
  Rat width = iv.hi - iv.lo;
  while (true) {
    auto [d0, d1] = eval_interval(rep.g0, iv.lo, iv.hi);
    bool ok = !iv.exact && (sgn(d0) == sgn(d1)) && sgn(d0) != 0;
    if (iv.exact) {
      Rat d = rep.g0.eval(*iv.exact);
      for (std::size_t i = 0; i < rep.g.size(); ++i) out[i] = rep.g[i].eval(*iv.exact) / d;
      return out;
    }
    if (ok) {
      bool all = true;
      for (std::size_t i = 0; i < rep.g.size() && all; ++i) {
        auto [n0, n1] = eval_interval(rep.g[i], iv.lo, iv.hi);
        // quotient interval [n0,n1] / [d0,d1], 0 not in [d0,d1]
        Rat q[4] = {n0 / d0, n0 / d1, n1 / d0, n1 / d1};
        Rat lo = *std::min_element(q, q + 4), hi = *std::max_element(q, q + 4);
        if (hi - lo > tol) all = false;
        else out[i] = mid(lo, hi);
      }
      if (all) return out;
    }
    width /= 2;
    iv = refine_interval(fs, iv, width);
  }
}

}  // namespace pqs
