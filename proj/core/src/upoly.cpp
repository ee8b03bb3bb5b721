#include "pqs/upoly.hpp"

namespace pqs {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  require(!b.is_zero(), ErrorKind::Domain, "polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Rat> r = a.coefs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  Rat inv = 1 / b.lead();
  const auto& bc = b.coefs();
  for (int d = a.degree(); d >= db; --d) {
    Rat c = r[static_cast<std::size_t>(d)] * inv;
    if (is_zero(c)) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(d - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
QPoly quo(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

QPoly exact_quo(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  require(r.is_zero(), ErrorKind::Integrity, "inexact polynomial division");
  return q;
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(1 / a.lead());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  return monic(x);
}

QPoly sqfree_part(const QPoly& a) {
  if (a.degree() <= 0) return a.is_zero() ? a : QPoly(Rat(1));
  return monic(exact_quo(a, gcd(a, a.derivative())));
}

std::vector<QPoly> sqfree_decomposition(const QPoly& a) {
  require(!a.is_zero(), ErrorKind::Domain, "square-free decomposition of zero");
  std::vector<QPoly> out;
  if (a.degree() == 0) return out;
  QPoly f = monic(a);
  QPoly d = f.derivative();
  QPoly g = gcd(f, d);
  QPoly b = exact_quo(f, g);
  QPoly c = exact_quo(d, g);
  QPoly e = c - b.derivative();
  while (b.degree() > 0) {
    QPoly s = gcd(b, e);
    out.push_back(s);
    b = exact_quo(b, s);
    c = exact_quo(e, s);
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

QPoly primitive(const QPoly& a) {
  if (a.is_zero()) return a;
  Int den = 1;
  for (const auto& c : a.coefs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Int g = 0;
  std::vector<Rat> v;
  v.reserve(a.coefs().size());
  for (const auto& c : a.coefs()) {
    Rat x = c * Rat(den);
    v.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (sgn(a.lead()) < 0) g = -g;
  for (auto& x : v) x /= Rat(g);
  return QPoly(std::move(v));
}

Rat resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  // res(a,b) with deg a >= deg b; track sign and leading factors.
  QPoly x = a, y = b;
  Rat acc = 1;
  if (x.degree() < y.degree()) {
    std::swap(x, y);
    if ((x.degree() % 2 == 1) && (y.degree() % 2 == 1)) acc = -acc;
  }
  while (y.degree() > 0) {
    QPoly r = rem(x, y);
    if (r.is_zero()) return Rat(0);
    int dx = x.degree(), dy = y.degree(), dr = r.degree();
    // res(x,y) = (-1)^(dx*dy) lc(y)^(dx-dr) res(y,r)
    if ((dx % 2 == 1) && (dy % 2 == 1)) acc = -acc;
    acc *= rat_pow(y.lead(), static_cast<unsigned>(dx - dr));
    x = std::move(y);
    y = std::move(r);
  }
  // y constant
  return acc * rat_pow(y.lead(), static_cast<unsigned>(x.degree()));
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  require(xs.size() == ys.size(), ErrorKind::Dimension, "interpolation arity mismatch");
  std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rat> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rat dx = xs[i] - xs[i - j];
      require(!is_zero(dx), ErrorKind::Domain, "interpolation nodes must be distinct");
      c[i] = (c[i] - c[i - 1]) / dx;
      if (i == j) break;
    }
  QPoly p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * QPoly(std::vector<Rat>{-xs[i], Rat(1)}) + QPoly(c[i]);
  }
  return p;
}

}  // namespace pqs
