#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pqs/scalar.hpp"

namespace pqs {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!pqs::is_zero(c)) coef_.push_back(c);
  }
  explicit UPoly(std::vector<C> coefs) : coef_(std::move(coefs)) { trim(); }

  /// c * T^k
  static UPoly monomial(const C& c, std::size_t k) {
    if (pqs::is_zero(c)) return {};
    std::vector<C> v(k + 1, C(0));
    v[k] = c;
    return UPoly(std::move(v));
  }
  static UPoly var() { return monomial(C(1), 1); }

  bool is_zero() const { return coef_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  const std::vector<C>& coefs() const { return coef_; }
  C operator[](std::size_t i) const { return i < coef_.size() ? coef_[i] : C(0); }
  const C& lead() const {
    require(!coef_.empty(), ErrorKind::Undefined, "leading coefficient of zero");
    return coef_.back();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), C(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size(), C(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.coef_.size() + b.coef_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
      for (std::size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const C& c) const {
    if (pqs::is_zero(c)) return {};
    UPoly r = *this;
    for (auto& x : r.coef_) x *= c;
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const { return coef_ == o.coef_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  /// Multiply by T^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, C(0));
    v.insert(v.end(), coef_.begin(), coef_.end());
    return UPoly(std::move(v));
  }

  UPoly pow(unsigned e) const {
    UPoly r(scalar_one<C>());
    UPoly b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

  UPoly derivative() const {
    if (coef_.size() <= 1) return {};
    std::vector<C> v(coef_.size() - 1, C(0));
    for (std::size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * C(static_cast<long>(i));
    return UPoly(std::move(v));
  }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x + V(coef_[i]);
    return acc;
  }

  /// p(q(T))
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * q + UPoly(coef_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "T") const {
    if (coef_.empty()) return "0";
    std::string s;
    for (std::size_t i = coef_.size(); i-- > 0;) {
      if (pqs::is_zero(coef_[i])) continue;
      std::string c = scalar_string(coef_[i]);
      bool compound = c.find_first_of("+ ", 1) != std::string::npos;
      if (!s.empty()) s += " + ";
      if (i == 0) {
        s += compound ? "(" + c + ")" : c;
        continue;
      }
      if (c != "1") s += (compound ? "(" + c + ")" : c) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!coef_.empty() && pqs::is_zero(coef_.back())) coef_.pop_back();
  }
  std::vector<C> coef_;
};

using QPoly = UPoly<Rat>;
using EPoly = UPoly<EpsScalar>;

// ---- Rat-specific algorithms (upoly.cpp) ----

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly quo(const QPoly& a, const QPoly& b);
/// Exact quotient; throws Error(Integrity) on a nonzero remainder.
QPoly exact_quo(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
/// Monic gcd; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
/// Square-free part, monic.
QPoly sqfree_part(const QPoly& a);
/// Yun decomposition: a = lc * prod s_k^k; entry k-1 is s_k (monic, possibly 1).
std::vector<QPoly> sqfree_decomposition(const QPoly& a);
/// Integer-coefficient primitive associate with positive leading coefficient.
QPoly primitive(const QPoly& a);
/// Resultant via the Euclidean algorithm over Q.
Rat resultant(const QPoly& a, const QPoly& b);
/// Lagrange/Newton interpolation through (xs[i], ys[i]); xs distinct.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Reduce a modulo the monic-or-not polynomial m.
inline QPoly reduce_mod(const QPoly& a, const QPoly& m) { return rem(a, m); }

/// Pseudo-remainder over a domain: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
UPoly<C> prem(const UPoly<C>& a, const UPoly<C>& b) {
  require(!b.is_zero(), ErrorKind::Domain, "pseudo-remainder by zero");
  int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<C> r = a.coefs();
  const C& lb = b.lead();
  for (int d = a.degree(); d >= db; --d) {
    C lr = r[static_cast<std::size_t>(d)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(d - db + j)] -= lr * b.coefs()[static_cast<std::size_t>(j)];
  }
  return UPoly<C>(std::move(r));
}

/// Subresultant polynomial remainder sequence over a domain (exact divisions
/// only). Returns S_0 = a, S_1 = b, then the subresultants down to the last
/// nonzero one.
template <class C>
std::vector<UPoly<C>> subresultant_prs(UPoly<C> a, UPoly<C> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  std::vector<UPoly<C>> seq{a, b};
  if (b.is_zero()) return seq;
  C g = scalar_one<C>();
  C h = scalar_one<C>();
  while (true) {
    const UPoly<C>& A = seq[seq.size() - 2];
    const UPoly<C>& B = seq.back();
    int delta = A.degree() - B.degree();
    UPoly<C> r = prem(A, B);
    if (r.is_zero()) break;
    C denom = g;
    C hp = scalar_one<C>();
    for (int i = 0; i < delta; ++i) hp *= h;
    denom *= hp;
    std::vector<C> rc = r.coefs();
    for (auto& x : rc) x = exact_quo(x, denom);
    UPoly<C> next(std::move(rc));
    g = B.lead();
    // h <- g^delta / h^(delta-1)
    if (delta > 0) {
      C num = scalar_one<C>();
      for (int i = 0; i < delta; ++i) num *= g;
      C den = scalar_one<C>();
      for (int i = 0; i + 1 < delta; ++i) den *= h;
      h = exact_quo(num, den);
    }
    seq.push_back(std::move(next));
    if (seq.back().degree() == 0) break;
  }
  return seq;
}

}  // namespace pqs
