#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqs/scalar.hpp"
#include "pqs/upoly.hpp"

namespace pqs {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded lexicographic order on multi-indices of equal length.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial in `nvars` variables over C (Rat or EpsScalar).
template <class C>
class MPoly {
 public:
  using Terms = std::map<Mono, C, GrlexLess>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const C& c) : nvars_(nvars) {
    if (!pqs::is_zero(c)) terms_.emplace(Mono(nvars, 0), c);
  }

  static MPoly var(std::size_t nvars, std::size_t i) {
    require(i < nvars, ErrorKind::Dimension, "variable index out of range");
    Mono m(nvars, 0);
    m[i] = 1;
    return monomial(nvars, std::move(m), scalar_one<C>());
  }
  static MPoly monomial(std::size_t nvars, Mono m, const C& c) {
    require(m.size() == nvars, ErrorKind::Dimension, "multi-index length mismatch");
    MPoly r(nvars);
    if (!pqs::is_zero(c)) r.terms_.emplace(std::move(m), c);
    return r;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  C constant_term() const {
    auto it = terms_.find(Mono(nvars_, 0));
    return it == terms_.end() ? C(0) : it->second;
  }
  C coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }
  /// -1 for zero.
  int total_degree() const {
    return terms_.empty() ? -1 : mono_degree(terms_.rbegin()->first);
  }
  int degree_in(std::size_t i) const {
    require(i < nvars_, ErrorKind::Dimension, "variable index out of range");
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }

  void add_term(const Mono& m, const C& c) {
    require(m.size() == nvars_, ErrorKind::Dimension, "multi-index length mismatch");
    if (pqs::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (pqs::is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r(a.nvars_);
    Mono m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const C& c) const {
    MPoly r(nvars_);
    if (pqs::is_zero(c)) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
  }
  bool operator==(const MPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end(); ++i, ++j)
      if (i->first != j->first || i->second != j->second) return false;
    return true;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Throws Error(Domain) for negative exponents.
  MPoly pow(long e) const {
    require(e >= 0, ErrorKind::Domain, "negative exponent");
    MPoly r(nvars_, scalar_one<C>());
    MPoly b = *this;
    auto u = static_cast<unsigned long>(e);
    while (u) {
      if (u & 1UL) r *= b;
      u >>= 1UL;
      if (u) b *= b;
    }
    return r;
  }

  MPoly partial(std::size_t i) const {
    require(i < nvars_, ErrorKind::Dimension, "variable index out of range");
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Mono mm = m;
      --mm[i];
      r.add_term(mm, c * C(static_cast<long>(m[i])));
    }
    return r;
  }

  /// Exact evaluation at a point with coordinates in V (Rat or EpsScalar).
  template <class V>
  V eval(const std::vector<V>& x) const {
    require(x.size() == nvars_, ErrorKind::Dimension, "evaluation arity mismatch");
    std::vector<std::vector<V>> powers(nvars_);
    V acc(0);
    for (const auto& [m, c] : terms_) {
      V t = V(c);
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (m[k] == 0) continue;
        auto& pw = powers[k];
        if (pw.empty()) pw.push_back(V(1));
        while (pw.size() <= static_cast<std::size_t>(m[k])) pw.push_back(pw.back() * x[k]);
        t = t * pw[static_cast<std::size_t>(m[k])];
      }
      acc += t;
    }
    return acc;
  }

  /// Adds `extra` variables after the existing ones.
  MPoly with_extra_vars(std::size_t extra) const {
    MPoly r(nvars_ + extra);
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm.resize(nvars_ + extra, 0);
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  /// Renames variable i to position perm[i] in a ring of `nvars` variables.
  MPoly remapped(std::size_t nvars, const std::vector<std::size_t>& perm) const {
    require(perm.size() == nvars_, ErrorKind::Dimension, "remap arity mismatch");
    MPoly r(nvars);
    for (const auto& [m, c] : terms_) {
      Mono mm(nvars, 0);
      for (std::size_t k = 0; k < nvars_; ++k) {
        require(perm[k] < nvars, ErrorKind::Dimension, "remap target out of range");
        mm[perm[k]] += m[k];
      }
      r.add_term(mm, c);
    }
    return r;
  }

  /// Polynomial in variable i with MPoly coefficients (variable i set to 0 in them).
  std::vector<MPoly> coefficients_in(std::size_t i) const {
    int d = degree_in(i);
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MPoly(nvars_));
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm[i] = 0;
      out[static_cast<std::size_t>(m[i])].add_term(mm, c);
    }
    return out;
  }

  template <class F>
  auto map_coeffs(F f) const -> MPoly<decltype(f(std::declval<C>()))> {
    MPoly<decltype(f(std::declval<C>()))> r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (std::size_t k = 0; k < nvars_; ++k) {
        int e = it->first[k];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += k < names.size() ? names[k] : "X" + std::to_string(k + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      std::string c = scalar_string(it->second);
      bool compound = c.find_first_of("+ ", 1) != std::string::npos;
      if (compound) c = "(" + c + ")";
      if (!s.empty()) s += " + ";
      if (mono.empty()) s += c;
      else if (c == "1") s += mono;
      else s += c + "*" + mono;
    }
    return s;
  }

 private:
  void check_arity(const MPoly& o) const {
    require(nvars_ == o.nvars_, ErrorKind::Dimension, "polynomials over different variable counts");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using QMPoly = MPoly<Rat>;
using EMPoly = MPoly<EpsScalar>;

inline EMPoly to_eps(const QMPoly& p) {
  return p.map_coeffs([](const Rat& c) { return EpsScalar(c); });
}

/// Throws Error(Domain) if a coefficient involves an infinitesimal.
inline QMPoly to_rational(const EMPoly& p) {
  return p.map_coeffs([](const EpsScalar& c) {
    require(c.is_rational(), ErrorKind::Domain, "coefficient is not rational");
    return c.rational();
  });
}

/// p(maps[0], ..., maps[k-1]); every map over the same n variables.
template <class C>
MPoly<C> compose(const MPoly<C>& p, const std::vector<MPoly<C>>& maps, std::size_t n) {
  require(maps.size() == p.nvars(), ErrorKind::Dimension, "composition arity mismatch");
  for (const auto& q : maps) require(q.nvars() == n, ErrorKind::Dimension, "map variable count mismatch");
  std::vector<std::vector<MPoly<C>>> powers(maps.size());
  MPoly<C> acc(n);
  for (const auto& [m, c] : p.terms()) {
    MPoly<C> t(n, c);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (m[k] == 0) continue;
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(MPoly<C>(n, scalar_one<C>()));
      while (pw.size() <= static_cast<std::size_t>(m[k])) pw.push_back(pw.back() * maps[k]);
      t *= pw[static_cast<std::size_t>(m[k])];
    }
    acc += t;
  }
  return acc;
}

/// den^{deg p} * p(nums / den), an exact univariate polynomial.
QPoly compose_rational(const QMPoly& p, const std::vector<QPoly>& nums, const QPoly& den);

/// g0^E * p(nums_i / g0^{w_i}) with E = max over terms of sum alpha_i w_i.
/// Returns the polynomial and E.
std::pair<QPoly, int> compose_weighted(const QMPoly& p, const std::vector<QPoly>& nums,
                                       const std::vector<int>& weights, const QPoly& g0);

}  // namespace pqs
