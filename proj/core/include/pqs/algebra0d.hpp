#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "pqs/eps.hpp"
#include "pqs/mpoly.hpp"
#include "pqs/upoly.hpp"

namespace pqs {

/// Element of a finite-dimensional algebra: b^{-scale} * sum coords[i] e_i.
template <class C>
struct AlgElem {
  std::vector<C> coords;
  int scale = 0;
};

/// A commutative algebra with a monomial basis, where the product of basis
/// elements e_alpha * e_omega depends only on alpha + omega. Products are
/// memoized; access is serialized so a shared algebra is safe to query.
template <class C>
class MonoAlgebra {
 public:
  virtual ~MonoAlgebra() = default;

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mono>& basis() const { return basis_; }
  std::size_t nvars() const { return nvars_; }
  /// Position of `m` in the basis, or dim() when it is not a basis monomial.
  std::size_t index_of(const Mono& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? dim() : it->second;
  }

  /// Coordinates of the product monomial gamma (e.g. e_alpha * e_omega for gamma = alpha + omega).
  const std::vector<C>& product(const Mono& gamma) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(gamma);
    if (it != memo_.end()) return it->second;
    std::vector<C> v = compute_product(gamma);
    return memo_.emplace(gamma, std::move(v)).first->second;
  }

  /// The scaling base b of the basis e_alpha = b^{|alpha|} S^alpha (1 when unscaled).
  virtual C scale_base() const = 0;
  /// Whether each basis element is scaled by b^{|alpha|}.
  virtual bool scaled_basis() const = 0;

  AlgElem<C> unit() const {
    AlgElem<C> u{std::vector<C>(dim(), C(0)), 0};
    u.coords[index_of(Mono(nvars_, 0))] = scalar_one<C>();
    return u;
  }

  /// Residue of f. In a scaled basis the result carries scale deg f.
  AlgElem<C> normal_form(const MPoly<C>& f) const {
    require(f.nvars() == nvars_, ErrorKind::Dimension, "normal_form variable count mismatch");
    AlgElem<C> r{std::vector<C>(dim(), C(0)), 0};
    if (f.is_zero()) return r;
    int D = scaled_basis() ? f.total_degree() : 0;
    r.scale = D;
    C b = scale_base();
    std::vector<C> bp{scalar_one<C>()};
    for (const auto& [m, c] : f.terms()) {
      int k = scaled_basis() ? D - mono_degree(m) : 0;
      while (static_cast<int>(bp.size()) <= k) bp.push_back(bp.back() * b);
      C coef = c * bp[static_cast<std::size_t>(k)];
      const auto& v = product(m);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) r.coords[i] += coef * v[i];
    }
    return r;
  }

  /// t_omega = trace of multiplication by e_omega.
  const std::vector<C>& trace_vector() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!trace_.empty() || dim() == 0) return trace_;
    std::vector<C> t(dim(), C(0));
    for (std::size_t w = 0; w < dim(); ++w)
      for (std::size_t a = 0; a < dim(); ++a) t[w] += product(add(basis_[a], basis_[w]))[a];
    trace_ = std::move(t);
    return trace_;
  }

  /// Trace of multiplication by the coordinate vector (scale ignored).
  C trace_coords(const std::vector<C>& v) const {
    const auto& t = trace_vector();
    C s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) s += t[i] * v[i];
    return s;
  }

  /// Coordinates of x*y (scales add).
  std::vector<C> mul_coords(const std::vector<C>& x, const std::vector<C>& y) const {
    std::vector<C> r(dim(), C(0));
    for (std::size_t a = 0; a < dim(); ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t w = 0; w < dim(); ++w) {
        if (is_zero(y[w])) continue;
        C c = x[a] * y[w];
        const auto& v = product(add(basis_[a], basis_[w]));
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!is_zero(v[i])) r[i] += c * v[i];
      }
    }
    return r;
  }

  static Mono add(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }

 protected:
  void set_basis(std::size_t nvars, std::vector<Mono> basis) {
    nvars_ = nvars;
    basis_ = std::move(basis);
    index_.clear();
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }
  std::vector<C> unit_vector(std::size_t i) const {
    std::vector<C> v(dim(), C(0));
    v[i] = scalar_one<C>();
    return v;
  }
  virtual std::vector<C> compute_product(const Mono& gamma) const = 0;

 private:
  std::size_t nvars_ = 0;
  std::vector<Mono> basis_;
  std::map<Mono, std::size_t> index_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Mono, std::vector<C>> memo_;
  mutable std::vector<C> trace_;
};

/// One generator b_i S_i^{d_i} + U_i of a parametrized special basis.
template <class C>
struct SpecialGen {
  C lead;          // b_i
  std::size_t var; // i
  int degree;      // d_i
  MPoly<C> tail;   // U_i
};

template <class C>
struct SpecialBasis {
  std::size_t nvars = 0;
  std::vector<SpecialGen<C>> gens;  // gens[i].var == i
  C lcm_lead;                        // b_B
  std::size_t dimension() const {
    std::size_t n = 1;
    for (const auto& g : gens) n *= static_cast<std::size_t>(g.degree);
    return n;
  }
};

/// Checks the special-form conditions and computes b_B; throws Error(NotSpecial).
template <class C>
SpecialBasis<C> validate_special(const std::vector<MPoly<C>>& gens);

/// Quotient algebra of a special basis in the scaled basis b^{|alpha|} S^alpha,
/// alpha in the staircase box. The product monomial gamma maps to
/// NF(b^{|gamma|} S^gamma), which stays integral.
template <class C>
class SpecialAlgebra : public MonoAlgebra<C> {
 public:
  explicit SpecialAlgebra(SpecialBasis<C> basis);
  const SpecialBasis<C>& special() const { return sb_; }
  C scale_base() const override { return sb_.lcm_lead; }
  bool scaled_basis() const override { return true; }

 protected:
  std::vector<C> compute_product(const Mono& gamma) const override;

 private:
  SpecialBasis<C> sb_;
  std::vector<C> cof_;  // b_B / b_i
};

/// (chi, g_1..g_r): chi(T) and g(a, b_t, T) = d/dS chi(a + S b_t, T) at S = 0.
/// When the scale base b is not a rational constant, all polynomials are
/// returned as r^N chi(a + S b, T) with r = b^s, s the largest scale.
template <class C>
struct CharpolyResult {
  UPoly<C> chi;
  std::vector<UPoly<C>> g;
  C r;          // scaling factor r (1 when folded)
  bool folded;  // true when r was divided out exactly
};

template <class C>
CharpolyResult<C> charpoly_multi(const MonoAlgebra<C>& A, const AlgElem<C>& a,
                                 const std::vector<AlgElem<C>>& bs, bool nfact_scaled = false);

/// Characteristic polynomial of a and g(a, b, T).
template <class C>
std::pair<UPoly<C>, UPoly<C>> charpoly_pair(const MonoAlgebra<C>& A, const AlgElem<C>& a,
                                            const AlgElem<C>& b, bool nfact_scaled = false) {
  auto res = charpoly_multi(A, a, {b}, nfact_scaled);
  return {res.chi, res.g.front()};
}

/// Trace of the element (scale applied only when the base is a rational constant).
template <class C>
C trace(const AlgElem<C>& a, const MonoAlgebra<C>& A);

/// a(j, Y) = sum_i j^{i-1} Y_i over m variables.
QMPoly sep_form(long j, std::size_t m);

/// Candidate univariate representation (f, g0, g_1..g_m).
template <class C>
struct URep {
  UPoly<C> f;
  UPoly<C> g0;
  std::vector<UPoly<C>> g;
  int mu = 0;   // claimed multiplicity - 1
  long j = 0;   // separating index
};

struct CandidateOptions {
  long j_cap = -1;        // largest j tried; -1 means (m-1) N^2
  bool nfact_scaled = false;
};

/// Candidates for (A, P): for every j and mu in 0..N-1, the tuple
/// (chi, g^{(mu)}(a, r), g^{(mu)}(a, r P_i)). Ordered by (j, mu).
template <class C>
std::vector<URep<C>> candidates(const MonoAlgebra<C>& A, const std::vector<MPoly<C>>& P,
                                const CandidateOptions& opt = {});

/// Same, grouped per j so callers can stop early; fn(j, chi, g-list) with g-list
/// indexed [0] = g(a, r), [i] = g(a, r P_i). Return false from fn to stop.
template <class C, class Fn>
void for_each_separating(const MonoAlgebra<C>& A, const std::vector<MPoly<C>>& P,
                         const CandidateOptions& opt, Fn fn);

// ---- limits (EpsScalar only) ----

/// (lim eps^{-o} f, o) over the `inner` innermost infinitesimals, innermost first.
std::pair<EPoly, OrderVec> hat_normalize(const EPoly& f, std::size_t inner);

/// Limits of candidates over the `inner` innermost infinitesimals; candidates
/// whose g would become unbounded, whose chi-hat is constant or whose g0-hat
/// vanishes are dropped.
std::vector<URep<EpsScalar>> limit_candidates(const std::vector<URep<EpsScalar>>& cands,
                                              std::size_t inner);

/// Best-effort selection of a well-separating group (see filter rules); never
/// returns an empty list for nonempty input.
std::vector<std::vector<URep<EpsScalar>>> filter_good(
    const std::vector<std::vector<URep<EpsScalar>>>& groups, unsigned seed = 1);

/// Product of the linear factors of f of multiplicity exactly mu + 1 (the roots
/// a candidate with index mu speaks for); 1 when there are none.
QPoly multiplicity_part(const QPoly& f, int mu);

/// Substitutes rationals for every infinitesimal.
Rat specialize(const EpsScalar& x, const std::vector<Rat>& values);
QPoly specialize(const EPoly& f, const std::vector<Rat>& values);

/// Drops the tower of a scalar free of infinitesimals.
Rat as_rational(const EpsScalar& x);
QPoly as_rational(const EPoly& f);

/// mu-th derivative.
template <class C>
UPoly<C> nth_derivative(UPoly<C> f, int mu) {
  for (int i = 0; i < mu; ++i) f = f.derivative();
  return f;
}

}  // namespace pqs

#include "pqs/algebra0d_impl.hpp"
