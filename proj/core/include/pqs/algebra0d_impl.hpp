#pragma once

// Template definitions for algebra0d.hpp.

#include <algorithm>
#include <string>

namespace pqs {

namespace detail {

inline bool rational_value(const Rat& x, Rat& out) {
  out = x;
  return true;
}
inline bool rational_value(const EpsScalar& x, Rat& out) {
  if (!x.is_rational()) return false;
  out = x.rational();
  return true;
}

/// x = content * primitive, content a positive integer when x has integral coefficients.
inline std::pair<Int, Rat> content_split(const Rat& x) {
  return {abs(x.get_num()), Rat(sgn(x))};
}
inline std::pair<Int, EpsScalar> content_split(const EpsScalar& x) {
  Int g = 0;
  bool integral = true;
  for (const auto& [e, c] : x.terms()) {
    if (c.get_den() != 1) integral = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (!integral || g == 0) g = 1;
  return {g, x * Rat(1 / Rat(g))};
}

inline Rat lead_rational(const Rat& x) { return x; }
inline Rat lead_rational(const EpsScalar& x) { return x.terms().back().second; }

inline bool is_rational_scalar(const Rat&) { return true; }
inline bool is_rational_scalar(const EpsScalar& x) { return x.is_rational(); }

/// x = c * y for some rational c.
template <class C>
bool proportional(const C& x, const C& y) {
  if (is_zero(x) || is_zero(y)) return false;
  return x * lead_rational(y) == y * lead_rational(x);
}

template <class C>
C c_pow(const C& b, int e) {
  C r = scalar_one<C>();
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace detail

template <class C>
SpecialBasis<C> validate_special(const std::vector<MPoly<C>>& gens) {
  require(!gens.empty(), ErrorKind::NotSpecial, "a special basis needs at least one generator");
  std::size_t q = gens.front().nvars();
  require(gens.size() == q, ErrorKind::NotSpecial,
          "one generator per variable is required: " + std::to_string(gens.size()) +
              " generators for " + std::to_string(q) + " variables");
  SpecialBasis<C> sb;
  sb.nvars = q;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& F = gens[i];
    require(F.nvars() == q, ErrorKind::Dimension, "generator variable count mismatch");
    int D = F.total_degree();
    require(D >= 1, ErrorKind::NotSpecial, "generator " + std::to_string(i + 1) + " is constant");
    Mono lead(q, 0);
    lead[i] = D;
    C b = F.coeff(lead);
    require(!is_zero(b), ErrorKind::NotSpecial,
            "generator " + std::to_string(i + 1) + " lacks the pure power S_" + std::to_string(i + 1) +
                "^" + std::to_string(D) + " of top degree");
    MPoly<C> tail = F - MPoly<C>::monomial(q, lead, b);
    require(tail.total_degree() < D, ErrorKind::NotSpecial,
            "generator " + std::to_string(i + 1) + ": deg U_i must be below d_i");
    sb.gens.push_back(SpecialGen<C>{b, i, D, std::move(tail)});
  }
  for (const auto& g : sb.gens)
    for (std::size_t j = 0; j < q; ++j)
      require(g.tail.degree_in(j) < sb.gens[j].degree, ErrorKind::NotSpecial,
              "generator " + std::to_string(g.var + 1) + ": deg in S_" + std::to_string(j + 1) +
                  " of U_i must be below d_" + std::to_string(j + 1));
  // b_B: lcm of integer contents times the product of non-proportional primitive parts.
  Int l = 1;
  std::vector<C> parts;
  for (const auto& g : sb.gens) {
    auto [cnt, prim] = detail::content_split(g.lead);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cnt.get_mpz_t());
    bool seen = false;
    for (const auto& p : parts)
      if (detail::proportional(p, prim)) seen = true;
    if (!seen && !detail::is_rational_scalar(prim)) parts.push_back(prim);
  }
  C b = C(Rat(l));
  for (const auto& p : parts) b *= p;
  sb.lcm_lead = b;
  return sb;
}

template <class C>
SpecialAlgebra<C>::SpecialAlgebra(SpecialBasis<C> basis) : sb_(std::move(basis)) {
  std::size_t q = sb_.nvars;
  std::size_t N = sb_.dimension();
  std::vector<Mono> stair;
  stair.reserve(N);
  Mono a(q, 0);
  for (std::size_t idx = 0; idx < N; ++idx) {
    stair.push_back(a);
    for (std::size_t i = 0; i < q; ++i) {
      if (++a[i] < sb_.gens[i].degree) break;
      a[i] = 0;
    }
  }
  this->set_basis(q, std::move(stair));
  for (const auto& g : sb_.gens) cof_.push_back(exact_quo(sb_.lcm_lead, g.lead));
}

template <class C>
std::vector<C> SpecialAlgebra<C>::compute_product(const Mono& gamma) const {
  std::size_t q = sb_.nvars;
  std::size_t j = q;
  for (std::size_t i = 0; i < q; ++i)
    if (gamma[i] >= sb_.gens[i].degree) {
      j = i;
      break;
    }
  if (j == q) return this->unit_vector(this->index_of(gamma));
  // b^{|g|} S^g = -(b/b_j) sum_beta u_beta b^{|g|-1} S^{g - d_j e_j + beta}
  const auto& gen = sb_.gens[j];
  Mono base = gamma;
  base[j] -= gen.degree;
  int G = mono_degree(gamma);
  std::vector<C> out(this->dim(), C(0));
  for (const auto& [beta, u] : gen.tail.terms()) {
    Mono delta = MonoAlgebra<C>::add(base, beta);
    int k = G - 1 - mono_degree(delta);
    require(k >= 0, ErrorKind::Integrity, "scaled normal form left the integral range");
    C coef = -(cof_[j] * u * detail::c_pow(sb_.lcm_lead, k));
    const auto& v = this->product(delta);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) out[i] += coef * v[i];
  }
  return out;
}

template <class C>
C trace(const AlgElem<C>& a, const MonoAlgebra<C>& A) {
  C t = A.trace_coords(a.coords);
  if (a.scale == 0) return t;
  Rat b;
  if (!detail::rational_value(A.scale_base(), b)) return t;
  return t * Rat(1 / rat_pow(b, static_cast<unsigned>(a.scale)));
}

template <class C>
CharpolyResult<C> charpoly_multi(const MonoAlgebra<C>& A, const AlgElem<C>& a,
                                 const std::vector<AlgElem<C>>& bs, bool nfact_scaled) {
  std::size_t N = A.dim();
  const auto& basis = A.basis();
  int s = a.scale;
  for (const auto& b : bs) s = std::max(s, b.scale);
  C base = A.scale_base();
  auto lift = [&](const AlgElem<C>& x) {
    std::vector<C> v = x.coords;
    if (x.scale < s) {
      C f = detail::c_pow(base, s - x.scale);
      for (auto& c : v) c *= f;
    }
    return v;
  };
  std::vector<C> ap = lift(a);
  const auto& t = A.trace_vector();

  // multiplication-by-a matrix, column alpha
  std::vector<std::vector<C>> Ma(N, std::vector<C>(N, C(0)));
  for (std::size_t al = 0; al < N; ++al)
    for (std::size_t w = 0; w < N; ++w) {
      if (is_zero(ap[w])) continue;
      const auto& v = A.product(MonoAlgebra<C>::add(basis[al], basis[w]));
      for (std::size_t i = 0; i < N; ++i)
        if (!is_zero(v[i])) Ma[al][i] += ap[w] * v[i];
    }

  std::vector<std::vector<C>> vs;
  vs.reserve(N + 1);
  vs.push_back(A.unit().coords);
  std::vector<C> p(N + 1, C(0));
  for (std::size_t k = 1; k <= N; ++k) {
    const auto& prev = vs.back();
    std::vector<C> nxt(N, C(0));
    for (std::size_t al = 0; al < N; ++al) {
      if (is_zero(prev[al])) continue;
      for (std::size_t i = 0; i < N; ++i)
        if (!is_zero(Ma[al][i])) nxt[i] += prev[al] * Ma[al][i];
    }
    C pk(0);
    for (std::size_t i = 0; i < N; ++i)
      if (!is_zero(nxt[i])) pk += t[i] * nxt[i];
    p[k] = pk;
    vs.push_back(std::move(nxt));
  }

  std::map<Mono, C> tau;
  auto tau_of = [&](const Mono& g) -> const C& {
    auto it = tau.find(g);
    if (it != tau.end()) return it->second;
    const auto& v = A.product(g);
    C s0(0);
    for (std::size_t i = 0; i < N; ++i)
      if (!is_zero(v[i])) s0 += t[i] * v[i];
    return tau.emplace(g, std::move(s0)).first->second;
  };

  std::vector<C> beta(N + 1, C(0));
  beta[N] = scalar_one<C>();
  for (std::size_t i = N; i-- > 0;) {
    C acc(0);
    for (std::size_t j = 1; j <= N - i; ++j) acc += beta[i + j] * p[j];
    beta[i] = -(acc * make_rat(1, static_cast<long>(N - i)));
  }

  CharpolyResult<C> res;
  std::vector<std::vector<C>> gammas;
  for (const auto& bel : bs) {
    std::vector<C> bp = lift(bel);
    std::vector<C> h(N, C(0));
    for (std::size_t al = 0; al < N; ++al)
      for (std::size_t w = 0; w < N; ++w)
        if (!is_zero(bp[w])) h[al] += bp[w] * tau_of(MonoAlgebra<C>::add(basis[al], basis[w]));
    std::vector<C> q(N + 1, C(0));
    for (std::size_t k = 1; k <= N; ++k) {
      const auto& v = vs[k - 1];
      C s0(0);
      for (std::size_t i = 0; i < N; ++i)
        if (!is_zero(v[i]) && !is_zero(h[i])) s0 += h[i] * v[i];
      q[k] = s0;
    }
    std::vector<C> gam(N + 1, C(0));
    for (std::size_t i = N; i-- > 0;) {
      C acc(0);
      for (std::size_t j = 1; j <= N - i; ++j) {
        acc += gam[i + j] * p[j];
        acc += beta[i + j] * q[j] * C(static_cast<long>(j));
      }
      gam[i] = -(acc * make_rat(1, static_cast<long>(N - i)));
    }
    gammas.push_back(std::move(gam));
  }

  // T' = rT with r = b^s; fold r^N out when b is a rational constant.
  Rat rb;
  bool fold = s == 0 || detail::rational_value(base, rb);
  res.folded = fold;
  res.r = detail::c_pow(base, s);
  auto transform = [&](std::vector<C> c) {
    if (s > 0) {
      if (fold) {
        Rat rr = rat_pow(rb, static_cast<unsigned>(s));
        Rat inv = 1 / rr;
        Rat f = 1;
        for (std::size_t i = N + 1; i-- > 0;) {
          c[i] *= f;  // r^{i-N}
          f *= inv;
        }
      } else {
        C f = scalar_one<C>();
        for (std::size_t i = 0; i <= N; ++i) {
          c[i] *= f;
          f *= res.r;
        }
      }
    }
    if (nfact_scaled) {
      Int nf;
      mpz_fac_ui(nf.get_mpz_t(), N);
      for (auto& x : c) x *= Rat(nf);
    }
    return UPoly<C>(std::move(c));
  };
  if (fold) res.r = scalar_one<C>();
  res.chi = transform(beta);
  for (auto& g : gammas) res.g.push_back(transform(std::move(g)));
  return res;
}

template <class C, class Fn>
void for_each_separating(const MonoAlgebra<C>& A, const std::vector<MPoly<C>>& P,
                         const CandidateOptions& opt, Fn fn) {
  std::size_t m = P.size();
  require(m >= 1, ErrorKind::Dimension, "the map needs at least one component");
  long N = static_cast<long>(A.dim());
  long J = static_cast<long>(m - 1) * N * N;
  if (opt.j_cap >= 0) J = std::min(J, opt.j_cap);
  std::vector<AlgElem<C>> nf;
  nf.reserve(m + 1);
  nf.push_back(A.unit());
  for (const auto& Pi : P) nf.push_back(A.normal_form(Pi));
  int s = 0;
  for (const auto& x : nf) s = std::max(s, x.scale);
  C base = A.scale_base();
  for (auto& x : nf)
    if (x.scale < s) {
      C f = detail::c_pow(base, s - x.scale);
      for (auto& c : x.coords) c *= f;
      x.scale = s;
    }
  for (long j = 0; j <= J; ++j) {
    AlgElem<C> a{std::vector<C>(A.dim(), C(0)), s};
    Rat w = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t k = 0; k < a.coords.size(); ++k)
        if (!is_zero(nf[i].coords[k])) a.coords[k] += nf[i].coords[k] * w;
      w *= Rat(j);
    }
    auto res = charpoly_multi(A, a, nf, opt.nfact_scaled);
    if (!fn(j, res)) return;
  }
}

template <class C>
std::vector<URep<C>> candidates(const MonoAlgebra<C>& A, const std::vector<MPoly<C>>& P,
                                const CandidateOptions& opt) {
  std::vector<URep<C>> out;
  int N = static_cast<int>(A.dim());
  for_each_separating(A, P, opt, [&](long j, const CharpolyResult<C>& res) {
    for (int mu = 0; mu < N; ++mu) {
      URep<C> u;
      u.f = res.chi;
      u.g0 = nth_derivative(res.g[0], mu);
      for (std::size_t i = 1; i < res.g.size(); ++i) u.g.push_back(nth_derivative(res.g[i], mu));
      u.mu = mu;
      u.j = j;
      out.push_back(std::move(u));
    }
    return true;
  });
  return out;
}

}  // namespace pqs
