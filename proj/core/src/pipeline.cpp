#include "pqs/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "pqs/geomlift.hpp"
#include "pqs/groebner.hpp"
#include "pqs/pieces.hpp"

namespace pqs {

void PipelineConfig::validate() const {
  require(!rational_eps1 || *rational_eps1 > 0, ErrorKind::Input, "rational_eps1 must be positive");
  require(!rational_eps2 || *rational_eps2 > 0, ErrorKind::Input, "rational_eps2 must be positive");
  require(jobs >= 1, ErrorKind::Input, "jobs must be at least 1");
}

namespace {

/// p in Y_1..Y_k re-expressed over Y_0..Y_k.
EMPoly prepend_var(const EMPoly& p) {
  EMPoly r(p.nvars() + 1);
  for (const auto& [m, c] : p.terms()) {
    Mono e(1, 0);
    e.insert(e.end(), m.begin(), m.end());
    r.add_term(e, c);
  }
  return r;
}

EpsScalar lift(const EpsScalar& x, const TowerPtr& t) { return t ? x.lifted(t) : x; }

Rat pow_int(long base, std::size_t e) {
  Rat r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

QPoly identity_t() { return QPoly::var(); }

}  // namespace

Prepared prepare(const Problem& prob, const PipelineConfig& cfg) {
  cfg.validate();
  prob.validate();
  require(tower_size(problem_tower(prob)) == 0, ErrorKind::Input, "problem coefficients must be rational");
  Prepared out;
  out.has_eps0 = !cfg.assume_bounded;
  std::vector<std::string> names;
  if (out.has_eps0) names.push_back("e0");
  if (!cfg.rational_eps1) names.push_back("e1");
  if (!cfg.rational_eps2) names.push_back("e2");
  out.symbolic_inner = names.size() - (out.has_eps0 ? 1 : 0);
  out.tower = names.empty() ? nullptr : make_tower(names);
  auto at = [&](const std::string& s) { return static_cast<std::size_t>(out.tower->find(s)); };
  EpsScalar level = cfg.rational_eps1 ? EpsScalar(*cfg.rational_eps1) : EpsScalar::eps(out.tower, at("e1"));
  EpsScalar t = cfg.rational_eps2 ? EpsScalar(*cfg.rational_eps2) : EpsScalar::eps(out.tower, at("e2"));

  std::size_t n = prob.n(), k = prob.k();
  std::size_t off = out.has_eps0 ? 1 : 0;
  std::size_t nt = n + off;
  EMPoly p = lift_poly(cfg.assume_nonneg ? prob.p : prob.p * prob.p, out.tower);
  Problem& d = out.prob;
  d.Q.n = nt;
  d.level = level;
  d.dist = 0;
  auto zero_row = [&] { return std::vector<EpsScalar>(nt, EpsScalar(Rat(0), out.tower)); };
  if (out.has_eps0) {
    EMPoly y0 = EMPoly::var(k + 1, 0);
    d.p = y0 * y0 + prepend_var(p);
    QuadComponent q0{std::vector<std::vector<EpsScalar>>(nt, zero_row()), zero_row(), EpsScalar(Rat(1), out.tower)};
    EpsScalar e0 = EpsScalar::eps(out.tower, at("e0"));
    for (std::size_t i = 0; i < nt; ++i) q0.H[i][i] = t - Rat(2) * e0 * e0;
    d.Q.comps.push_back(std::move(q0));
  } else {
    d.p = p;
  }
  for (std::size_t j = 0; j < k; ++j) {
    const auto& src = prob.Q.comps[j];
    std::size_t expo = j + off;
    QuadComponent q{std::vector<std::vector<EpsScalar>>(nt, zero_row()), zero_row(), lift(src.c, out.tower)};
    for (std::size_t a = 0; a < n; ++a) {
      q.b[a + off] = lift(src.b[a], out.tower);
      for (std::size_t b = 0; b < n; ++b) q.H[a + off][b + off] = lift(src.H[a][b], out.tower);
    }
    for (std::size_t i = 0; i < nt; ++i) q.H[i][i] += t * pow_int(static_cast<long>(i + 1), expo);
    d.Q.comps.push_back(std::move(q));
  }
  std::size_t kt = d.k();
  out.r = nt >= kt ? nt - kt : 0;
  return out;
}

std::optional<Rat> cauchy_lower_bound(const QPoly& h) {
  if (h.degree() <= 0) return std::nullopt;
  const auto& c = h.coefs();
  std::size_t l = 0;
  while (c[l] == 0) ++l;
  Rat sum = 0;
  for (const auto& x : c) sum += abs(x);
  return Rat(abs(c[l]) / sum);
}

// ---- membership, points, ordering ----

Verification verify_membership(const RealURep& rep, const Problem& prob) {
  try {
    QMPoly F = to_rational(prob.composed());
    require(rep.g.size() == F.nvars(), ErrorKind::Dimension, "point has the wrong number of coordinates");
    int s = sign_at_point(F, rep);
    if (s == 0) return {true, ""};
    return {false, "p(Q(x)) has sign " + std::to_string(s) + " at the point"};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

std::vector<RealURep> real_points(const URep<Rat>& u) {
  std::vector<RealURep> out;
  if (u.f.is_zero()) return out;
  QPoly fm = multiplicity_part(u.f, u.mu);
  if (fm.degree() < 1) return out;
  QPoly g0 = rem(u.g0, fm);
  std::vector<QPoly> g;
  for (const auto& x : u.g) g.push_back(rem(x, fm));
  std::optional<SturmChain> chain;
  Rat width = 1;
  for (int i = 0; i < 40; ++i) width /= 2;
  for (const auto& [iv, sigma] : thom(fm)) {
    if (sign_at(fm, iv, g0) == 0) continue;
    IsolInterval e = iv;
    if (!e.exact) {
      if (!chain) chain.emplace(fm);
      e = refine_interval(*chain, e, width);
    }
    if (e.exact) {
      Rat a = *e.exact, d = g0.eval(a);
      RealURep r{identity_t(), QPoly(Rat(1)), {}, {}};
      for (const auto& x : g) r.g.push_back(QPoly(x.eval(a) / d));
      out.push_back(std::move(r));
    } else {
      out.push_back(RealURep{fm, g0, g, sigma});
    }
  }
  return out;
}

bool rep_less(const RealURep& a, const RealURep& b) {
  auto lex = [](const QPoly& x, const QPoly& y) {
    if (x.coefs().size() != y.coefs().size()) return x.coefs().size() < y.coefs().size() ? -1 : 1;
    for (std::size_t i = 0; i < x.coefs().size(); ++i)
      if (x.coefs()[i] != y.coefs()[i]) return x.coefs()[i] < y.coefs()[i] ? -1 : 1;
    return 0;
  };
  if (int c = lex(a.f, b.f)) return c < 0;
  if (a.sigma != b.sigma) return a.sigma < b.sigma;
  if (int c = lex(a.g0, b.g0)) return c < 0;
  if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
  for (std::size_t i = 0; i < a.g.size(); ++i)
    if (int c = lex(a.g[i], b.g[i])) return c < 0;
  return false;
}

bool same_point(const RealURep& a, const RealURep& b) {
  if (a.g.size() != b.g.size()) return false;
  if (a == b) return true;
  if (a.f == b.f && a.sigma == b.sigma) {
    IsolInterval iv = locate(a.f, a.sigma);
    for (std::size_t i = 0; i < a.g.size(); ++i)
      if (sign_at(a.f, iv, a.g[i] * b.g0 - b.g[i] * a.g0) != 0) return false;
    return true;
  }
  // coordinates compared on shrinking enclosures
  for (int bits : {16, 48, 128, 256}) {
    auto x = refine(a, bits), y = refine(b, bits);
    Rat tol = 1;
    for (int i = 0; i < bits - 1; ++i) tol /= 2;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

std::vector<RealURep> dedup(std::vector<RealURep> reps) {
  std::sort(reps.begin(), reps.end(), rep_less);
  std::vector<RealURep> out;
  for (auto& r : reps)
    if (std::none_of(out.begin(), out.end(), [&](const RealURep& s) { return same_point(s, r); }))
      out.push_back(std::move(r));
  return out;
}

// ---- hybrid sampler ----

std::vector<RealURep> critical_sample(const QMPoly& F, unsigned seed) {
  std::size_t n = F.nvars();
  require(n >= 1, ErrorKind::Domain, "critical_sample needs at least one variable");
  require(!F.is_zero(), ErrorKind::Domain, "critical_sample of the zero polynomial");
  if (F.is_constant()) return {};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(2, 7);
  std::vector<QMPoly> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(QMPoly::var(n, i));
  QMPoly H = F;
  for (int stage = 0; stage < 2; ++stage) {
    if (stage == 1) {
      QMPoly S = msqfree_part(F);
      if (S.total_degree() == F.total_degree()) break;
      H = S;
    }
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<QMPoly> sys{H};
      std::vector<QMPoly> shifted;
      for (std::size_t i = 0; i < n; ++i) shifted.push_back(coords[i] - QMPoly(n, make_rat(num(rng), den(rng))));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          QMPoly m = shifted[i] * H.partial(j) - shifted[j] * H.partial(i);
          if (!m.is_zero()) sys.push_back(m);
        }
      auto G = groebner_basis(sys);
      if (G.size() == 1 && G.front().is_constant()) return {};
      if (!zero_dimensional(G)) continue;
      GroebnerAlgebra A(n, G);
      std::size_t D = A.distinct_points();
      std::vector<RealURep> out;
      bool found = false;
      for_each_separating(A, coords, CandidateOptions{}, [&](long j, const CharpolyResult<Rat>& res) {
        if (static_cast<std::size_t>(sqfree_part(res.chi).degree()) != D) return true;
        for (int mu = 0; mu < static_cast<int>(A.dim()); ++mu) {
          URep<Rat> u{res.chi, nth_derivative(res.g[0], mu), {}, mu, j};
          if (multiplicity_part(res.chi, mu).degree() < 1) continue;
          for (std::size_t i = 1; i < res.g.size(); ++i) u.g.push_back(nth_derivative(res.g[i], mu));
          for (auto& r : real_points(u)) out.push_back(std::move(r));
        }
        found = true;
        return false;
      });
      require(found, ErrorKind::Integrity, "no separating linear form among the candidates");
      return out;
    }
  }
  fail(ErrorKind::Resource, "critical system is positive-dimensional for every tried centre");
}

// ---- eps0 removal ----

namespace {

QPoly eps_poly(const EpsScalar& c) {
  if (c.tower_len() == 0) return QPoly(c.rational());
  require(c.tower_len() == 1, ErrorKind::Domain, "expected a single infinitesimal");
  std::vector<Rat> v;
  for (const auto& [e, x] : c.terms()) {
    auto d = static_cast<std::size_t>(e[0]);
    if (v.size() <= d) v.resize(d + 1, Rat(0));
    v[d] += x;
  }
  return QPoly(std::move(v));
}

/// g0^D F(g / g0) with D = deg F.
EPoly residue(const QMPoly& F, const EPoly& g0, const std::vector<EPoly>& g) {
  int D = F.total_degree();
  std::vector<EPoly> g0p{EPoly(EpsScalar(1))};
  for (int i = 0; i < D; ++i) g0p.push_back(g0p.back() * g0);
  EPoly h;
  for (const auto& [m, c] : F.terms()) {
    EPoly t{EpsScalar(c)};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= g[i].pow(static_cast<unsigned>(m[i]));
    h += t * g0p[static_cast<std::size_t>(D - mono_degree(m))];
  }
  return h;
}

QPoly residue_q(const QMPoly& F, const QPoly& g0, const std::vector<QPoly>& g) {
  std::vector<int> w(g.size(), 1);
  auto [h, E] = compose_weighted(F, g, w, g0);
  int D = F.total_degree();
  return E < D ? h * g0.pow(static_cast<unsigned>(D - E)) : h;
}

void add_coefs(std::vector<QPoly>& S, const EPoly& h) {
  for (const auto& c : h.coefs())
    if (!c.is_zero()) S.push_back(eps_poly(c));
}

void add_principal(std::vector<QPoly>& S, const EPoly& a, const EPoly& b) {
  if (a.degree() < 1 || b.is_zero()) return;
  for (const auto& s : subresultant_prs(a, b))
    if (!s.is_zero()) S.push_back(eps_poly(s.lead()));
}

URep<Rat> at_value(const URep<EpsScalar>& u, const Rat& v) {
  std::vector<Rat> vals{v};
  URep<Rat> r{specialize(u.f, vals), specialize(u.g0, vals), {}, u.mu, u.j};
  for (const auto& x : u.g) r.g.push_back(specialize(x, vals));
  return r;
}

/// Root count, Thom encodings and signs of g0 and the residue at every root.
std::vector<int> signature(const std::vector<URep<EpsScalar>>& reps, const QMPoly& F, const Rat& v) {
  std::vector<int> sig;
  for (const auto& u : reps) {
    URep<Rat> r = at_value(u, v);
    sig.push_back(r.f.degree());
    if (r.f.degree() < 1) continue;
    QPoly h = residue_q(F, r.g0, r.g);
    auto roots = thom(r.f);
    sig.push_back(static_cast<int>(roots.size()));
    for (const auto& [iv, sigma] : roots) {
      sig.insert(sig.end(), sigma.begin(), sigma.end());
      sig.push_back(sign_at(r.f, iv, r.g0));
      sig.push_back(sign_at(r.f, iv, h));
    }
  }
  return sig;
}

}  // namespace

std::pair<std::vector<URep<Rat>>, Eps0Certificate> remove_eps0(const std::vector<URep<EpsScalar>>& reps,
                                                               const QMPoly& composed) {
  Eps0Certificate cert;
  cert.applicable = true;
  for (const auto& u : reps) {
    require(u.g.size() == composed.nvars(), ErrorKind::Dimension, "representation arity mismatch");
    EPoly h = residue(composed, u.g0, u.g);
    add_coefs(cert.test_polys, u.f);
    add_coefs(cert.test_polys, u.g0);
    add_coefs(cert.test_polys, h);
    EPoly d = u.f;
    for (int k = 1; k < u.f.degree(); ++k) {
      d = d.derivative();
      add_principal(cert.test_polys, u.f, d);
    }
    add_principal(cert.test_polys, u.f, h);
    add_principal(cert.test_polys, u.f, u.g0);
  }
  std::vector<QPoly> kept;
  for (const auto& s : cert.test_polys)
    if (auto b = cauchy_lower_bound(s)) {
      kept.push_back(s);
      cert.bounds.push_back(*b);
    }
  cert.test_polys = std::move(kept);
  Rat v = cert.bounds.empty() ? Rat(1) : *std::min_element(cert.bounds.begin(), cert.bounds.end());
  v /= 2;
  for (;; v /= 2, ++cert.halvings) {
    require(cert.halvings <= 8, ErrorKind::Integrity, "eps0 substitution is not stable under halving");
    if (signature(reps, composed, v) == signature(reps, composed, v / 2)) break;
  }
  cert.value = v;
  std::vector<URep<Rat>> out;
  for (const auto& u : reps) out.push_back(at_value(u, v));
  return {out, cert};
}

// ---- orchestration ----

namespace {

std::string describe(const IndexPair& p) {
  std::ostringstream s;
  auto list = [&](const std::vector<std::size_t>& v) {
    s << '{';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << '}';
  };
  s << "U=";
  list(p.U);
  s << " W=";
  list(p.W);
  return s.str();
}

std::vector<URep<EpsScalar>> piece_limits(const Piece& piece, const Prepared& P, const PipelineConfig& cfg) {
  // Z * omega = 1 is dropped when omega is a nonzero constant
  std::size_t extra = piece.omega.is_constant() ? 0 : 1;
  std::size_t V = piece.nvars() + extra;
  EMPoly F0(V);
  for (const auto& e : piece.equations) {
    EMPoly x = e.with_extra_vars(extra);
    F0 += x * x;
  }
  if (extra) {
    EMPoly inv = EMPoly::var(V, V - 1) * piece.omega.with_extra_vars(1) - EMPoly(V, EpsScalar(1));
    F0 += inv * inv;
  }
  RationalMap psi = piece_inverse(piece, P.prob);
  for (auto& x : psi.num) x = x.with_extra_vars(extra);
  psi.den = psi.den.with_extra_vars(extra);
  ImageLimitOptions opt;
  opt.assume_nonneg = true;
  opt.n_cap = cfg.n_cap;
  opt.cand.j_cap = cfg.j_cap;
  opt.seed = cfg.seed;
  try {
    return limits_of_image(F0, psi, P.symbolic_inner, opt);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Resource) fail(ErrorKind::Resource, "piece " + describe(piece.pair) + ": " + e.what());
    throw;
  }
}

template <class Fn>
void run_pool(std::size_t count, unsigned jobs, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::vector<RealURep> origin(std::size_t n) {
  RealURep r{identity_t(), QPoly(Rat(1)), std::vector<QPoly>(n), {}};
  return {r};
}

}  // namespace

SampleReport sample(const Problem& prob, const PipelineConfig& cfg) {
  cfg.validate();
  prob.validate();
  SampleReport rep;
  QMPoly F;
  try {
    F = to_rational(prob.composed());
  } catch (const Error&) {
    fail(ErrorKind::Input, "problem coefficients must be rational");
  }
  std::vector<URep<Rat>> cands;
  std::vector<RealURep> pts;
  if (F.is_zero()) {
    pts = origin(prob.n());
  } else if (cfg.mode == Mode::Hybrid) {
    pts = critical_sample(F, cfg.seed);
  } else {
    Prepared P = prepare(prob, cfg);
    auto pieces = enum_pieces(P.prob, P.r);
    std::vector<std::vector<URep<EpsScalar>>> per(pieces.size());
    run_pool(pieces.size(), cfg.jobs, [&](std::size_t i) {
      if (!pieces[i].degenerate()) per[i] = piece_limits(pieces[i], P, cfg);
    });
    std::vector<URep<EpsScalar>> all;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].degenerate()) continue;
      ++rep.pieces_processed;
      for (auto& u : per[i]) {
        if (P.has_eps0) u.g.erase(u.g.begin());
        all.push_back(std::move(u));
      }
    }
    if (P.has_eps0) {
      auto [reps, cert] = remove_eps0(all, F);
      cands = std::move(reps);
      rep.certificate = std::move(cert);
    } else {
      for (const auto& u : all) {
        URep<Rat> r{as_rational(u.f), as_rational(u.g0), {}, u.mu, u.j};
        for (const auto& x : u.g) r.g.push_back(as_rational(x));
        cands.push_back(std::move(r));
      }
    }
    for (const auto& u : cands)
      for (auto& r : real_points(u)) pts.push_back(std::move(r));
  }
  for (auto& r : pts) {
    if (verify_membership(r, prob).pass) rep.points.push_back(std::move(r));
    else ++rep.candidates_pruned;
  }
  rep.points = dedup(std::move(rep.points));
  rep.status = rep.points.empty() ? Status::Empty : Status::Nonempty;
  return rep;
}

Decision decide(const Problem& prob, const PipelineConfig& cfg) {
  SampleReport r = sample(prob, cfg);
  Decision d;
  d.status = r.status;
  if (!r.points.empty()) d.witness = r.points.front();
  return d;
}

}  // namespace pqs
