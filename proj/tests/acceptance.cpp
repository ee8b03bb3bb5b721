// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pqs/algebra0d.hpp"
#include "pqs/oracle.hpp"
#include "pqs/pieces.hpp"
#include "pqs/pipeline.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

namespace {

// Wall-clock limits in seconds.
constexpr double kHypercube2Limit = 60;
constexpr double kHypercube3Limit = 600;
constexpr double kEmptinessLimit = 10;
constexpr double kMicroLimit = 5;
constexpr double kDeterminantLimit = 60;
constexpr double kSymbolicLimit = 1800;
constexpr std::size_t kSymbolicCap = 4096;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Soundness {
  std::size_t checked = 0;
  std::vector<std::string> failures;
} soundness;

struct Eps0Runs {
  std::size_t applicable = 0, vacuous = 0;
  std::vector<std::string> failures;
} eps0_runs;

int failed = 0;

void report(int id, const std::string& name, double limit, const std::function<Outcome()>& fn) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.pass = false;
    o.detail += " (limit " + std::to_string(static_cast<int>(limit)) + " s exceeded)";
  }
  if (!o.pass) ++failed;
  std::printf("criterion %2d %s  %-34s %8.2f s  %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

/// Every emitted representation goes through here.
bool audit(const std::vector<RealURep>& reps, const Problem& prob, const std::string& tag) {
  bool ok = true;
  for (const auto& r : reps) {
    ++soundness.checked;
    auto v = verify_membership(r, prob);
    if (!v.pass) {
      soundness.failures.push_back(tag + ": " + v.diagnostic);
      ok = false;
    }
  }
  return ok;
}

/// Root counts, Thom encodings and test signs of the substituted candidates at v and v/2.
std::string eps0_probe(const std::vector<URep<EpsScalar>>& reps, const Eps0Certificate& cert) {
  if (!cert.applicable) return "not applicable";
  for (const auto& h : cert.test_polys)
    if (sgn(h.eval(cert.value)) != sgn(h.eval(Rat(cert.value / 2)))) return "test sign changes at v/2";
  for (const auto& u : reps) {
    QPoly a = specialize(u.f, {cert.value}), b = specialize(u.f, {Rat(cert.value / 2)});
    if (a.degree() != b.degree()) return "degree changes at v/2";
    auto ta = thom(a), tb = thom(b);
    if (ta.size() != tb.size()) return "root count changes at v/2";
    for (std::size_t i = 0; i < ta.size(); ++i)
      if (ta[i].second != tb[i].second) return "Thom encoding changes at v/2";
  }
  return "";
}

void record_eps0(const SampleReport& rep, const std::string& tag) {
  if (rep.certificate.applicable) ++eps0_runs.applicable;
  else ++eps0_runs.vacuous;
  if (rep.certificate.applicable)
    for (const auto& b : rep.certificate.bounds)
      if (!(rep.certificate.value < b)) eps0_runs.failures.push_back(tag + ": value not below a bound");
}

SampleReport run(const Problem& prob, const PipelineConfig& cfg, const std::string& tag) {
  auto rep = sample(prob, cfg);
  audit(rep.points, prob, tag);
  record_eps0(rep, tag);
  return rep;
}

/// Exact coordinates of a representation whose point is in `candidates`, else nullopt.
std::optional<std::vector<Rat>> match(const RealURep& r, const std::vector<std::vector<Rat>>& candidates) {
  std::size_t n = r.g.size();
  for (const auto& x : candidates) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      QMPoly h(n);
      Mono m(n, 0);
      m[i] = 1;
      h.add_term(m, Rat(1));
      h.add_term(Mono(n, 0), -x[i]);
      all = sign_at_point(h, r) == 0;
    }
    if (all) return x;
  }
  return std::nullopt;
}

std::vector<std::vector<Rat>> cube_vertices(std::size_t n) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Rat> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back((mask >> i) & 1 ? Rat(1) : Rat(-1));
    out.push_back(x);
  }
  return out;
}

Outcome hypercube(std::size_t n) {
  std::string p;
  std::vector<std::string> q;
  for (std::size_t i = 1; i <= n; ++i) {
    p += (i > 1 ? " + Y" : "Y") + std::to_string(i) + "^2";
    q.push_back("X" + std::to_string(i) + "^2 - 1");
  }
  Problem pr = problem(p, q, n);
  auto rep = run(pr, PipelineConfig{}, "hypercube n=" + std::to_string(n));
  auto verts = cube_vertices(n);
  std::set<std::vector<Rat>> hit;
  for (const auto& r : rep.points) {
    auto x = match(r, verts);
    if (!x) return {false, "a point is not a vertex"};
    hit.insert(*x);
  }
  bool ok = rep.points.size() == verts.size() && hit.size() == verts.size();
  return {ok, std::to_string(rep.points.size()) + " points, " + std::to_string(hit.size()) + " distinct vertices"};
}

SpecialAlgebra<EpsScalar> algebra(const std::vector<EMPoly>& gens) {
  return SpecialAlgebra<EpsScalar>(validate_special(gens));
}

Outcome micro_double_point() {
  auto t = make_tower({"e1"});
  auto A = algebra({ep("S1^2 - e1", 1, t)});
  auto cands = candidates(A, std::vector<EMPoly>{ep("S1", 1, t)});
  const URep<EpsScalar>* zero = nullptr;
  for (const auto& c : cands)
    if (c.j == 0 && c.mu == 0) zero = &c;
  if (!zero) return {false, "no (j=0, mu=0) candidate"};
  bool pair = zero->g0 == parse_eupoly("-2*T", t) && zero->g[0] == parse_eupoly("-2*e1", t);
  std::vector<URep<EpsScalar>> mu1;
  for (const auto& c : cands)
    if (c.j == 0 && c.mu == 1) mu1.push_back(c);
  auto lim = limit_candidates(mu1, 1);
  bool dbl = lim.size() == 1 && lim[0].f == parse_eupoly("T^2", nullptr) && lim[0].g[0].is_zero() &&
             !lim[0].g0.is_zero();
  std::set<std::vector<Rat>> image;
  for (const auto& u : lim)
    for (const auto& r : real_points({as_rational(u.f), as_rational(u.g0), {as_rational(u.g[0])}, u.mu, u.j})) {
      auto x = match(r, {{Rat(0)}});
      if (!x) return {false, "limit point other than 0"};
      image.insert(*x);
    }
  bool ok = pair && dbl && image.size() == 1;
  return {ok, std::string("g-pair ") + (pair ? "(-2e1, -2T)" : "mismatch") + ", limit " +
                  (dbl ? "T^2 at 0" : "mismatch")};
}

Outcome micro_image() {
  TowerPtr none;
  auto B = algebra({ep("S1^2 - 1", 1, none)});
  auto lim = limit_candidates(candidates(B, std::vector<EMPoly>{ep("S1^2", 1, none)}), 0);
  std::set<std::vector<Rat>> image;
  std::size_t reps = 0;
  for (const auto& u : lim)
    for (const auto& r : real_points({as_rational(u.f), as_rational(u.g0), {as_rational(u.g[0])}, u.mu, u.j})) {
      ++reps;
      auto x = match(r, {{Rat(1)}});
      if (!x) return {false, "image point other than 1"};
      image.insert(*x);
    }
  return {image.size() == 1, std::to_string(reps) + " representations, image {1}"};
}

EMPoly random_epoly(std::mt19937& rng, std::size_t nv, int deg, const TowerPtr& t) {
  EMPoly p(nv);
  std::uniform_int_distribution<int> e(0, deg), terms(1, 3);
  for (int k = terms(rng); k > 0; --k) {
    Mono m(nv, 0);
    int budget = deg;
    for (auto& x : m) {
      x = std::min(e(rng), budget);
      budget -= x;
    }
    p.add_term(m, random_eps(rng, t, 2, 2));
  }
  return p;
}

Outcome determinants() {
  std::mt19937 rng(606);
  auto t = make_tower({"e1", "e2"});
  std::uniform_int_distribution<std::size_t> size(1, 4);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = size(rng);
    PolyMatrix<EpsScalar> M(n, n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = random_epoly(rng, 2, 2, t);
    if (det(M) == cofactor_det(M)) ++agree;
  }
  return {agree == 200, std::to_string(agree) + "/200 agree"};
}

Outcome charpolys() {
  std::mt19937 rng(707);
  TowerPtr none;
  std::uniform_int_distribution<int> deg(1, 5), adeg(0, 3);
  int stickel = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int d = deg(rng);
    std::vector<Rat> roots;
    EPoly basis{EpsScalar(1)};
    for (int i = 0; i < d; ++i) {
      roots.push_back(random_rat(rng, 4));
      basis = basis * EPoly(std::vector<EpsScalar>{EpsScalar(-roots.back()), EpsScalar(1)});
    }
    EMPoly gen(1);
    for (int i = 0; i <= d; ++i) gen.add_term(Mono{i}, basis[static_cast<std::size_t>(i)]);
    auto A = algebra({gen});
    QPoly a;
    for (int i = adeg(rng); i >= 0; --i) a = a + QPoly::monomial(random_rat(rng), static_cast<std::size_t>(i));
    EMPoly am(1);
    for (int i = 0; i <= a.degree(); ++i) am.add_term(Mono{i}, EpsScalar(a[static_cast<std::size_t>(i)]));
    auto [chi, g] = charpoly_pair(A, A.normal_form(am), A.unit());
    QPoly prod(Rat(1));
    for (const auto& r : roots) prod = prod * QPoly(std::vector<Rat>{-a.eval(r), Rat(1)});
    if (as_rational(chi) == prod) ++stickel;
  }
  int scaling = 0;
  std::uniform_int_distribution<int> d12(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<EMPoly> gens;
    int d[2] = {d12(rng), d12(rng)};
    for (std::size_t v = 0; v < 2; ++v) {
      EMPoly gv(2);
      Mono m(2, 0);
      m[v] = d[v];
      gv.add_term(m, EpsScalar(Rat(1 + static_cast<long>(rng() % 3))));
      // tail: total degree below d_v, degree in S_w below d_w
      for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
          if (i + j < d[v] && rng() % 2) gv.add_term(Mono{i, j}, EpsScalar(random_rat(rng)));
      gens.push_back(gv);
    }
    auto A = algebra(gens);
    auto a = A.normal_form(to_eps(random_qpoly(rng, 2, 2, 3)));
    auto b = A.normal_form(to_eps(random_qpoly(rng, 2, 2, 3)));
    Rat r = random_rat(rng, 5);
    if (r == 0) r = Rat(3);
    auto ra = a, rb = b;
    for (auto& c : ra.coords) c = c * EpsScalar(r);
    for (auto& c : rb.coords) c = c * EpsScalar(r);
    auto [chi, g] = charpoly_pair(A, a, b);
    auto [chir, gr] = charpoly_pair(A, ra, rb);
    EPoly rT = EPoly::monomial(EpsScalar(r), 1);
    EpsScalar rN(1);
    for (std::size_t i = 0; i < A.dim(); ++i) rN = rN * EpsScalar(r);
    if (chir.compose(rT) == chi.scaled(rN) && gr.compose(rT) == g.scaled(rN)) ++scaling;
  }
  return {stickel == 50 && scaling == 20,
          "Stickelberger " + std::to_string(stickel) + "/50, scaling " + std::to_string(scaling) + "/20"};
}

/// A random n = 2, k = 1 instance with a diagonal rational perturbation t.
Problem random_instance(std::mt19937& rng) {
  std::uniform_int_distribution<long> small(-3, 3), pos(1, 4);
  Rat a(pos(rng)), c(pos(rng)), h = make_rat(small(rng), 4);
  if (h * h >= a * c) h = 0;
  Rat t = make_rat(1, 7 + pos(rng));
  QuadComponent q{{{EpsScalar(2 * a + t), EpsScalar(2 * h)}, {EpsScalar(2 * h), EpsScalar(2 * c + 2 * t)}},
                  {EpsScalar(make_rat(small(rng), 2)), EpsScalar(make_rat(small(rng), 3))},
                  EpsScalar(-Rat(pos(rng)))};
  Problem pr;
  pr.Q.n = 2;
  pr.Q.comps.push_back(q);
  pr.p = (rng() % 2) ? parse_epoly("Y1", {"Y1"}, nullptr) : parse_epoly("Y1^2 - Y1", {"Y1"}, nullptr);
  return pr;
}

Outcome piece_suite() {
  std::mt19937 rng(808);
  int instances = 0, points = 0, covered = 0, roundtrips = 0, roundtrip_fail = 0;
  for (int tries = 0; instances < 20 && tries < 200; ++tries) {
    Problem pr = random_instance(rng);
    std::vector<RealURep> crit;
    try {
      crit = resultant_critical(pr);
    } catch (const Error&) {
      continue;
    }
    ++instances;
    auto ps = enum_pieces(pr, 1);
    for (const auto& x : crit) {
      ++points;
      bool any = false;
      for (const auto& pc : ps) {
        if (pc.degenerate()) continue;
        auto xs = x_side(pc, pr);
        bool on = sign_at_point(to_rational(xs.inequation), x) != 0;
        for (const auto& e : xs.equations) on = on && sign_at_point(to_rational(e), x) == 0;
        if (!on) continue;
        any = true;
        for (const auto& rt : xs.roundtrip) {
          ++roundtrips;
          if (sign_at_point(to_rational(rt), x) != 0) ++roundtrip_fail;
        }
      }
      if (any) ++covered;
    }
  }
  bool ok = instances == 20 && points > 0 && covered == points && roundtrip_fail == 0;
  return {ok, std::to_string(instances) + " instances, " + std::to_string(covered) + "/" + std::to_string(points) +
                  " points covered, " + std::to_string(roundtrips - roundtrip_fail) + "/" +
                  std::to_string(roundtrips) + " roundtrip identities"};
}

Outcome eps0_removal() {
  bool bound = cauchy_lower_bound(parse_upoly("1 - 3*T + 2*T^2")) == make_rat(1, 6);
  auto t = make_tower({"e0"});
  EpsScalar e0 = EpsScalar::eps(t, 0);
  URep<EpsScalar> u;
  u.f = EPoly(std::vector<EpsScalar>{EpsScalar(-1), EpsScalar(0), EpsScalar(1) - Rat(3) * e0 + Rat(2) * e0 * e0});
  u.g0 = EPoly(EpsScalar(1));
  u.g = {EPoly::var()};
  auto [reps, cert] = remove_eps0({u}, qp("X1^2 - 1", 1));
  std::string probe = eps0_probe({u}, cert);
  bool fixture = cert.applicable && probe.empty();
  bool runs = eps0_runs.failures.empty();
  std::string detail = std::string("bound 1/6 ") + (bound ? "exact" : "wrong") + ", fixture stable " +
                       (fixture ? "at v=" + cert.value.get_str() : "no: " + probe) + ", pipeline runs " +
                       std::to_string(eps0_runs.applicable) + " substituted / " + std::to_string(eps0_runs.vacuous) +
                       " without eps0";
  return {bound && fixture && runs, detail};
}

Outcome symbolic_gate() {
  Problem pr = problem("Y1", {"X1^2 - 1"}, 1);
  PipelineConfig hy;
  auto hybrid = run(pr, hy, "symbolic gate (hybrid)");
  PipelineConfig sy;
  sy.mode = Mode::Symbolic;
  sy.n_cap = kSymbolicCap;
  try {
    auto symbolic = run(pr, sy, "symbolic gate (symbolic)");
    bool same = symbolic.points.size() == hybrid.points.size();
    for (std::size_t i = 0; same && i < symbolic.points.size(); ++i)
      same = same_point(symbolic.points[i], hybrid.points[i]);
    return {same, std::to_string(symbolic.points.size()) + " symbolic vs " + std::to_string(hybrid.points.size()) +
                      " hybrid points"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Resource) throw;
    return {false, "smallest five-infinitesimal instance: " + std::string(e.what())};
  }
}

}  // namespace

int main() {
  report(1, "hypercube n=2", kHypercube2Limit, [] { return hypercube(2); });
  report(2, "hypercube n=3", kHypercube3Limit, [] { return hypercube(3); });
  report(3, "two lines X1 = +-1", 0, [] {
    Problem pr = problem("Y1", {"X1^2 - 1"}, 2);
    auto rep = run(pr, PipelineConfig{}, "two lines");
    bool plus = false, minus = false;
    for (const auto& r : rep.points) {
      QMPoly up = qp("X1 - 1", 2), down = qp("X1 + 1", 2);
      plus = plus || sign_at_point(up, r) == 0;
      minus = minus || sign_at_point(down, r) == 0;
    }
    return Outcome{plus && minus, std::to_string(rep.points.size()) + " points, X1=1 " + (plus ? "yes" : "no") +
                                      ", X1=-1 " + (minus ? "yes" : "no")};
  });
  report(4, "emptiness X1^2 + X2^2 + 1", kEmptinessLimit, [] {
    Problem pr = problem("Y1", {"X1^2 + X2^2 + 1"}, 2);
    auto d = decide(pr, PipelineConfig{});
    if (d.witness) audit({*d.witness}, pr, "emptiness");
    return Outcome{d.status == Status::Empty, d.status == Status::Empty ? "EMPTY" : "NONEMPTY"};
  });
  report(5, "limits: double point 0", kMicroLimit, micro_double_point);
  report(5, "limits: image {1}", kMicroLimit, micro_image);
  report(6, "det vs cofactor (200)", kDeterminantLimit, determinants);
  report(7, "characteristic polynomials", 0, charpolys);
  report(8, "piece cover (20 instances)", 0, piece_suite);
  report(11, "symbolic gate", kSymbolicLimit, symbolic_gate);
  report(9, "eps0 removal", 0, eps0_removal);
  report(10, "soundness invariant", 0, [] {
    std::string detail = std::to_string(soundness.checked - soundness.failures.size()) + "/" +
                         std::to_string(soundness.checked) + " representations verified";
    for (const auto& f : soundness.failures) detail += "; " + f;
    return Outcome{soundness.failures.empty() && soundness.checked > 0, detail};
  });
  std::printf("%s: %d criteria failed\n", failed ? "FAILED" : "PASSED", failed);
  return failed ? 1 : 0;
}
