#include "doctest.h"
#include "pqs/oracle.hpp"
#include "pqs/pipeline.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

namespace {

RealURep rational_point(std::vector<Rat> x) {
  RealURep r{QPoly::var(), QPoly(Rat(1)), {}, {}};
  for (auto& v : x) r.g.push_back(QPoly(v));
  return r;
}

std::vector<std::vector<Rat>> coordinates(const std::vector<RealURep>& pts) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : pts) out.push_back(refine(r, 30));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("prepare deforms the hypercube system") {
  Problem pr = problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2);
  PipelineConfig cfg;
  cfg.mode = Mode::Symbolic;
  Prepared P = prepare(pr, cfg);
  REQUIRE(tower_size(P.tower) == 3);
  CHECK(P.prob.n() == 3);
  CHECK(P.prob.k() == 3);
  CHECK(P.r == 0);
  CHECK(P.has_eps0);
  CHECK(P.symbolic_inner == 2);
  EpsScalar e0 = EpsScalar::eps(P.tower, 0), e1 = EpsScalar::eps(P.tower, 1), e2 = EpsScalar::eps(P.tower, 2);
  CHECK(P.prob.level == e1);
  const auto& Q = P.prob.Q.comps;
  for (std::size_t i = 0; i < 3; ++i) CHECK(Q[0].H[i][i] == e2 - Rat(2) * e0 * e0);
  CHECK(Q[0].c == EpsScalar(1));
  // diag(1, 2, 3)^j scaled by e2 on top of the original Hessians
  CHECK(Q[1].H[0][0] == e2);
  CHECK(Q[1].H[1][1] == EpsScalar(2) + Rat(2) * e2);
  CHECK(Q[1].H[2][2] == Rat(3) * e2);
  CHECK(Q[2].H[1][1] == Rat(4) * e2);
  CHECK(Q[2].H[2][2] == EpsScalar(2) + Rat(9) * e2);
  CHECK(Q[1].H[0][1].is_zero());
  CHECK(Q[1].c == EpsScalar(-1));
  // p~ = Y0^2 + p^2
  CHECK(P.prob.p == parse_epoly("Y0^2 + (Y1^2 + Y2^2)^2", {"Y0", "Y1", "Y2"}, P.tower));
}

TEST_CASE("prepare flag paths") {
  Problem pr = problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2);
  PipelineConfig cfg;
  cfg.assume_nonneg = true;
  Prepared P = prepare(pr, cfg);
  CHECK(P.prob.p == parse_epoly("Y0^2 + Y1^2 + Y2^2", {"Y0", "Y1", "Y2"}, P.tower));
  cfg.rational_eps2 = make_rat(1, 1000);
  Prepared R = prepare(pr, cfg);
  CHECK(tower_size(R.tower) == 2);
  CHECK(R.prob.Q.comps[1].H[2][2] == EpsScalar(make_rat(3, 1000)));
  cfg.assume_bounded = true;
  Prepared B = prepare(pr, cfg);
  CHECK(!B.has_eps0);
  CHECK(B.prob.n() == 2);
  CHECK(B.prob.k() == 2);
  CHECK(B.prob.Q.comps[0].H[1][1] == EpsScalar(make_rat(1, 1000)));
  CHECK(B.prob.Q.comps[1].H[1][1] == EpsScalar(Rat(2) + make_rat(2, 1000)));
  cfg.rational_eps1 = Rat(0);
  CHECK_THROWS_AS(prepare(pr, cfg), Error);
}

TEST_CASE("Cauchy lower bounds") {
  CHECK(*cauchy_lower_bound(parse_upoly("1 - 3*T + 2*T^2")) == make_rat(1, 6));
  CHECK(*cauchy_lower_bound(parse_upoly("T^2")) == 1);
  CHECK(!cauchy_lower_bound(parse_upoly("5")));
  CHECK(!cauchy_lower_bound(QPoly()));
  // no positive root below the bound
  for (const char* s : {"1 - 3*T + 2*T^2", "2*T - 7*T^3", "T^2 - 1/4*T^3 + 1/9*T^5"}) {
    QPoly h = parse_upoly(s);
    Rat b = *cauchy_lower_bound(h);
    auto roots = isolate(h);
    for (const auto& iv : roots)
      if (iv.hi > 0) CHECK((iv.exact ? *iv.exact : iv.lo) >= (iv.exact ? b : b - 1) );
    for (int i = 1; i <= 8; ++i) CHECK(h.eval(Rat(b * make_rat(i, 9))) != 0);
  }
}

TEST_CASE("verify_membership") {
  Problem circle = problem("Y1", {"X1^2 + X2^2 - 1"}, 2);
  Problem wider = problem("Y1", {"X1^2 + X2^2 - 2"}, 2);
  QPoly T = QPoly::var();
  RealURep rep{parse_upoly("T^2 - 1"), QPoly(Rat(1)), {T, QPoly()}, {1}};
  CHECK(verify_membership(rep, circle).pass);
  auto bad = verify_membership(rep, wider);
  CHECK(!bad.pass);
  CHECK(!bad.diagnostic.empty());
  RealURep broken{parse_upoly("T^2 - 1"), parse_upoly("T - 1"), {T, QPoly()}, {1}};
  auto v = verify_membership(broken, circle);
  CHECK(!v.pass);
  CHECK(v.diagnostic.find("g0") != std::string::npos);
}

TEST_CASE("dedup") {
  QPoly T = QPoly::var();
  RealURep a{parse_upoly("T^2 - 1"), QPoly(Rat(1)), {T, QPoly()}, {1}};
  RealURep b{parse_upoly("T^2 - 1"), QPoly(Rat(1)), {T, QPoly()}, {-1}};
  RealURep c{parse_upoly("T - 2"), QPoly(Rat(2)), {QPoly(Rat(2)), QPoly()}, {}};
  CHECK(dedup({a, a}).size() == 1);
  CHECK(dedup({a, c}).size() == 1);
  CHECK(dedup({a, b}).size() == 2);
  CHECK(same_point(a, rational_point({1, 0})));
  RealURep s2{parse_upoly("T^2 - 2"), QPoly(Rat(1)), {T, QPoly()}, {1}};
  RealURep s2b{parse_upoly("T^4 - 4"), QPoly(Rat(1)), {T, QPoly()}, {1, 1, 1}};
  CHECK(same_point(s2, s2b));
  CHECK(dedup({s2, s2b, a}).size() == 2);
}

TEST_CASE("hybrid sample: hypercube, lines, empty, circle") {
  PipelineConfig cfg;
  auto hc = sample(problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2), cfg);
  CHECK(hc.status == Status::Nonempty);
  REQUIRE(hc.points.size() == 4);
  std::vector<std::vector<Rat>> expect{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  CHECK(coordinates(hc.points) == expect);

  Problem lines = problem("Y1", {"X1^2 - 1"}, 2);
  auto ln = sample(lines, cfg);
  bool plus = false, minus = false;
  for (const auto& x : coordinates(ln.points)) {
    plus = plus || x[0] == 1;
    minus = minus || x[0] == -1;
  }
  CHECK(plus);
  CHECK(minus);
  for (const auto& r : ln.points) CHECK(verify_membership(r, lines).pass);

  Decision e = decide(problem("Y1", {"X1^2 + X2^2 + 1"}, 2), cfg);
  CHECK(e.status == Status::Empty);
  CHECK(!e.witness);

  Problem circle = problem("Y1", {"X1^2 + X2^2 - 1"}, 2);
  Decision c = decide(circle, cfg);
  REQUIRE(c.witness);
  CHECK(verify_membership(*c.witness, circle).pass);
}

TEST_CASE("hybrid sample: squared input and degenerate input") {
  PipelineConfig cfg;
  Problem sq = problem("Y1^2", {"X1^2 + X2^2 - 1"}, 2);
  auto r = sample(sq, cfg);
  CHECK(r.status == Status::Nonempty);
  for (const auto& p : r.points) CHECK(verify_membership(p, sq).pass);
  auto z = sample(problem("0", {"X1^2 - 1"}, 2), cfg);
  REQUIRE(z.points.size() == 1);
  CHECK(z.points[0].g == std::vector<QPoly>{QPoly(), QPoly()});
  auto one = sample(problem("Y1", {"X1"}, 1), cfg);
  REQUIRE(one.points.size() == 1);
  CHECK(coordinates(one.points)[0] == std::vector<Rat>{0});
}

TEST_CASE("hybrid sample agrees with the grid on emptiness") {
  PipelineConfig cfg;
  const char* shapes[] = {"X1^2 + X2^2 - 1", "X1^2 - X2^2", "X1*X2 - 1/4", "X1^2 + 4*X2^2 - 4"};
  for (const char* q1 : shapes) {
    for (const char* p : {"Y1", "Y1*Y2"}) {
      std::vector<std::string> q{q1};
      if (std::string(p) == "Y1*Y2") q.push_back("X1 - X2 - 1/3");
      Problem pr = problem(p, q, 2);
      auto rep = sample(pr, cfg);
      for (const auto& r : rep.points) CHECK(verify_membership(r, pr).pass);
      auto grid = grid_components(pr, Rat(-3), Rat(3), make_rat(1, 16));
      CHECK(rep.points.empty() == (grid.count == 0));
    }
  }
}

TEST_CASE("remove_eps0 picks a stable value below every bound") {
  auto t = make_tower({"e0"});
  EpsScalar e0 = EpsScalar::eps(t, 0);
  URep<EpsScalar> u;
  // roots T = +-1/sqrt(1 - 3 e0 + 2 e0^2) of a circle-like curve X1^2 (1 - 3 e0 + 2 e0^2) = 1
  u.f = EPoly(std::vector<EpsScalar>{EpsScalar(-1), EpsScalar(0), EpsScalar(1) - Rat(3) * e0 + Rat(2) * e0 * e0});
  u.g0 = EPoly(EpsScalar(1));
  u.g = {EPoly::var()};
  QMPoly F = qp("X1^2 - 1", 1);
  auto [reps, cert] = remove_eps0({u}, F);
  CHECK(cert.applicable);
  REQUIRE(!cert.bounds.empty());
  CHECK(std::find(cert.bounds.begin(), cert.bounds.end(), make_rat(1, 6)) != cert.bounds.end());
  CHECK(cert.value > 0);
  for (const auto& b : cert.bounds) CHECK(cert.value < b);
  REQUIRE(reps.size() == 1);
  CHECK(thom(reps[0].f).size() == 2);
  QPoly half = specialize(u.f, {cert.value / 2});
  CHECK(thom(half).size() == 2);
}

TEST_CASE("symbolic mode reports the quotient dimension guard") {
  PipelineConfig cfg;
  cfg.mode = Mode::Symbolic;
  cfg.n_cap = 4096;
  try {
    sample(problem("Y1", {"X1^2 - 1"}, 1), cfg);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
    std::string msg = e.what();
    CHECK(msg.find("piece U=") != std::string::npos);
    CHECK(msg.find("N = 18750") != std::string::npos);
  }
}
