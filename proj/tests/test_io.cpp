#include "doctest.h"
#include "io.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;
using nlohmann::json;

#ifndef PQS_TEST_DATA
#define PQS_TEST_DATA "tests/data"
#endif

TEST_CASE("problem files round-trip") {
  io::ProblemFile pf{problem("Y1^2 + 3/2*Y2", {"X1^2 - 1", "X1*X2 + X2 - 1/3"}, 2), {}};
  pf.config.mode = Mode::Symbolic;
  pf.config.seed = 7;
  pf.config.rational_eps2 = make_rat(1, 1000);
  json j = io::problem_to_json(pf);
  io::ProblemFile back = io::problem_from_json(j);
  CHECK(back.problem.p == pf.problem.p);
  CHECK(back.problem.n() == 2);
  CHECK(back.problem.k() == 2);
  CHECK(back.config.mode == Mode::Symbolic);
  CHECK(back.config.seed == 7);
  REQUIRE(back.config.rational_eps2);
  CHECK(*back.config.rational_eps2 == make_rat(1, 1000));
  CHECK(io::problem_to_json(back) == j);
}

TEST_CASE("problem parse errors name the field") {
  json j = json::parse(R"({"n":2,"k":1,"p":[["1",[1]]],
    "Q":[{"H":[["1","2"],["3","1"]],"b":["0","0"],"c":"0"}]})");
  try {
    io::problem_from_json(j);
    FAIL("asymmetric H accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    CHECK(std::string(e.what()).find("Q[0].H") != std::string::npos);
  }
  json bad = j;
  bad["Q"][0]["H"] = json::parse(R"([["1","0"],["0","1"]])");
  bad["Q"][0]["c"] = "x/2";
  CHECK_THROWS_AS(io::problem_from_json(bad), Error);
  json ok = bad;
  ok["Q"][0]["c"] = "3/2";
  CHECK(io::problem_from_json(ok).problem.Q.comps[0].c == make_rat(3, 2));
  json missing = ok;
  missing.erase("k");
  CHECK_THROWS_AS(io::problem_from_json(missing), Error);
}

TEST_CASE("fixture files parse") {
  auto hc = io::read_problem(std::string(PQS_TEST_DATA) + "/hypercube2.json");
  CHECK(hc.problem.n() == 2);
  CHECK(hc.problem.k() == 2);
  CHECK(hc.problem.p == problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2).p);
  CHECK(hc.config.mode == Mode::Hybrid);
  CHECK_THROWS_AS(io::read_problem(std::string(PQS_TEST_DATA) + "/missing.json"), Error);
}

TEST_CASE("result files round-trip with approximations") {
  Problem pr = problem("Y1", {"X1^2 + X2^2 - 1"}, 2);
  auto rep = sample(pr, PipelineConfig{});
  io::ResultFile r = io::make_result(rep, Mode::Hybrid);
  io::add_approximations(r, 40);
  REQUIRE(r.approximations.size() == r.points.size());
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    auto exact = refine(r.points[i], 60);
    for (std::size_t c = 0; c < exact.size(); ++c) {
      Rat d = exact[c] - r.approximations[i].coords[c];
      CHECK(abs(d) <= make_rat(1, 1) / Rat(Int(1) << 39));
    }
  }
  io::ResultFile back = io::result_from_json(io::result_to_json(r));
  CHECK(back == r);
  for (const auto& p : back.points) CHECK(verify_membership(p, pr).pass);
}

TEST_CASE("decimal truncation") {
  CHECK(io::decimal(make_rat(-1, 3), 4) == "-0.3333");
  CHECK(io::decimal(Rat(2), 2) == "2.00");
  CHECK(io::decimal(make_rat(-1, 1000), 2) == "0.00");
}
