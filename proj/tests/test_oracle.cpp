#include "doctest.h"
#include "pqs/oracle.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

TEST_CASE("cofactor determinant") {
  PolyMatrix<Rat> I(3, 3, 1);
  for (std::size_t i = 0; i < 3; ++i) I.at(i, i) = QMPoly(1, Rat(1));
  CHECK(cofactor_det(I) == QMPoly(1, Rat(1)));
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix<Rat> M(3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) M.at(i, j) = random_qpoly(rng, 2, 2, 2);
    CHECK(cofactor_det(M) == det(M));
    PolyMatrix<Rat> S = M;
    for (std::size_t j = 0; j < 3; ++j) std::swap(S.at(0, j), S.at(2, j));
    CHECK(cofactor_det(S) == -cofactor_det(M));
  }
  CHECK_THROWS_AS(cofactor_det(PolyMatrix<Rat>(5, 5, 1)), Error);
}

TEST_CASE("grid components") {
  Rat lo(-2), hi(2), res = make_rat(1, 8);
  auto circle = problem("Y1", {"X1^2 + X2^2 - 1"}, 2);
  CHECK(grid_components(circle, lo, hi, res).count == 1);
  auto cube = problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2);
  auto g = grid_components(cube, lo, hi, res);
  CHECK(g.count == 4);
  auto empty = problem("Y1", {"X1^2 + X2^2 + 1"}, 2);
  CHECK(grid_components(empty, lo, hi, res).count == 0);
  auto lines = problem("Y1", {"X1^2 - 1"}, 2);
  CHECK(grid_components(lines, lo, hi, res).count == 2);
  CHECK_THROWS_AS(grid_components(problem("Y1", {"X1"}, 4), lo, hi, res), Error);
}

TEST_CASE("resultant critical points") {
  auto circle = problem("Y1", {"X1^2 + X2^2 - 1"}, 2);
  auto pts = resultant_critical(circle);
  REQUIRE(pts.size() == 2);
  std::vector<std::vector<Rat>> xs;
  for (const auto& r : pts) xs.push_back(refine(r, 10));
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == std::vector<Rat>{Rat(-1), Rat(0)});
  CHECK(xs[1] == std::vector<Rat>{Rat(1), Rat(0)});

  auto cube = problem("Y1^2 + Y2^2", {"X1^2 - 1", "X2^2 - 1"}, 2);
  CHECK(resultant_critical(cube).size() == 4);
  CHECK(resultant_critical(problem("3", {"X1^2 - 1"}, 2)).empty());

  // self-consistency on a tilted ellipse
  auto ell = problem("Y1^2 - 4", {"2*X1^2 + X1*X2 + 3*X2^2 - X1 + 1/2"}, 2);
  auto e = resultant_critical(ell);
  CHECK(!e.empty());
  QMPoly F = to_rational(ell.composed());
  for (const auto& r : e) {
    CHECK(sign_at_point(F, r) == 0);
    CHECK(sign_at_point(F.partial(1), r) == 0);
  }
  CHECK_THROWS_AS(resultant_critical(problem("Y1", {"X1^2 - 1"}, 2)), Error);
}
