#include "doctest.h"
#include "pqs/groebner.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

TEST_CASE("groebner basis of a line meeting a circle") {
  auto G = groebner_basis({qp("X1^2 + X2^2 - 1", 2), qp("X1 - X2", 2)});
  REQUIRE(G.size() == 2);
  CHECK(G[0] == qp("X1 - X2", 2));
  CHECK(G[1] == qp("X2^2 - 1/2", 2));
  CHECK(zero_dimensional(G));
  CHECK(staircase(G) == std::vector<Mono>{{0, 0}, {0, 1}});
  CHECK(normal_form(qp("X1*X2", 2), G) == qp("1/2", 2));
}

TEST_CASE("groebner edge cases") {
  CHECK(groebner_basis({qp("X1", 2), qp("X1 - 1", 2)}) == std::vector<QMPoly>{qp("1", 2)});
  CHECK(groebner_basis({QMPoly(2)}).empty());
  auto G = groebner_basis({qp("X1*X2", 2)});
  CHECK(!zero_dimensional(G));
  CHECK_THROWS_AS(staircase(G), Error);
}

TEST_CASE("groebner bases generate the ideal and reduce its members to zero") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    QMPoly a = random_qpoly(rng, 2, 2, 3), b = random_qpoly(rng, 2, 2, 3);
    auto G = groebner_basis({a, b});
    CHECK(normal_form(a, G).is_zero());
    CHECK(normal_form(b, G).is_zero());
    QMPoly c = random_qpoly(rng, 2, 2, 3);
    CHECK(normal_form(a * c + b * b, G).is_zero());
    // every S-polynomial reduces to zero: the basis is reduced and stable
    CHECK(groebner_basis(G) == G);
  }
}

TEST_CASE("multivariate gcd and square-free part") {
  QMPoly u = qp("X1 + X2", 2), v = qp("X1 - 1", 2), w = qp("X1*X2 + 2", 2);
  CHECK(exact_divide(u * v, v) == u);
  CHECK_THROWS_AS(exact_divide(u, v), Error);
  CHECK(mgcd(u.pow(2) * v, u * w) == u);
  CHECK(mgcd(v, w) == qp("1", 2));
  QMPoly c = qp("X1^2 + X2^2 - 1", 2);
  QMPoly s = msqfree_part(c.pow(2) * v);
  CHECK(exact_divide(s, c * v).is_constant());
  CHECK(msqfree_part(c) == c);
}

TEST_CASE("groebner algebra products and distinct points") {
  GroebnerAlgebra A(2, groebner_basis({qp("X1^2 - 1", 2), qp("X2^2 - 1", 2)}));
  CHECK(A.dim() == 4);
  CHECK(A.distinct_points() == 4);
  GroebnerAlgebra B(2, groebner_basis({qp("X1^2", 2), qp("X2 - X1", 2)}));
  CHECK(B.dim() == 2);
  CHECK(B.distinct_points() == 1);

  auto G = groebner_basis({qp("X1^2 + X2^2 - 3", 2), qp("X1*X2 - X2 + 1", 2)});
  GroebnerAlgebra C(2, G);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    QMPoly f = random_qpoly(rng, 2, 4, 4), g = random_qpoly(rng, 2, 4, 4);
    auto nf = C.normal_form(f * g).coords;
    auto prod = C.mul_coords(C.normal_form(f).coords, C.normal_form(g).coords);
    CHECK(nf == prod);
    QMPoly r = normal_form(f * g, G);
    for (std::size_t i = 0; i < C.dim(); ++i) CHECK(r.coeff(C.basis()[i]) == nf[i]);
  }
}
