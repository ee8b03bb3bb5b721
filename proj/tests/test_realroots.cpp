#include "doctest.h"
#include "pqs/realroots.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

TEST_CASE("root isolation") {
  auto r1 = isolate(parse_upoly("T^2 - 1"));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].lo < -1);
  CHECK(r1[0].hi >= -1);
  CHECK(r1[1].lo < 1);
  CHECK(r1[1].hi >= 1);
  CHECK(r1[0].hi <= r1[1].lo);
  CHECK(isolate(parse_upoly("T^2 + 1")).empty());
  auto r3 = isolate(parse_upoly("(T-1)^2*(T+2)"));
  CHECK(r3.size() == 2);
  CHECK(isolate(parse_upoly("3")).empty());
  CHECK_THROWS_AS(isolate(QPoly()), Error);

  // independent count: Descartes-free check by sign changes on a fine grid
  QPoly f = parse_upoly("(T-1/3)*(T-1/2)*(T+7)*(T^2-2)");
  auto r = isolate(f);
  CHECK(r.size() == 5);
  for (const auto& iv : r) {
    if (iv.exact) CHECK(f.eval(*iv.exact) == 0);
    else CHECK(sgn(f.eval(iv.lo)) * sgn(f.eval(iv.hi)) <= 0);
  }
  SturmChain sc(sqfree_part(f));
  CHECK(sc.count_all() == 5);
}

TEST_CASE("Thom encodings distinguish roots") {
  auto th = thom(parse_upoly("(T-1)*(T+1)*(T-2)"));
  REQUIRE(th.size() == 3);
  CHECK(th[0].second == ThomEncoding{1, -1});
  CHECK(th[1].second == ThomEncoding{-1, 1});
  CHECK(th[2].second == ThomEncoding{1, 1});
  auto lin = thom(parse_upoly("T"));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].second.empty());
  auto dbl = thom(parse_upoly("T^2"));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].second == ThomEncoding{0});
  CHECK_THROWS_AS(locate(parse_upoly("T^2 - 1"), ThomEncoding{1, 1}), Error);
  CHECK_THROWS_AS(locate(parse_upoly("T^2 + 1"), ThomEncoding{1}), Error);
}

TEST_CASE("sign at an algebraic point") {
  QPoly f = parse_upoly("T^2 - 2");
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T")) == 1);
  CHECK(sign_at(f, ThomEncoding{-1}, parse_upoly("T")) == -1);
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T^2 - 2")) == 0);
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T^3 - 2*T")) == 0);
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T - 141421/100000")) == 1);
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T - 141422/100000")) == -1);
  // shared factor vanishing at a different root
  QPoly g = parse_upoly("(T^2 - 2)*(T - 5)");
  CHECK(sign_at(g, isolate(g)[2], parse_upoly("T^2 - 2")) == 1);
  CHECK(sign_at(g, isolate(g)[1], parse_upoly("T - 5")) == -1);
}

TEST_CASE("refinement") {
  RealURep rep{parse_upoly("T^2 - 2"), parse_upoly("1"), {parse_upoly("T")}, {1}};
  auto x = refine(rep, 20);
  REQUIRE(x.size() == 1);
  Rat tol = make_rat(1, 1 << 20);
  CHECK(abs(x[0] * x[0] - 2) < 3 * tol);
  CHECK(x[0] > 1);
  RealURep q{parse_upoly("(T - 3/2)*(T + 4)"), parse_upoly("2"), {parse_upoly("T"), parse_upoly("T^2")}, {1}};
  auto y = refine(q, 10);
  CHECK(y[0] == make_rat(3, 4));
  CHECK(y[1] == make_rat(9, 8));
  RealURep bad{parse_upoly("T^2 - 2"), parse_upoly("T^2 - 2"), {parse_upoly("T")}, {1}};
  CHECK_THROWS_AS(refine(bad, 10), Error);
}

TEST_CASE("interval evaluation encloses values") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c;
    for (int i = 0; i < 5; ++i) c.push_back(random_rat(rng));
    QPoly h(std::move(c));
    Rat a = random_rat(rng), b = a + abs(random_rat(rng));
    auto [lo, hi] = eval_interval(h, a, b);
    for (int k = 0; k <= 4; ++k) {
      Rat x = a + (b - a) * make_rat(k, 4);
      CHECK(lo <= h.eval(x));
      CHECK(h.eval(x) <= hi);
    }
  }
}

TEST_CASE("sign after reduction and Thom injectivity") {
  QPoly f = parse_upoly("T^2 - 2");
  CHECK(sign_at(f, ThomEncoding{1}, parse_upoly("T^2 - 2 + T")) == 1);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    QPoly g(Rat(1));
    std::vector<Rat> roots;
    for (int i = 0; i < 4; ++i) {
      roots.push_back(random_rat(rng));
      g *= QPoly::var() - QPoly(roots.back());
    }
    auto th = thom(g);
    for (std::size_t i = 0; i < th.size(); ++i)
      for (std::size_t j = i + 1; j < th.size(); ++j) CHECK(th[i].second != th[j].second);
    for (const auto& [iv, s] : th) {
      Rat at = iv.hi;
      for (const auto& r : roots)
        if (r > iv.lo && r <= iv.hi) at = r;
      QPoly d = g;
      for (int sgn_i : s) {
        d = d.derivative();
        CHECK(sgn(d.eval(at)) == sgn_i);
      }
    }
  }
}
