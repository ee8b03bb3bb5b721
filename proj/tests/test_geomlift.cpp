#include <chrono>

#include "doctest.h"
#include "pqs/geomlift.hpp"
#include "pqs/realroots.hpp"
#include "support.hpp"

using namespace pqs;
using namespace testing_support;

namespace {

EMPoly yp(const std::string& s, std::size_t n, const TowerPtr& t = nullptr) { return ep(s, n, t, "Y"); }

RationalMap identity(std::size_t n) {
  RationalMap m{{}, EMPoly(n, EpsScalar(1))};
  for (std::size_t i = 0; i < n; ++i) m.num.push_back(EMPoly::var(n, i));
  return m;
}

/// Real points of a limit representation over the rationals.
std::vector<std::vector<Rat>> points(const std::vector<URep<EpsScalar>>& reps, int bits = 12) {
  std::vector<std::vector<Rat>> out;
  for (const auto& u : reps) {
    QPoly f = as_rational(u.f), g0 = as_rational(u.g0);
    std::vector<QPoly> g;
    for (const auto& x : u.g) g.push_back(as_rational(x));
    QPoly fs = multiplicity_part(f, u.mu);
    for (const auto& [iv, sigma] : thom(fs)) {
      if (sign_at(fs, iv, g0) == 0) continue;
      out.push_back(refine(RealURep{fs, g0, g, sigma}, bits));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("algebraize and norm variable") {
  auto s = algebraize(yp("Y1^2 + Y2^2 - 1", 2), identity(2));
  CHECK(s.F == yp("(Y1^2 + Y2^2 - 1)^2 + (1 - Y3)^2", 3));
  REQUIRE(s.P.size() == 2);
  CHECK(s.P[0] == yp("Y3*Y1", 3));
  CHECK(s.P[1] == yp("Y3*Y2", 3));
  auto nn = algebraize(yp("Y1^2", 1), identity(1), true);
  CHECK(nn.F == yp("Y1^2 + (1 - Y2)^2", 2));
  // pointwise lift: (y, 1/Lambda(y)) zeroes F and P maps it to Psi(y)
  RationalMap psi{{yp("Y1 + Y2", 2)}, yp("Y1^2 + 1", 2)};
  auto l = algebraize(yp("Y1 - 2*Y2", 2), psi);
  std::vector<EpsScalar> y{EpsScalar(2), EpsScalar(1), EpsScalar(make_rat(1, 5))};
  CHECK(l.F.eval(y).is_zero());
  CHECK(l.P[0].eval(y) == EpsScalar(make_rat(3, 5)));

  LiftState c = algebraize_constant(yp("Y1", 1), identity(1), true);
  auto n1 = add_norm_var(c);
  CHECK(n1.F == yp("Y1 + (Y2 - Y1^2)^2", 2));
  CHECK(n1.y0 == 1);
  LiftState empty{yp("Y1", 1), {}, -1, -1, -1, 0, nullptr, -1, -1};
  CHECK(add_norm_var(empty).F == yp("Y1 + Y2^2", 2));
}

TEST_CASE("bounding and smoothing") {
  auto t = make_tower({"mu", "zeta"});
  LiftState s = add_norm_var(algebraize_constant(yp("Y1^2 - 1", 1), identity(1), true));
  auto b = bound_mu(s, t, 0);
  CHECK(b.nvars() == 3);
  CHECK(b.ybound == 2);
  EpsScalar mu = EpsScalar::eps(t, 0);
  CHECK(b.F == lift_poly(s.F.with_extra_vars(1), t) +
                   (EMPoly(3, EpsScalar(1)) - yp("Y1^2 + Y2^2 + Y3^2", 3).scaled(mu * mu)).pow(2));
  CHECK_THROWS_AS(bound_mu(s, t, 2), Error);

  CHECK(dbar_for(8) == 10);
  CHECK(dbar_for(7) == 8);
  auto z = smooth_zeta(b, t, 1);
  CHECK(z.dbar == dbar_for(b.F.total_degree()));
  // lim_zeta F_zeta = F_mu
  CHECK(z.F.map_coeffs([](const EpsScalar& x) { return lim_inner(x, 1); }) ==
        b.F.map_coeffs([](const EpsScalar& x) { return lim_inner(x, 1); }));
  // F_mu(0) = 0 here, so the zeta coefficient of the constant term is -(2V - 1), V = 3
  EpsScalar c0 = z.F.constant_term();
  EpsScalar zeta_coeff(0);
  for (const auto& [e, x] : c0.terms())
    if (e == Exps{0, 1}) zeta_coeff = EpsScalar(x);
  CHECK(zeta_coeff == EpsScalar(Rat(-5)));
  CHECK_THROWS_AS(smooth_zeta(b, t, 0), Error);
}

TEST_CASE("critical basis") {
  auto t = make_tower({"mu", "zeta"});
  LiftState s = add_norm_var(algebraize_constant(yp("Y1^2 - 1", 1), identity(1), true));
  auto z = smooth_zeta(bound_mu(s, t, 0), t, 1);
  auto B = critical_basis(z);
  CHECK(B.dimension() == critical_dimension(z));
  CHECK(B.dimension() == static_cast<std::size_t>(z.dbar * (z.dbar - 1) * (z.dbar - 1)));
  EpsScalar lead = EpsScalar::eps(t, 1) * EpsScalar::eps(t, 0, z.dbar) * Rat(z.dbar);
  CHECK(B.gens[0].lead == lead);
  CHECK(B.gens[2].lead == lead);
  CHECK(B.gens[1].lead == EpsScalar::eps(t, 1) * EpsScalar::eps(t, 0, z.dbar));
  // q = 0 micro-instance: two variables, N = dbar (dbar - 1)
  auto tz = make_tower({"zeta"});
  auto micro = smooth_zeta(add_norm_var(algebraize_constant(yp("Y1^2 - 1", 1), identity(1), true)), tz, 0);
  CHECK(critical_basis(micro).dimension() == static_cast<std::size_t>(micro.dbar * (micro.dbar - 1)));
}

TEST_CASE("limits of images on micro instances") {
  ImageLimitOptions opt;
  opt.assume_nonneg = true;
  opt.assume_bounded = true;
  opt.cand.j_cap = 2;
  auto t0 = std::chrono::steady_clock::now();
  auto reps = limits_of_image(yp("Y1^2", 1), identity(1), 0, opt);
  auto pts = points(reps);
  REQUIRE(!pts.empty());
  for (const auto& p : pts) CHECK(p == std::vector<Rat>{Rat(0)});

  // roots +-sqrt(e1) collapse to 0
  auto te = make_tower({"e1"});
  auto col = limits_of_image(yp("(Y1^2 - e1)^2", 1, te), identity(1), 1, opt);
  auto cp = points(col);
  REQUIRE(!cp.empty());
  for (const auto& p : cp) CHECK(p == std::vector<Rat>{Rat(0)});

  // two points: each is found
  auto two = points(limits_of_image(yp("(Y1^2 - 1)^2", 1), identity(1), 0, opt));
  bool lo = false, hi = false;
  for (const auto& p : two) {
    lo = lo || p[0] == -1;
    hi = hi || p[0] == 1;
  }
  CHECK(lo);
  CHECK(hi);
  MESSAGE("micro limits took " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s");

  opt.n_cap = 10;
  CHECK_THROWS_AS(limits_of_image(yp("Y1^2", 1), identity(1), 0, opt), Error);
}

TEST_CASE("circle image limit") {
  ImageLimitOptions opt;
  opt.assume_bounded = true;
  opt.cand.j_cap = 0;
  auto reps = limits_of_image(yp("Y1^2 + Y2^2 - 1", 2), identity(2), 0, opt);
  QMPoly circle = qp("X1^2 + X2^2 - 1", 2);
  int exact_on = 0;
  for (const auto& u : reps) {
    QPoly fs = multiplicity_part(as_rational(u.f), u.mu), g0 = as_rational(u.g0);
    std::vector<QPoly> g;
    for (const auto& x : u.g) g.push_back(as_rational(x));
    for (const auto& [iv, sigma] : thom(fs))
      if (sign_at(fs, iv, g0) != 0 && sign_at_point(circle, RealURep{fs, g0, g, sigma}) == 0) ++exact_on;
  }
  CHECK(exact_on >= 1);
}
