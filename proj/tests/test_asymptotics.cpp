#include "divvol/asymptotics.hpp"
#include "divvol/zariski.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace divvol;
using divvol::testing::R;

namespace {

SampleCurve monomial(const Rational& c, unsigned k, const std::vector<Rational>& ts) {
  SampleCurve out;
  for (const auto& t : ts) out.points.push_back({t, c * divvol::pow(t, k)});
  return out;
}

}  // namespace

TEST_CASE("sample_curve on Bl1P2") {
  const auto lat = testing::bl1p2();
  // vol(E + tH) = t^2: N_t = E, P_t = tH
  const auto c = sample_curve(lat, {0, 1}, {1, 0}, {R(1, 4), R(1), R(1, 2)});
  REQUIRE(c.points.size() == 3);
  CHECK(c.points[0].t == 1);
  CHECK(c.points[0].v == 1);
  CHECK(c.points[1].v == R(1, 4));
  CHECK(c.points[2].v == R(1, 16));

  const auto h = sample_curve(lat, {2, -1}, {2, -1}, {R(1)});
  CHECK(h.points[0].v == 12);

  // (1, -2) + (1/8)(1, 0) = (9/8, -2): (9/8)^2 - 4 < 0 with a.E = 2 > 0, not pseff
  const auto z = sample_curve(lat, {1, -2}, {1, 0}, {R(1, 8)});
  CHECK(z.points[0].v == 0);

  CHECK_THROWS_AS(sample_curve(lat, {0, 1}, {1, 0}, {R(0)}), std::invalid_argument);
  CHECK_THROWS_AS(sample_curve(lat, {0, 1}, {1, 0}, {R(-1, 2)}), std::invalid_argument);
}

TEST_CASE("stable_expansion on Bl1P2") {
  const auto lat = testing::bl1p2();
  SUBCASE("nef class") {
    const auto ex = stable_expansion(lat, {1, -1}, {2, -1});
    CHECK(ex.poly == VolumePolynomial({0, 2, 3}));
    CHECK(ex.stable_support.empty());
  }
  SUBCASE("exceptional curve along the ample class") {
    const auto ex = stable_expansion(lat, {0, 1}, {2, -1});
    CHECK(ex.poly == VolumePolynomial({0, 0, 4}));
    CHECK(ex.stable_support == std::vector<std::size_t>{0});
    // nu(t) = 1 - t on the certified range
    for (const Rational& t : {ex.threshold, ex.threshold / 3}) {
      const auto z = decompose_or_throw(lat, DivisorClass{0, 1} + t * DivisorClass{2, -1});
      CHECK(z.nu == RationalVector{1 - t});
    }
  }
  SUBCASE("nef boundary direction") {
    const auto ex = stable_expansion(lat, {0, 1}, {1, 0});
    CHECK(ex.poly == VolumePolynomial({0, 0, 1}));
  }
  CHECK_THROWS_AS(stable_expansion(lat, {1, 0}, {2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(stable_expansion(lat, {1, -2}, {2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(stable_expansion(lat, {1, -1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("stable_expansion on Bl2P2 with a moving negative part") {
  const auto lat = testing::bl2p2();
  // a = 2L + E1, P = H - E2, N = L; nu_L(t) = 1 - t and P_t^2 = 4t + 8t^2.
  const auto ex = stable_expansion(lat, {2, -1, -2}, lat.ample());
  CHECK(ex.poly == VolumePolynomial({0, 4, 8}));
  CHECK(ex.stable_support == std::vector<std::size_t>{2});
  for (int j = 1; j <= 12; ++j) {
    const Rational t = ex.threshold / (1L << j);
    CHECK(ex.poly(t) == vol_surface(lat, DivisorClass{2, -1, -2} + t * lat.ample()));
  }
}

TEST_CASE("estimate_exponent") {
  const auto fit3 = estimate_exponent(monomial(5, 3, dyadic_grid(1, 10, 14)));
  CHECK(fit3.exponent == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit3.leading_coefficient == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(fit3.residual < 1e-9);

  SampleCurve mixed;
  for (const auto& t : dyadic_grid(1, 10, 20)) mixed.points.push_back({t, 2 * t + 3 * t * t});
  const auto fit1 = estimate_exponent(mixed);
  CHECK(std::fabs(fit1.exponent - 1.0) <= 0.05);

  const auto lat = testing::bl1p2();
  const auto fit2 = estimate_exponent(sample_curve(lat, {0, 1}, {1, 0}, dyadic_grid(1, 10, 20)));
  CHECK(std::fabs(fit2.exponent - 2.0) <= 1e-6);

  CHECK_THROWS_AS(estimate_exponent(monomial(1, 1, {R(1), R(1, 2)})), std::invalid_argument);
  CHECK_THROWS_AS(estimate_exponent(monomial(0, 1, {R(1), R(1, 2), R(1, 4)})),
                  std::invalid_argument);
}

TEST_CASE("check_lehmann") {
  const auto lat = testing::bl1p2();
  const auto grid = default_grid();
  const auto e = check_lehmann(lat, {0, 1}, {2, -1}, grid);
  CHECK(e.passed);
  CHECK(*e.constant == 4);
  CHECK(*e.exponent == 2);

  const auto nef = check_lehmann(lat, {1, -1}, {2, -1}, grid);
  CHECK(nef.passed);
  CHECK(*nef.exponent == 1);
  CHECK(*nef.constant == 2 + 3 * grid.back());

  const auto zero = check_lehmann(lat, {0, 0}, {2, -1}, grid);
  CHECK(*zero.constant == 3);
}

TEST_CASE("check_upper_bound and check_lower_bound") {
  const auto lat = testing::bl1p2();
  const auto grid = default_grid();
  const auto e = check_upper_bound(lat, {0, 1}, {2, -1}, grid);
  CHECK(e.passed);
  CHECK(*e.constant == 8);
  // P_1 = (3, -2) is nef, P_1.w = 4
  const auto nef = check_upper_bound(lat, {1, -1}, {2, -1}, grid);
  CHECK(nef.passed);
  CHECK(*nef.constant == 8);
  const auto zero = check_upper_bound(lat, {0, 0}, {2, -1}, grid);
  CHECK(zero.passed);
  CHECK(*zero.constant == 6);
  CHECK_THROWS_AS(check_upper_bound(lat, {0, 1}, {2, -1}, {R(2)}), std::invalid_argument);

  CHECK(check_lower_bound(lat, {0, 1}, {2, -1}, grid).passed);
  CHECK(check_lower_bound(lat, {1, -1}, {2, -1}, grid).passed);
}

TEST_CASE("check_derivative") {
  const auto lat = testing::bl1p2();
  // vol = 4t^2: derivative 8 t0 = 4 at t0 = 1/2; P_{1/2} = H, 2 P.w = 4.
  const auto e = check_derivative(lat, {0, 1}, {2, -1}, R(1, 2), R(1, 64));
  CHECK(e.passed);
  CHECK(*e.constant == 4);
  CHECK(e.abs_deviation == 0);

  const Rational t0(3, 10);
  const auto nef = check_derivative(lat, {1, -1}, {2, -1}, t0, R(1, 100));
  CHECK(nef.passed);
  CHECK(*nef.constant == 2 + 6 * t0);

  const auto zero = check_derivative(lat, {0, 0}, {2, -1}, R(1, 4), R(1, 8));
  CHECK(*zero.constant == 6 * R(1, 4));
  CHECK(zero.abs_deviation == 0);

  CHECK_THROWS_AS(check_derivative(lat, {1, -1}, {2, -1}, R(1, 4), R(1, 2)), std::invalid_argument);
}

TEST_CASE("check_derivative across a support change is not exact") {
  const auto lat = testing::bl1p2();
  // vol(E + t(2H - E)) = 4t^2 for t <= 1 and (2t)^2 - (t - 1)^2 beyond.
  const auto r = check_derivative(lat, {0, 1}, {2, -1}, R(1), R(1, 4));
  CHECK(r.abs_deviation > 0);
}

TEST_CASE("check_nd_zero_rigidity") {
  const auto lat = testing::bl1p2();
  const auto grid = default_grid();
  const auto a = check_nd_zero_rigidity(lat, {0, 1}, {2, -1}, grid);
  CHECK(a.passed);
  CHECK(*a.constant == 4);
  CHECK(*a.threshold == R(1, 2));

  const auto b = check_nd_zero_rigidity(lat, {0, 1}, {1, 0}, grid);
  CHECK(*b.constant == 1);

  const auto c = check_nd_zero_rigidity(lat, {0, 1}, {0, 1}, grid);
  CHECK(c.passed);
  CHECK(*c.constant == 0);

  CHECK_THROWS_AS(check_nd_zero_rigidity(lat, {1, -1}, {2, -1}, grid), std::invalid_argument);
}
