#include "divvol/cones.hpp"
#include "divvol/generators.hpp"
#include "divvol/volume.hpp"
#include "divvol/zariski.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace divvol;
using divvol::testing::R;

TEST_CASE("vol_surface on Bl1P2") {
  const auto lat = testing::bl1p2();
  CHECK(vol_surface(lat, {1, 0}) == 1);
  CHECK(vol_surface(lat, {1, 1}) == 1);
  CHECK(vol_surface(lat, {1, -1}) == 0);
  CHECK(vol_surface(lat, {1, -2}) == 0);
  CHECK(vol_surface(lat, {4, -2}) == 12);
}

TEST_CASE("nef_polynomial") {
  // (1 + 2t)^2 - (1 + t)^2 expanded by hand
  CHECK(nef_polynomial(NefIntersectionTable(2, {3, 1, 0})) == VolumePolynomial({0, 2, 3}));
  CHECK(nef_polynomial(NefIntersectionTable(3, {5, 0, 0, 0})) == VolumePolynomial({0, 0, 0, 5}));
  CHECK(nef_polynomial(NefIntersectionTable(2, {1, 0, -1})) == VolumePolynomial({-1, 0, 1}));
  // binom(4,k): 1 4 6 4 1
  CHECK(nef_polynomial(NefIntersectionTable(4, {1, 1, 1, 1, 1})) ==
        VolumePolynomial({1, 4, 6, 4, 1}));

  CHECK(to_string(VolumePolynomial({0, 2, 3})) == "2t + 3t^2");
  CHECK(to_string(VolumePolynomial({0, 0, 0, 1})) == "t^3");
  CHECK(to_string(VolumePolynomial({2, 2, 3})) == "2 + 2t + 3t^2");
  CHECK(to_string(VolumePolynomial({-1, 0, 1})) == "-1 + t^2");
  CHECK(to_string(VolumePolynomial({0, R(-1, 2), -1})) == "-(1/2)t - t^2");
  CHECK(to_string(VolumePolynomial()) == "0");
}

TEST_CASE("nef_polynomial matches direct binomial expansion in higher dimension") {
  // Oracle: multiply out (x + t)^n term by term, x^k -> s_k.
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    RationalVector s(static_cast<std::size_t>(n) + 1);
    s[0] = rng.uniform(1, 9);
    for (int k = 1; k <= n; ++k) s[static_cast<std::size_t>(k)] = rng.uniform(-9, 9);
    // coefficients of (x + t)^n as a polynomial in x and t: row of Pascal's triangle
    std::vector<std::vector<Rational>> pascal{{1}};
    for (int m = 1; m <= n; ++m) {
      std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
      for (int k = 0; k <= m; ++k) {
        if (k > 0) row[static_cast<std::size_t>(k)] += pascal.back()[static_cast<std::size_t>(k - 1)];
        if (k < m) row[static_cast<std::size_t>(k)] += pascal.back()[static_cast<std::size_t>(k)];
      }
      pascal.push_back(row);
    }
    RationalVector expected(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      expected[static_cast<std::size_t>(n - k)] = pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)];
    }
    CHECK(nef_polynomial(NefIntersectionTable(n, s)) == VolumePolynomial(expected));
  }
}

TEST_CASE("nef tables reject invalid input") {
  CHECK_THROWS_AS(NefIntersectionTable(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(NefIntersectionTable(2, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(NefIntersectionTable(2, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("nd_nef and nd_surface") {
  CHECK(nd_nef(NefIntersectionTable(2, {3, 1, 0})) == 1);
  CHECK(nd_nef(NefIntersectionTable(3, {4, 0, 0, 0})) == 0);
  CHECK(nd_nef(NefIntersectionTable(2, {1, 2, 3})) == 2);

  const auto lat = testing::bl1p2();
  CHECK(nd_surface(lat, {1, -1}) == 1);
  CHECK(nd_surface(lat, {0, 1}) == 0);
  CHECK(nd_surface(lat, {1, 0}) == 2);
  CHECK_THROWS_AS(nd_surface(lat, {1, -2}), std::invalid_argument);
}

TEST_CASE("volume is homogeneous, monotone along ample, and matches nef tables") {
  Rng rng(77);
  for (int l = 0; l < 12; ++l) {
    const auto lat = random_lattice(rng);
    const auto& h = lat.ample();
    for (int k = 0; k < 30; ++k) {
      const auto a = k % 2 ? random_integer_class(rng, lat, 10) : random_pseff_class(rng, lat);
      const Rational v = vol_surface(lat, a);
      CHECK(v >= 0);
      for (const Rational& s : {R(1, 2), R(3), R(5, 3)}) {
        CHECK(vol_surface(lat, s * a) == s * s * v);
        CHECK(vol_surface(lat, a + s * h) >= v);
      }
      const auto d = decompose(lat, a);
      if (!is_decomposition(d)) continue;
      const auto& p = std::get<ZariskiDecomposition>(d).positive;
      const auto table = surface_table(lat, p, h);
      const auto poly = nef_polynomial(table);
      for (int j = 1; j <= 20; ++j) {
        const Rational t(1, 1L << j);
        CHECK(poly(t) == vol_surface(lat, p + t * h));
      }
      if (square(lat, p) == 0) CHECK(nd_surface(lat, p) == nd_nef(table));
    }
  }
}
