#include "divvol/cones.hpp"
#include "divvol/generators.hpp"
#include "divvol/volume.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace divvol;
using divvol::testing::R;

TEST_CASE("is_nef on Bl1P2") {
  const auto lat = testing::bl1p2();
  CHECK(is_nef(lat, {1, -1}).nef);
  const auto e = is_nef(lat, {0, 1});
  CHECK_FALSE(e.nef);
  CHECK(e.certificate == "E");
  CHECK(is_nef(lat, {0, 0}).nef);
  // pairs nonnegatively with E but leaves the positive cone
  const auto h2e = is_nef(lat, {1, -2});
  CHECK_FALSE(h2e.nef);
  CHECK(h2e.certificate == kPositiveConeCertificate);
  CHECK_THROWS_AS(is_nef(lat, {1}), std::invalid_argument);
}

TEST_CASE("classify on Bl1P2") {
  const auto lat = testing::bl1p2();
  const auto not_pseff = classify(lat, {1, -2});
  CHECK_FALSE(not_pseff.is_pseff);
  CHECK_FALSE(not_pseff.is_big);
  CHECK(not_pseff.failing_certificate.has_value());

  const auto e = classify(lat, {0, 1});
  CHECK(e.is_pseff);
  CHECK_FALSE(e.is_big);
  CHECK_FALSE(e.is_nef);

  const auto h = classify(lat, {1, 0});
  CHECK(h.is_big);
  CHECK(h.is_pseff);
  CHECK(h.is_nef);
}

TEST_CASE("nef classes pair nonnegatively with pseudoeffective generators") {
  Rng rng(5);
  for (int l = 0; l < 8; ++l) {
    const auto lat = random_lattice(rng);
    std::vector<DivisorClass> generators;
    for (const auto& c : lat.curves()) generators.push_back(c.cls);
    while (generators.size() < lat.curves().size() + 30) {
      auto g = random_integer_class(rng, lat, 10);
      if (square(lat, g) >= 0 && dot(lat, g, lat.ample()) >= 0) generators.push_back(g);
    }
    std::size_t nef_seen = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto a = k % 2 ? random_integer_class(rng, lat, 10) : random_pseff_class(rng, lat);
      if (!is_nef(lat, a)) continue;
      ++nef_seen;
      for (const auto& g : generators) REQUIRE(dot(lat, a, g) >= 0);
    }
    CHECK(nef_seen > 0);
  }
}

TEST_CASE("cone predicates are scale invariant and bigness matches volume") {
  Rng rng(6);
  for (int l = 0; l < 10; ++l) {
    const auto lat = random_lattice(rng);
    for (int k = 0; k < 60; ++k) {
      const auto a = k % 2 ? random_integer_class(rng, lat, 10) : random_pseff_class(rng, lat);
      const auto m = classify(lat, a);
      CHECK((!m.is_big || m.is_pseff));
      CHECK(m.is_big == (vol_surface(lat, a) > 0));
      if (m.is_nef && square(lat, a) > 0) CHECK(m.is_big);
      for (const Rational& s : {R(1, 7), R(3), R(11, 2)}) {
        const auto ms = classify(lat, s * a);
        CHECK(ms.is_nef == m.is_nef);
        CHECK(ms.is_pseff == m.is_pseff);
        CHECK(ms.is_big == m.is_big);
      }
    }
  }
}
