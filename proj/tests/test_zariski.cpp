#include "divvol/check_suite.hpp"
#include "divvol/cones.hpp"
#include "divvol/generators.hpp"
#include "divvol/zariski.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace divvol;
using divvol::testing::R;

namespace {

ZariskiDecomposition as_decomposition(const DecomposeResult& r) {
  REQUIRE(is_decomposition(r));
  return std::get<ZariskiDecomposition>(r);
}

}  // namespace

TEST_CASE("decompose on Bl1P2") {
  const auto lat = testing::bl1p2();

  const auto& e = as_decomposition(decompose(lat, {0, 1}));
  CHECK(e.positive == DivisorClass{0, 0});
  CHECK(e.support == std::vector<std::size_t>{0});
  CHECK(e.nu == RationalVector{1});

  const auto& he = as_decomposition(decompose(lat, {1, 1}));
  CHECK(he.positive == DivisorClass{1, 0});
  CHECK(he.support == std::vector<std::size_t>{0});
  CHECK(he.nu == RationalVector{1});

  const auto& nef = as_decomposition(decompose(lat, {1, -1}));
  CHECK(nef.positive == DivisorClass{1, -1});
  CHECK(nef.support.empty());

  const auto bad = decompose(lat, {1, -2});
  REQUIRE(std::holds_alternative<NotPseudoeffective>(bad));
  CHECK(std::get<NotPseudoeffective>(bad).certificate == kPositiveConeCertificate);

  CHECK_THROWS_AS(decompose(lat, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("decompose on Bl2P2 with the line in the support") {
  const auto lat = testing::bl2p2();
  // 2L + E1 = (2, -1, -2): only L is violated, nu_L = 1, P = H - E2.
  const DivisorClass a{2, -1, -2};
  const auto& z = as_decomposition(decompose(lat, a));
  CHECK(z.positive == DivisorClass{1, 0, -1});
  CHECK(z.support == std::vector<std::size_t>{2});
  CHECK(z.nu == RationalVector{1});
  CHECK(same_outcome(decompose(lat, a), oracle_decompose(lat, a)));
}

TEST_CASE("oracle_decompose examples") {
  const auto lat = testing::bl1p2();
  const auto& e = as_decomposition(oracle_decompose(lat, {0, 1}));
  CHECK(e.positive == DivisorClass{0, 0});
  CHECK(e.nu == RationalVector{1});
  CHECK(std::holds_alternative<NotPseudoeffective>(oracle_decompose(lat, {1, -2})));

  const auto p2 = testing::p2();
  const auto& h = as_decomposition(oracle_decompose(p2, {3}));
  CHECK(h.positive == DivisorClass{3});
  CHECK(h.support.empty());

  // Bl1P2: {} and {E} are the only supports.
  CHECK(ZariskiOracle(lat).subset_count() == 2);
}

TEST_CASE("oracle refuses catalogs above its bound") {
  std::vector<Curve> curves;
  for (int i = 0; i < 3; ++i) curves.push_back({"E" + std::to_string(i), {0, 1}});
  const SurfaceLattice lat("dup", Matrix({{1, 0}, {0, -1}}), curves, {2, -1});
  CHECK_THROWS_AS(ZariskiOracle(lat, 2), OracleBoundExceeded);
}

TEST_CASE("zero class and rank-1 lattices") {
  const auto lat = testing::bl2p2();
  const auto& z = as_decomposition(decompose(lat, DivisorClass::zero(3)));
  CHECK(z.positive.is_zero());
  CHECK(z.support.empty());

  const auto p2 = testing::p2();
  CHECK(as_decomposition(decompose(p2, {R(5, 2)})).positive == DivisorClass{R(5, 2)});
  CHECK(std::holds_alternative<NotPseudoeffective>(decompose(p2, {-1})));
}

TEST_CASE("greedy decomposition agrees with the oracle and keeps its invariants") {
  Rng rng(2024);
  std::size_t pseff = 0;
  for (int l = 0; l < 25; ++l) {
    const auto lat = random_lattice(rng);
    const ZariskiOracle oracle(lat);
    for (int k = 0; k < 40; ++k) {
      const auto a = k % 2 ? random_integer_class(rng, lat, 10) : random_pseff_class(rng, lat);
      CAPTURE(to_string(a));
      const auto fast = decompose(lat, a);
      const auto all = oracle.enumerate(a);
      REQUIRE(all.size() <= 1);  // uniqueness
      CHECK(same_outcome(fast, oracle.decompose(a)));
      const auto* z = std::get_if<ZariskiDecomposition>(&fast);
      if (!z) continue;
      ++pseff;
      CHECK_FALSE(decomposition_invariant_violation(lat, a, *z));

      // Idempotence.
      const auto& again = as_decomposition(decompose(lat, z->positive));
      CHECK(again.positive == z->positive);
      CHECK(again.support.empty());

      // N(a + t H) <= N(a).
      for (const Rational& t : {R(1), R(1, 3), R(1, 64)}) {
        const auto& zt = as_decomposition(decompose(lat, a + t * lat.ample()));
        for (std::size_t i = 0; i < zt.support.size(); ++i) {
          CHECK(z->coefficient(zt.support[i]) > 0);
          CHECK(zt.nu[i] <= z->coefficient(zt.support[i]));
        }
      }
    }
  }
  CHECK(pseff > 200);
}
