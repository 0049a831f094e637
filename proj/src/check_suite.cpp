#include "divvol/check_suite.hpp"

#include "divvol/cones.hpp"
#include "divvol/generators.hpp"
#include "divvol/volume.hpp"

#include <cmath>
#include <sstream>

namespace divvol {

namespace {

constexpr std::size_t kMaxNotes = 5;
constexpr double kExponentTolerance = 0.05;

const std::vector<Rational>& exponent_grid() {
  static const std::vector<Rational> grid = dyadic_grid(1, 10, 20);
  return grid;
}

std::string describe(const DivisorClass& a) { return to_string(a); }

}  // namespace

void SuiteItem::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  passed = false;
  if (notes.size() < kMaxNotes) notes.push_back(what);
}

std::optional<std::string> decomposition_invariant_violation(const SurfaceLattice& lattice,
                                                             const DivisorClass& a,
                                                             const ZariskiDecomposition& z) {
  if (z.support.size() != z.nu.size()) return "support and coefficient lengths differ";
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (z.nu[k] <= 0) return "nonpositive coefficient on " + lattice.curve(z.support[k]).name;
    if (dot(lattice, z.positive, lattice.curve(z.support[k]).cls) != 0) {
      return "P not orthogonal to " + lattice.curve(z.support[k]).name;
    }
  }
  if (!is_nef(lattice, z.positive)) return "P is not nef";
  if (!negative_definite(lattice.curve_gram(z.support))) return "support Gram not negative definite";
  if (z.positive + z.negative_part(lattice) != a) return "P + N does not reconstruct the class";
  return std::nullopt;
}

bool CheckSuiteReport::passed() const {
  if (!validation.ok()) return false;
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

nlohmann::json CheckSuiteReport::to_json() const {
  using nlohmann::json;
  json out;
  out["variety"] = variety;
  out["seed"] = seed;
  out["trials"] = trials;
  out["passed"] = passed();
  json v = json::array();
  for (const auto& c : validation.checks) {
    v.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  out["validation"] = std::move(v);
  json checks = json::array();
  for (const auto& item : items) {
    checks.push_back({{"name", item.name},
                      {"passed", item.passed},
                      {"skipped", item.skipped},
                      {"cases", item.cases},
                      {"failures", item.failures},
                      {"notes", item.notes}});
  }
  out["checks"] = std::move(checks);
  json boundary_j = json::array();
  for (const auto& b : boundary) {
    json rig = json::array();
    for (const auto& c : b.rigidity_constants) rig.push_back(to_string(c));
    boundary_j.push_back({{"class", describe(b.a)},
                          {"nd", b.nd},
                          {"expansion", to_string(b.expansion)},
                          {"threshold", to_string(b.threshold)},
                          {"exponent", b.exponent},
                          {"nd_vol", 2.0 - b.exponent},
                          {"lehmann_c", to_string(b.lehmann_constant)},
                          {"upper_C", to_string(b.upper_constant)},
                          {"rigidity_C", std::move(rig)}});
  }
  out["boundary_classes"] = std::move(boundary_j);
  return out;
}

std::string CheckSuiteReport::to_text() const {
  std::ostringstream os;
  os << "variety " << variety << ", seed " << seed << ", trials " << trials << "\n";
  for (const auto& c : validation.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << "validate/" << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& item : items) {
    os << (item.skipped ? "SKIP " : item.passed ? "PASS " : "FAIL ") << item.name << " ("
       << item.cases << " cases";
    if (item.failures) os << ", " << item.failures << " failures";
    os << ")\n";
    for (const auto& n : item.notes) os << "     " << n << "\n";
  }
  for (const auto& b : boundary) {
    os << "boundary " << describe(b.a) << ": nd " << b.nd << ", vol(a + t w) = "
       << to_string(b.expansion) << " for t <= " << to_string(b.threshold) << ", exponent "
       << b.exponent << ", c = " << to_string(b.lehmann_constant)
       << ", C = " << to_string(b.upper_constant) << "\n";
  }
  os << (passed() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

CheckSuiteReport run_check_suite(const SurfaceLattice& lattice, const CheckSuiteOptions& options) {
  CheckSuiteReport report;
  report.variety = lattice.name();
  report.seed = options.seed;
  report.trials = options.trials;
  report.validation = validate(lattice);
  if (!report.validation.ok()) return report;

  Rng rng(options.seed);
  const DivisorClass& w = lattice.ample();
  const auto grid = default_grid();

  SuiteItem oracle{"oracle-agreement"};
  SuiteItem invariants{"zariski-invariants"};
  SuiteItem idempotence{"idempotence"};
  SuiteItem monotone{"monotone-negative-part"};
  SuiteItem cones{"cone-consistency"};
  SuiteItem dual{"dual-cone-soundness"};
  SuiteItem homogeneity{"volume-homogeneity"};
  SuiteItem monotonicity{"volume-monotonicity"};
  SuiteItem nef_expansion{"nef-expansion"};

  std::optional<ZariskiOracle> brute;
  try {
    brute.emplace(lattice, options.oracle_bound);
  } catch (const OracleBoundExceeded& e) {
    oracle.skipped = true;
    oracle.notes.push_back(std::string("skipped: ") + e.what());
  }

  // Positive-cone generators for the duality check.
  std::vector<DivisorClass> positive_cone;
  for (int i = 0; i < 200 && positive_cone.size() < 20; ++i) {
    auto g = random_integer_class(rng, lattice, options.bound);
    if (square(lattice, g) >= 0 && dot(lattice, g, w) >= 0) positive_cone.push_back(std::move(g));
  }

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const DivisorClass a = trial % 2 == 0 ? random_integer_class(rng, lattice, options.bound)
                                          : random_pseff_class(rng, lattice);
    const std::string tag = describe(a);
    const auto result = decompose(lattice, a);
    const auto* z = std::get_if<ZariskiDecomposition>(&result);

    if (brute) {
      try {
        const auto expected = brute->decompose(a);
        oracle.record(same_outcome(expected, result), "disagreement on " + tag);
      } catch (const UniquenessViolation& e) {
        oracle.record(false, e.what());
      }
    }

    const auto membership = classify(lattice, a);
    const Rational vol = vol_surface(lattice, a);
    cones.record(!membership.is_big || membership.is_pseff, "big but not pseff: " + tag);
    cones.record(membership.is_big == (vol > 0), "bigness vs volume: " + tag);
    cones.record(!(membership.is_nef && square(lattice, a) > 0) || membership.is_big,
                 "nef with positive square but not big: " + tag);
    for (const Rational& lambda : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
      const auto scaled = classify(lattice, lambda * a);
      cones.record(scaled.is_nef == membership.is_nef && scaled.is_pseff == membership.is_pseff &&
                       scaled.is_big == membership.is_big,
                   "scaling changes cone membership: " + tag);
      homogeneity.record(vol_surface(lattice, lambda * a) == lambda * lambda * vol,
                         "vol not 2-homogeneous: " + tag);
    }
    monotonicity.record(vol_surface(lattice, a + Rational(1, 2) * w) >= vol,
                        "vol decreased along ample: " + tag);

    if (membership.is_nef) {
      bool ok = true;
      for (const auto& c : lattice.curves()) ok = ok && dot(lattice, a, c.cls) >= 0;
      for (const auto& g : positive_cone) ok = ok && dot(lattice, a, g) >= 0;
      dual.record(ok, "nef class pairs negatively with a pseff generator: " + tag);
    }

    if (!z) continue;
    const auto violation = decomposition_invariant_violation(lattice, a, *z);
    invariants.record(!violation, tag + ": " + violation.value_or(""));

    const auto again = decompose(lattice, z->positive);
    const auto* zp = std::get_if<ZariskiDecomposition>(&again);
    idempotence.record(zp && zp->positive == z->positive && zp->support.empty(),
                       "decompose(P) != (P, 0) for " + tag);

    for (const Rational& t : {Rational(1), Rational(1, 2), Rational(1, 16)}) {
      const auto zt = decompose_or_throw(lattice, a + t * w);
      bool ok = true;
      for (std::size_t k = 0; k < zt.support.size(); ++k) {
        ok = ok && zt.nu[k] <= z->coefficient(zt.support[k]) && z->coefficient(zt.support[k]) > 0;
      }
      monotone.record(ok, "negative part grew along ample at t = " + to_string(t) + ": " + tag);
    }

    // The positive part is nef: compare the table polynomial with direct volumes.
    const auto poly = nef_polynomial(surface_table(lattice, z->positive, w));
    bool match = true;
    for (const auto& t : grid) match = match && poly(t) == vol_surface(lattice, z->positive + t * w);
    nef_expansion.record(match, "nef polynomial mismatch for P of " + tag);
  }

  SuiteItem search{"boundary-search"};
  SuiteItem expansion{"stable-expansion"};
  SuiteItem exponent{"exponent"};
  SuiteItem lehmann{"lehmann"};
  SuiteItem upper{"upper-bound"};
  SuiteItem lower{"lower-bound"};
  SuiteItem derivative{"derivative"};
  SuiteItem rigidity{"nd-zero-rigidity"};

  const auto boundary = boundary_classes(rng, lattice, options.boundary_target);
  search.record(!boundary.empty(), "no boundary class found");

  for (const auto& a : boundary) {
    const std::string tag = describe(a);
    BoundaryRecord rec;
    rec.a = a;
    rec.nd = nd_surface(lattice, a);
    const auto z = decompose_or_throw(lattice, a);

    ExpansionResult ex;
    try {
      ex = stable_expansion(lattice, a, w);
    } catch (const ExpansionError& e) {
      expansion.record(false, tag + ": " + e.what());
      continue;
    }
    rec.expansion = ex.poly;
    rec.threshold = ex.threshold;
    const Rational linear = 2 * dot(lattice, z.positive, w);
    bool ok = ex.poly.coefficient(0) == 0 && ex.poly.coefficient(1) == linear;
    if (z.positive.is_zero()) ok = ok && ex.poly.coefficient(2) >= square(lattice, w);
    else ok = ok && linear > 0;
    expansion.record(ok, tag + ": expansion " + to_string(ex.poly));

    const auto fit = estimate_exponent(sample_curve(lattice, a, w, exponent_grid()));
    rec.exponent = fit.exponent;
    exponent.record(std::fabs(fit.exponent - (2 - rec.nd)) <= kExponentTolerance,
                    tag + ": exponent " + std::to_string(fit.exponent));

    const auto lr = check_lehmann(lattice, a, w, grid);
    rec.lehmann_constant = lr.constant.value_or(0);
    lehmann.record(lr.passed, tag + ": " + lr.detail);
    const auto ur = check_upper_bound(lattice, a, w, grid);
    rec.upper_constant = ur.constant.value_or(0);
    upper.record(ur.passed, tag + ": " + ur.detail);
    const auto lb = check_lower_bound(lattice, a, w, grid);
    lower.record(lb.passed, tag + ": " + lb.detail);

    for (int k = 2; k <= 6; ++k) {
      const auto dr = check_derivative(lattice, a, w, ex.threshold * Rational(k, 8),
                                       ex.threshold / 64);
      derivative.record(dr.passed, tag + ": " + dr.detail);
    }

    if (z.positive.is_zero()) {
      for (std::size_t k = 0; k < options.rigidity_directions; ++k) {
        const auto b = random_big_class(rng, lattice, options.bound);
        const auto rr = check_nd_zero_rigidity(lattice, a, b, grid);
        rec.rigidity_constants.push_back(rr.constant.value_or(0));
        rigidity.record(rr.passed, tag + " along " + describe(b) + ": " + rr.detail);
      }
    }
    report.boundary.push_back(std::move(rec));
  }

  report.items = {oracle,      invariants,   idempotence, monotone,  cones,
                  dual,        homogeneity,  monotonicity, nef_expansion, search,
                  expansion,   exponent,     lehmann,     upper,     lower,
                  derivative,  rigidity};
  return report;
}

}  // namespace divvol
