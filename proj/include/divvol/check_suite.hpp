#pragma once

// Property and bound checks over one variety, driven by a seeded generator.

#include "divvol/asymptotics.hpp"
#include "divvol/lattice.hpp"
#include "divvol/zariski.hpp"

#include <json.hpp>

#include <optional>

#include <cstdint>
#include <string>
#include <vector>

namespace divvol {

struct CheckSuiteOptions {
  std::uint64_t seed = 7;
  std::size_t trials = 500;
  long bound = 10;  // random integer classes live in [-bound, bound]^rank
  std::size_t oracle_bound = kDefaultOracleBound;
  std::size_t boundary_target = 8;
  std::size_t rigidity_directions = 10;
};

struct SuiteItem {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // first few failures, or the skip reason

  void record(bool ok, const std::string& what);
};

struct BoundaryRecord {
  DivisorClass a;
  int nd = 0;
  VolumePolynomial expansion;
  Rational threshold;
  double exponent = 0;
  Rational lehmann_constant;
  Rational upper_constant;
  std::vector<Rational> rigidity_constants;
};

struct CheckSuiteReport {
  std::string variety;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  ValidationReport validation;
  std::vector<SuiteItem> items;
  std::vector<BoundaryRecord> boundary;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Aborts after validation when the lattice is invalid; the report then holds
// only the validation results and passed() is false.
CheckSuiteReport run_check_suite(const SurfaceLattice& lattice, const CheckSuiteOptions& options);

}  // namespace divvol

namespace divvol {

// First violated invariant of a decomposition of `a`: nu_i > 0, P.E_i = 0 on
// the support, P nef, support Gram negative definite, a = P + sum nu_i E_i.
std::optional<std::string> decomposition_invariant_violation(const SurfaceLattice& lattice,
                                                             const DivisorClass& a,
                                                             const ZariskiDecomposition& z);

}  // namespace divvol
