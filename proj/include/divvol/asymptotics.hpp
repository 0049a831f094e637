#pragma once

// Behaviour of t -> vol(a + t b) as t decreases to 0 on a surface lattice.

#include "divvol/lattice.hpp"
#include "divvol/volume.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divvol {

struct SamplePoint {
  Rational t;
  Rational v;
};

// Points ordered by strictly decreasing t.
struct SampleCurve {
  std::vector<SamplePoint> points;
};

// t_j = tmax * 2^-j for j = first..last (inclusive).
std::vector<Rational> dyadic_grid(const Rational& tmax, int first, int last);

// 2^-j, j = 1..20.
std::vector<Rational> default_grid();

// Exact vol(a + t b) per grid point. Duplicate t values are merged; any t <= 0
// throws std::invalid_argument.
SampleCurve sample_curve(const SurfaceLattice& lattice, const DivisorClass& a,
                         const DivisorClass& b, const std::vector<Rational>& grid);

struct ExpansionResult {
  VolumePolynomial poly;  // degree <= 2, zero constant term
  Rational threshold;     // poly(t) == vol(a + t w) for every t in (0, threshold]
  std::vector<std::size_t> stable_support;
  int halvings = 0;
};

struct ExpansionOptions {
  Rational start = 1;
  int max_halvings = 64;
};

class ExpansionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exact small-t expansion of vol(a + t w) for pseudoeffective non-big a and a
// nef w with w^2 > 0. Starting at t0 = options.start, fits q(t) = c1 t + c2 t^2
// through the exact samples at t0 and t0/2, and accepts once q(t0/4) matches
// and the negative part of a + t0 w has the same support as that of a. The
// support of N(a + t w) only shrinks as t grows, so agreement at t0 pins the
// support, and hence the quadratic, on all of (0, t0]. Otherwise t0 is halved.
ExpansionResult stable_expansion(const SurfaceLattice& lattice, const DivisorClass& a,
                                 const DivisorClass& w, const ExpansionOptions& options = {});

struct AsymptoticFit {
  double exponent = 0;
  double leading_coefficient = 0;
  double residual = 0;  // max |log v - (exponent log t + log c)|
};

// Least-squares slope of log v against log t. Needs >= 3 points, all v > 0.
AsymptoticFit estimate_exponent(const SampleCurve& samples);

struct CheckReport {
  std::string name;
  bool passed = false;
  std::optional<Rational> constant;   // c or C, depending on the check
  std::optional<Rational> threshold;  // largest t of a certified range
  std::optional<int> exponent;
  double abs_deviation = 0;
  double rel_deviation = 0;
  std::string detail;
};

// vol(a + t w) >= c t^(2 - nd(a)) with c = min_j v_j / t_j^(2 - nd); passes
// iff c > 0.
CheckReport check_lehmann(const SurfaceLattice& lattice, const DivisorClass& a,
                          const DivisorClass& w, const std::vector<Rational>& grid);

// vol(a + t w) >= t^2 w^2 on every grid point.
CheckReport check_lower_bound(const SurfaceLattice& lattice, const DivisorClass& a,
                              const DivisorClass& w, const std::vector<Rational>& grid);

// vol(a + t w) <= C t with C = 2 P_1.w, P_1 the positive part of a + w. Grid
// points must lie in (0, 1].
CheckReport check_upper_bound(const SurfaceLattice& lattice, const DivisorClass& a,
                              const DivisorClass& w, const std::vector<Rational>& grid);

// Central difference (v(t0+h) - v(t0-h)) / 2h against 2 P_t0.w. a + t w must
// be big at t0 and t0 +- h.
CheckReport check_derivative(const SurfaceLattice& lattice, const DivisorClass& a,
                             const DivisorClass& w, const Rational& t0, const Rational& h,
                             double tolerance = 1e-6);

// For a with zero positive part: vol(a + t b) / t^2 equals one constant C on
// the trailing run of the grid (smallest t). C = 0 when a + t b is never big
// there. Passes iff the run covers at least min(3, grid size) points.
CheckReport check_nd_zero_rigidity(const SurfaceLattice& lattice, const DivisorClass& a,
                                   const DivisorClass& b, const std::vector<Rational>& grid);

}  // namespace divvol
