#include "divvol/asymptotics.hpp"

#include "divvol/cones.hpp"
#include "divvol/zariski.hpp"

#include <algorithm>
#include <cmath>

namespace divvol {

namespace {

void require_positive_grid(const std::vector<Rational>& grid) {
  for (const auto& t : grid) {
    if (t <= 0) throw std::invalid_argument("grid entry " + to_string(t) + " is not positive");
  }
}

DivisorClass ray(const DivisorClass& a, const Rational& t, const DivisorClass& b) {
  return a + t * b;
}

Rational vol_at(const SurfaceLattice& lattice, const DivisorClass& a, const Rational& t,
                const DivisorClass& b) {
  return vol_surface(lattice, ray(a, t, b));
}

void require_nef_and_big_direction(const SurfaceLattice& lattice, const DivisorClass& w) {
  if (!is_nef(lattice, w) || square(lattice, w) <= 0) {
    throw std::invalid_argument("direction " + to_string(w) + " must be nef with w^2 > 0");
  }
}

}  // namespace

std::vector<Rational> dyadic_grid(const Rational& tmax, int first, int last) {
  std::vector<Rational> grid;
  Rational t = tmax;
  for (int j = 0; j < first; ++j) t /= 2;
  for (int j = first; j <= last; ++j) {
    grid.push_back(t);
    t /= 2;
  }
  return grid;
}

std::vector<Rational> default_grid() { return dyadic_grid(1, 1, 20); }

SampleCurve sample_curve(const SurfaceLattice& lattice, const DivisorClass& a,
                         const DivisorClass& b, const std::vector<Rational>& grid) {
  require_positive_grid(grid);
  std::vector<Rational> ts = grid;
  std::sort(ts.begin(), ts.end(), std::greater<>());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  SampleCurve out;
  out.points.reserve(ts.size());
  for (const auto& t : ts) out.points.push_back({t, vol_at(lattice, a, t, b)});
  return out;
}

ExpansionResult stable_expansion(const SurfaceLattice& lattice, const DivisorClass& a,
                                 const DivisorClass& w, const ExpansionOptions& options) {
  const auto base = decompose(lattice, a);
  const auto* z = std::get_if<ZariskiDecomposition>(&base);
  if (!z) throw std::invalid_argument("stable_expansion: class is not pseudoeffective");
  if (square(lattice, z->positive) != 0) {
    throw std::invalid_argument("stable_expansion: class is big");
  }
  require_nef_and_big_direction(lattice, w);
  if (options.start <= 0) throw std::invalid_argument("stable_expansion: start must be positive");

  Rational t0 = options.start;
  for (int halvings = 0; halvings <= options.max_halvings; ++halvings, t0 /= 2) {
    const Rational v1 = vol_at(lattice, a, t0, w);
    const Rational v2 = vol_at(lattice, a, t0 / 2, w);
    const Rational v3 = vol_at(lattice, a, t0 / 4, w);
    const Rational c2 = 2 * (v1 - 2 * v2) / (t0 * t0);
    const Rational c1 = (v1 - c2 * t0 * t0) / t0;
    VolumePolynomial q({0, c1, c2});
    if (q(t0 / 4) != v3) continue;
    const auto at_t0 = decompose_or_throw(lattice, ray(a, t0, w));
    if (at_t0.support != z->support) continue;
    return {std::move(q), t0, z->support, halvings};
  }
  throw ExpansionError("expansion did not stabilize within " +
                       std::to_string(options.max_halvings) +
                       " halvings; the curve catalog is likely incomplete");
}

AsymptoticFit estimate_exponent(const SampleCurve& samples) {
  const auto& pts = samples.points;
  if (pts.size() < 3) throw std::invalid_argument("estimate_exponent needs at least 3 samples");
  std::vector<double> x, y;
  for (const auto& p : pts) {
    if (p.t <= 0) throw std::invalid_argument("estimate_exponent: nonpositive t");
    if (p.v <= 0) {
      throw std::invalid_argument("estimate_exponent: zero volume at t = " + to_string(p.t));
    }
    x.push_back(log_rational(p.t));
    y.push_back(log_rational(p.v));
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("estimate_exponent: all t equal");
  AsymptoticFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.leading_coefficient = std::exp(intercept);
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.residual = std::max(fit.residual, std::fabs(y[i] - (fit.exponent * x[i] + intercept)));
  }
  return fit;
}

CheckReport check_lehmann(const SurfaceLattice& lattice, const DivisorClass& a,
                          const DivisorClass& w, const std::vector<Rational>& grid) {
  CheckReport r{.name = "lehmann"};
  const int nd = nd_surface(lattice, a);
  const unsigned e = static_cast<unsigned>(2 - nd);
  const auto curve = sample_curve(lattice, a, w, grid);
  std::optional<Rational> c;
  for (const auto& p : curve.points) {
    const Rational ratio = p.v / pow(p.t, e);
    if (!c || ratio < *c) c = ratio;
  }
  r.exponent = static_cast<int>(e);
  r.constant = c;
  r.passed = c && *c > 0;
  r.detail = "vol >= c t^" + std::to_string(e) + ", c = " + (c ? to_string(*c) : "n/a");
  return r;
}

CheckReport check_lower_bound(const SurfaceLattice& lattice, const DivisorClass& a,
                              const DivisorClass& w, const std::vector<Rational>& grid) {
  CheckReport r{.name = "lower-bound"};
  const Rational ww = square(lattice, w);
  r.constant = ww;
  r.exponent = 2;
  r.passed = true;
  for (const auto& p : sample_curve(lattice, a, w, grid).points) {
    if (p.v < ww * p.t * p.t) {
      r.passed = false;
      r.detail = "vol = " + to_string(p.v) + " < t^2 w^2 at t = " + to_string(p.t);
      return r;
    }
  }
  r.detail = "vol >= t^2 * " + to_string(ww);
  return r;
}

CheckReport check_upper_bound(const SurfaceLattice& lattice, const DivisorClass& a,
                              const DivisorClass& w, const std::vector<Rational>& grid) {
  for (const auto& t : grid) {
    if (t <= 0 || t > 1) throw std::invalid_argument("upper bound grid must lie in (0, 1]");
  }
  CheckReport r{.name = "upper-bound"};
  const auto p1 = decompose_or_throw(lattice, a + w);
  const Rational c = 2 * dot(lattice, p1.positive, w);
  r.constant = c;
  r.exponent = 1;
  r.passed = true;
  for (const auto& p : sample_curve(lattice, a, w, grid).points) {
    if (p.v > c * p.t) {
      r.passed = false;
      r.detail = "vol = " + to_string(p.v) + " > C t at t = " + to_string(p.t);
      return r;
    }
  }
  r.detail = "vol <= C t, C = 2 P_1.w = " + to_string(c);
  return r;
}

CheckReport check_derivative(const SurfaceLattice& lattice, const DivisorClass& a,
                             const DivisorClass& w, const Rational& t0, const Rational& h,
                             double tolerance) {
  if (h <= 0 || t0 - h <= 0) throw std::invalid_argument("derivative check needs 0 < h < t0");
  for (const Rational& t : {t0 - h, t0, t0 + h}) {
    if (!is_big(lattice, ray(a, t, w))) {
      throw std::invalid_argument("a + t w is not big at t = " + to_string(t));
    }
  }
  CheckReport r{.name = "derivative"};
  const Rational diff = (vol_at(lattice, a, t0 + h, w) - vol_at(lattice, a, t0 - h, w)) / (2 * h);
  const auto pt = decompose_or_throw(lattice, ray(a, t0, w));
  const Rational formula = 2 * dot(lattice, pt.positive, w);
  const Rational dev = abs(diff - formula);
  r.constant = formula;
  r.abs_deviation = to_double(dev);
  r.rel_deviation = formula != 0 ? to_double(dev / abs(formula)) : r.abs_deviation;
  r.passed = r.rel_deviation <= tolerance;
  r.detail = "difference quotient " + to_string(diff) + " vs 2 P_t.w = " + to_string(formula);
  return r;
}

CheckReport check_nd_zero_rigidity(const SurfaceLattice& lattice, const DivisorClass& a,
                                   const DivisorClass& b, const std::vector<Rational>& grid) {
  const auto z = decompose_or_throw(lattice, a);
  if (!z.positive.is_zero()) {
    throw std::invalid_argument("rigidity check needs a class with zero positive part");
  }
  CheckReport r{.name = "nd-zero-rigidity"};
  r.exponent = 2;
  const auto curve = sample_curve(lattice, a, b, grid);
  const auto& pts = curve.points;
  if (pts.empty()) {
    r.passed = true;
    r.detail = "empty grid";
    return r;
  }
  std::vector<Rational> ratio;
  for (const auto& p : pts) ratio.push_back(p.v / (p.t * p.t));
  std::size_t k = pts.size() - 1;
  while (k > 0 && ratio[k - 1] == ratio.back()) --k;
  const std::size_t run = pts.size() - k;
  r.constant = ratio.back();
  r.threshold = pts[k].t;
  r.passed = run >= std::min<std::size_t>(3, pts.size());
  r.detail = "vol / t^2 = " + to_string(ratio.back()) + " on " + std::to_string(run) +
             " grid points with t <= " + to_string(pts[k].t);
  return r;
}

}  // namespace divvol
