#include "divvol/generators.hpp"

#include "divvol/cones.hpp"
#include "divvol/zariski.hpp"

#include <algorithm>

namespace divvol {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

bool Rng::chance(unsigned numerator, unsigned denominator) {
  return static_cast<unsigned>(uniform(0, static_cast<long>(denominator) - 1)) < numerator;
}

namespace {

Rational diag_dot(const RationalVector& diag, const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < diag.size(); ++i) acc += diag[i] * a[i] * b[i];
  return acc;
}

}  // namespace

SurfaceLattice random_lattice(Rng& rng, const RandomLatticeOptions& options) {
  const auto r = static_cast<std::size_t>(
      rng.uniform(static_cast<long>(options.min_rank), static_cast<long>(options.max_rank)));

  // Diagonal model diag(d0, -e_1, ..., -e_{r-1}).
  RationalVector diag(r);
  diag[0] = rng.chance(3, 4) ? 1 : 2;
  for (std::size_t i = 1; i < r; ++i) diag[i] = rng.chance(3, 4) ? -1 : -2;

  RationalVector ample(r, Rational(-1));
  ample[0] = static_cast<long>(r) + rng.uniform(0, 2);

  std::vector<RationalVector> curves;
  const auto target = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(options.max_curves)));
  for (int attempt = 0; attempt < 400 && curves.size() < target && r > 1; ++attempt) {
    RationalVector c(r);
    if (rng.chance(1, 3)) {
      c[static_cast<std::size_t>(rng.uniform(1, static_cast<long>(r) - 1))] = 1;
    } else {
      c[0] = rng.uniform(0, 2);
      for (std::size_t i = 1; i < r; ++i) c[i] = rng.uniform(-2, 2);
    }
    if (diag_dot(diag, c, c) >= 0 || diag_dot(diag, c, ample) <= 0) continue;
    const bool compatible = std::all_of(curves.begin(), curves.end(), [&](const auto& other) {
      return diag_dot(diag, c, other) >= 0;
    });
    if (compatible) curves.push_back(std::move(c));
  }

  // Shear the basis: columns of `basis` are the new basis vectors in
  // diagonal-model coordinates.
  Matrix basis(r, r);
  for (std::size_t i = 0; i < r; ++i) basis(i, i) = 1;
  if (r > 1 && rng.chance(1, 2)) {
    const long ops = rng.uniform(1, 3);
    for (long k = 0; k < ops; ++k) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r) - 1));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r) - 2));
      if (j >= i) ++j;
      const Rational s = rng.chance(1, 2) ? 1 : -1;
      for (std::size_t row = 0; row < r; ++row) basis(row, i) += s * basis(row, j);
    }
  }
  Matrix gram(r, r);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < r; ++q) {
      Rational acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc += basis(k, p) * diag[k] * basis(k, q);
      gram(p, q) = acc;
    }
  }
  auto to_basis = [&](const RationalVector& x) { return DivisorClass(*solve(basis, x)); };

  std::vector<Curve> catalog;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    catalog.push_back({"C" + std::to_string(i + 1), to_basis(curves[i])});
  }
  return SurfaceLattice("random-rank-" + std::to_string(r), std::move(gram), std::move(catalog),
                        to_basis(ample));
}

DivisorClass random_integer_class(Rng& rng, const SurfaceLattice& lattice, long bound) {
  DivisorClass a = DivisorClass::zero(lattice.rank());
  for (auto& c : a.coords) c = rng.uniform(-bound, bound);
  return a;
}

DivisorClass random_pseff_class(Rng& rng, const SurfaceLattice& lattice) {
  DivisorClass a = Rational(rng.uniform(0, 3)) * lattice.ample();
  for (const auto& c : lattice.curves()) {
    if (rng.chance(1, 2)) a += Rational(rng.uniform(0, 3)) * c.cls;
  }
  return a;
}

DivisorClass random_big_class(Rng& rng, const SurfaceLattice& lattice, long bound) {
  for (int i = 0; i < 200; ++i) {
    auto a = random_integer_class(rng, lattice, bound);
    if (is_big(lattice, a)) return a;
  }
  return lattice.ample();
}

std::vector<DivisorClass> isotropic_nef_classes(Rng& rng, const SurfaceLattice& lattice,
                                                std::size_t tries) {
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < tries; ++i) {
    auto f = random_integer_class(rng, lattice, 3);
    if (f.is_zero() || square(lattice, f) != 0 || !is_nef(lattice, f)) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Positive part of x minus the projection onto the span of `support`.
DivisorClass project_off(const SurfaceLattice& lattice, const DivisorClass& x,
                         const std::vector<std::size_t>& support) {
  if (support.empty()) return x;
  RationalVector rhs;
  for (auto i : support) rhs.push_back(dot(lattice, x, lattice.curve(i).cls));
  const auto nu = *solve(lattice.curve_gram(support), rhs);
  DivisorClass out = x;
  for (std::size_t k = 0; k < support.size(); ++k) out -= nu[k] * lattice.curve(support[k]).cls;
  return out;
}

std::vector<Rational> roots_in(const Rational& c0, const Rational& c1, const Rational& c2,
                               const Rational& lo, const Rational& hi) {
  // c0 + c1 s + c2 s^2
  std::vector<Rational> roots;
  if (c2 == 0) {
    if (c1 != 0) roots.push_back(-c0 / c1);
  } else {
    Rational root;
    if (rational_sqrt(c1 * c1 - 4 * c0 * c2, root)) {
      roots.push_back((-c1 - root) / (2 * c2));
      roots.push_back((-c1 + root) / (2 * c2));
    }
  }
  std::vector<Rational> inside;
  for (auto& s : roots) {
    if (s > lo && s <= hi) inside.push_back(s);
  }
  std::sort(inside.begin(), inside.end());
  return inside;
}

bool is_boundary(const SurfaceLattice& lattice, const DivisorClass& a) {
  const auto m = classify(lattice, a);
  return m.is_pseff && !m.is_big;
}

}  // namespace

std::optional<DivisorClass> find_boundary(const SurfaceLattice& lattice, const DivisorClass& p,
                                          const DivisorClass& d, int max_bisections) {
  if (!is_big(lattice, p) || d.is_zero()) return std::nullopt;
  Rational hi = 1;
  int doublings = 0;
  while (is_big(lattice, p + hi * d)) {
    if (++doublings > 40) return std::nullopt;
    hi *= 2;
  }
  Rational lo = 0;
  for (int iter = 0; iter <= max_bisections; ++iter) {
    const auto z = decompose_or_throw(lattice, p + lo * d);
    const DivisorClass p0 = project_off(lattice, p, z.support);
    const DivisorClass p1 = project_off(lattice, d, z.support);
    for (const auto& s : roots_in(square(lattice, p0), 2 * dot(lattice, p0, p1),
                                  square(lattice, p1), lo, hi)) {
      DivisorClass candidate = p + s * d;
      if (is_boundary(lattice, candidate)) return candidate;
    }
    const Rational mid = (lo + hi) / 2;
    if (is_big(lattice, p + mid * d)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

std::vector<DivisorClass> boundary_classes(Rng& rng, const SurfaceLattice& lattice,
                                           std::size_t count, std::size_t attempts) {
  std::vector<DivisorClass> out;
  const auto isotropic = isotropic_nef_classes(rng, lattice);
  const DivisorClass& h = lattice.ample();
  const DivisorClass minus_h = Rational(-1) * h;

  auto curve_combination = [&] {
    DivisorClass n = DivisorClass::zero(lattice.rank());
    for (const auto& c : lattice.curves()) {
      if (rng.chance(1, 3)) n += Rational(rng.uniform(1, 3)) * c.cls;
    }
    return n;
  };

  for (std::size_t attempt = 0; attempt < attempts && out.size() < count; ++attempt) {
    DivisorClass p, d;
    switch (attempt % 4) {
      case 0:  // toward the face spanned by curves
        p = Rational(rng.uniform(1, 3)) * h + curve_combination();
        d = minus_h;
        break;
      case 1:  // toward an isotropic nef ray, possibly plus curves
        if (isotropic.empty()) continue;
        p = h + Rational(rng.uniform(1, 2)) *
                    isotropic[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(isotropic.size()) - 1))];
        if (rng.chance(1, 2)) p += curve_combination();
        d = minus_h;
        break;
      case 2:  // random ray from a pseudoeffective point
        p = random_pseff_class(rng, lattice) + h;
        d = random_integer_class(rng, lattice, 5);
        break;
      default:  // strip curves off an ample-ish point
        p = Rational(rng.uniform(1, 3)) * h;
        d = Rational(-1) * curve_combination() + Rational(-rng.uniform(0, 1)) * h;
        break;
    }
    auto b = find_boundary(lattice, p, d);
    if (b && std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(std::move(*b));
  }
  return out;
}

}  // namespace divvol
