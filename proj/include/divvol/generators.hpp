#pragma once

// Seeded random lattices and classes for fuzzing, and an exact search for
// classes on the boundary of the pseudoeffective cone.

#include "divvol/lattice.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace divvol {

// Deterministic across platforms: bounded draws are reduced from raw
// mt19937_64 output instead of going through std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(unsigned numerator, unsigned denominator);

private:
  std::mt19937_64 engine_;
};

struct RandomLatticeOptions {
  std::size_t min_rank = 1;
  std::size_t max_rank = 6;
  std::size_t max_curves = 10;
};

// Gram of signature (1, r-1) in a randomly sheared basis, curves with negative
// square meeting each other nonnegatively, and an ample class positive on all
// of them. Always passes validate().
SurfaceLattice random_lattice(Rng& rng, const RandomLatticeOptions& options = {});

// Integer coordinates in [-bound, bound].
DivisorClass random_integer_class(Rng& rng, const SurfaceLattice& lattice, long bound);

// k * ample + nonnegative integer combination of catalog curves.
DivisorClass random_pseff_class(Rng& rng, const SurfaceLattice& lattice);

// Retries random integer classes until one is big; falls back to the ample class.
DivisorClass random_big_class(Rng& rng, const SurfaceLattice& lattice, long bound);

// Nonzero nef classes with square zero among small random integer vectors.
std::vector<DivisorClass> isotropic_nef_classes(Rng& rng, const SurfaceLattice& lattice,
                                                std::size_t tries = 2000);

// Follows p + s d from a big p until bigness is lost. Bisection narrows the
// exit to one piece of constant negative support, where P(s)^2 is an exact
// quadratic; a rational root that lands on a pseudoeffective non-big class is
// returned. Irrational exits yield nullopt.
std::optional<DivisorClass> find_boundary(const SurfaceLattice& lattice, const DivisorClass& p,
                                          const DivisorClass& d, int max_bisections = 64);

// Up to `count` distinct boundary classes from rays shot in several styles.
std::vector<DivisorClass> boundary_classes(Rng& rng, const SurfaceLattice& lattice,
                                           std::size_t count, std::size_t attempts = 200);

}  // namespace divvol
