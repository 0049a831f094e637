#pragma once

#include "divvol/lattice.hpp"

namespace divvol::testing {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

// P^2 blown up at one point: basis (H, E), gram diag(1, -1).
inline SurfaceLattice bl1p2() {
  return SurfaceLattice("Bl1P2", Matrix({{1, 0}, {0, -1}}), {{"E", {0, 1}}}, {2, -1});
}

// P^2 blown up at two points: basis (H, E1, E2); L = H - E1 - E2.
inline SurfaceLattice bl2p2() {
  return SurfaceLattice("Bl2P2", Matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
                        {{"E1", {0, 1, 0}}, {"E2", {0, 0, 1}}, {"L", {1, -1, -1}}}, {3, -1, -1});
}

inline SurfaceLattice p2() { return SurfaceLattice("P2", Matrix({{1}}), {}, {1}); }

}  // namespace divvol::testing
