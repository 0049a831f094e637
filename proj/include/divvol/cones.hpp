#pragma once

#include "divvol/lattice.hpp"

#include <optional>
#include <string>

namespace divvol {

inline constexpr const char* kPositiveConeCertificate = "positive-cone";

struct NefResult {
  bool nef = true;
  // Name of a catalog curve pairing negatively, or "positive-cone" when the
  // class leaves the closed positive cone containing the ample class.
  std::optional<std::string> certificate;

  explicit operator bool() const { return nef; }
};

// a.C >= 0 for every catalog curve, a^2 >= 0 and a.ample >= 0.
NefResult is_nef(const SurfaceLattice& lattice, const DivisorClass& a);

struct ConeMembership {
  bool is_nef = false;
  bool is_pseff = false;
  bool is_big = false;
  std::optional<std::string> failing_certificate;
};

// Pseudoeffectivity and bigness are read off the Zariski decomposition.
ConeMembership classify(const SurfaceLattice& lattice, const DivisorClass& a);

inline bool is_big(const SurfaceLattice& lattice, const DivisorClass& a) {
  return classify(lattice, a).is_big;
}

}  // namespace divvol
