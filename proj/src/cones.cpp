#include "divvol/cones.hpp"

#include "divvol/zariski.hpp"

namespace divvol {

NefResult is_nef(const SurfaceLattice& lattice, const DivisorClass& a) {
  for (const auto& c : lattice.curves()) {
    if (dot(lattice, a, c.cls) < 0) return {false, c.name};
  }
  if (dot(lattice, a, a) < 0 || dot(lattice, a, lattice.ample()) < 0) {
    return {false, kPositiveConeCertificate};
  }
  return {};
}

ConeMembership classify(const SurfaceLattice& lattice, const DivisorClass& a) {
  ConeMembership out;
  const NefResult nef = is_nef(lattice, a);
  out.is_nef = nef.nef;
  const DecomposeResult d = decompose(lattice, a);
  if (const auto* z = std::get_if<ZariskiDecomposition>(&d)) {
    out.is_pseff = true;
    out.is_big = square(lattice, z->positive) > 0;
    if (!out.is_nef) out.failing_certificate = nef.certificate;
  } else {
    out.failing_certificate = std::get<NotPseudoeffective>(d).certificate;
  }
  return out;
}

}  // namespace divvol
