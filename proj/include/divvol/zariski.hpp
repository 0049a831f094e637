#pragma once

// Zariski decomposition a = P + N on a surface lattice.
//
// decompose() grows the support greedily: every catalog curve pairing
// negatively with the running positive part joins the support, the Gram system
// G_S nu = (a.E_i) is re-solved, and the loop stops when no curve is violated.
// ZariskiOracle enumerates every negative-definite support instead and is kept
// independent of the greedy path so the two can be compared.

#include "divvol/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace divvol {

struct ZariskiDecomposition {
  DivisorClass positive;
  std::vector<std::size_t> support;  // catalog indices, ascending
  RationalVector nu;                 // nu[k] > 0 belongs to support[k]

  DivisorClass negative_part(const SurfaceLattice& lattice) const;
  // Coefficient of catalog curve `index` in N (zero off the support).
  Rational coefficient(std::size_t index) const;

  friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

inline constexpr const char* kNegativeDefiniteCertificate = "negative-definiteness";
inline constexpr const char* kNegativePartCertificate = "negative-part";

struct NotPseudoeffective {
  // "positive-cone", "negative-definiteness" or "negative-part".
  std::string certificate;
  std::string detail;
};

using DecomposeResult = std::variant<ZariskiDecomposition, NotPseudoeffective>;

inline bool is_decomposition(const DecomposeResult& r) {
  return std::holds_alternative<ZariskiDecomposition>(r);
}

// Equal decompositions, or both not pseudoeffective (certificates may differ).
bool same_outcome(const DecomposeResult& x, const DecomposeResult& y);

DecomposeResult decompose(const SurfaceLattice& lattice, const DivisorClass& a);

// Throws std::invalid_argument if `a` is not pseudoeffective.
ZariskiDecomposition decompose_or_throw(const SurfaceLattice& lattice, const DivisorClass& a);

class OracleBoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two distinct acceptable supports were found for the same class.
class UniquenessViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultOracleBound = 12;

// Brute-force decomposition over all negative-definite subsets of the catalog.
// The subset list and the Gram inverses are computed once per lattice.
class ZariskiOracle {
public:
  explicit ZariskiOracle(const SurfaceLattice& lattice, std::size_t bound = kDefaultOracleBound);

  // Every acceptable (P, N): nu >= 0 componentwise and P nef. Zero coefficients
  // are stripped and duplicates merged, so uniqueness means size() <= 1.
  std::vector<ZariskiDecomposition> enumerate(const DivisorClass& a) const;

  // Throws UniquenessViolation if enumerate() returns more than one result.
  DecomposeResult decompose(const DivisorClass& a) const;

  std::size_t subset_count() const { return subsets_.size(); }

private:
  struct Support {
    std::vector<std::size_t> indices;
    Matrix inverse;
  };
  SurfaceLattice lattice_;
  std::vector<Support> subsets_;
};

DecomposeResult oracle_decompose(const SurfaceLattice& lattice, const DivisorClass& a,
                                 std::size_t bound = kDefaultOracleBound);

}  // namespace divvol
