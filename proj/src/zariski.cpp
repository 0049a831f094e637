#include "divvol/zariski.hpp"

#include "divvol/cones.hpp"

#include <algorithm>
#include <optional>

namespace divvol {

DivisorClass ZariskiDecomposition::negative_part(const SurfaceLattice& lattice) const {
  DivisorClass n = DivisorClass::zero(lattice.rank());
  for (std::size_t k = 0; k < support.size(); ++k) {
    n += nu[k] * lattice.curve(support[k]).cls;
  }
  return n;
}

Rational ZariskiDecomposition::coefficient(std::size_t index) const {
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] == index) return nu[k];
  }
  return 0;
}

namespace {

DivisorClass subtract_curves(const SurfaceLattice& lattice, DivisorClass a,
                             const std::vector<std::size_t>& support, const RationalVector& nu) {
  for (std::size_t k = 0; k < support.size(); ++k) {
    a -= nu[k] * lattice.curve(support[k]).cls;
  }
  return a;
}

void strip_zero_coefficients(ZariskiDecomposition& z) {
  std::vector<std::size_t> support;
  RationalVector nu;
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (z.nu[k] != 0) {
      support.push_back(z.support[k]);
      nu.push_back(z.nu[k]);
    }
  }
  z.support = std::move(support);
  z.nu = std::move(nu);
}

RationalVector pairings(const SurfaceLattice& lattice, const DivisorClass& a,
                        const std::vector<std::size_t>& support) {
  RationalVector out;
  out.reserve(support.size());
  for (auto i : support) out.push_back(dot(lattice, a, lattice.curve(i).cls));
  return out;
}

// Candidate with the given support, accepted iff nu >= 0 and P is nef.
std::optional<ZariskiDecomposition> try_support(const SurfaceLattice& lattice,
                                                const DivisorClass& a,
                                                const std::vector<std::size_t>& support) {
  const Matrix g = lattice.curve_gram(support);
  if (!negative_definite(g)) return std::nullopt;
  auto nu = solve(g, pairings(lattice, a, support));
  if (!nu) return std::nullopt;
  for (const auto& x : *nu) {
    if (x < 0) return std::nullopt;
  }
  ZariskiDecomposition z{subtract_curves(lattice, a, support, *nu), support, *nu};
  if (!is_nef(lattice, z.positive)) return std::nullopt;
  strip_zero_coefficients(z);
  return z;
}

// Searches subsets of `pool`, smallest first.
std::optional<ZariskiDecomposition> search_subsets(const SurfaceLattice& lattice,
                                                   const DivisorClass& a,
                                                   const std::vector<std::size_t>& pool) {
  const std::size_t n = pool.size();
  std::vector<std::vector<std::size_t>> subsets;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1UL << k)) s.push_back(pool[k]);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  for (const auto& s : subsets) {
    if (auto z = try_support(lattice, a, s)) return z;
  }
  return std::nullopt;
}

}  // namespace

bool same_outcome(const DecomposeResult& x, const DecomposeResult& y) {
  const auto* zx = std::get_if<ZariskiDecomposition>(&x);
  const auto* zy = std::get_if<ZariskiDecomposition>(&y);
  if (zx && zy) return *zx == *zy;
  return !zx && !zy;
}

DecomposeResult decompose(const SurfaceLattice& lattice, const DivisorClass& a) {
  if (a.size() != lattice.rank()) {
    throw std::invalid_argument("decompose: class length does not match rank");
  }
  std::vector<std::size_t> support;
  RationalVector nu;
  DivisorClass p = a;

  for (;;) {
    bool grew = false;
    for (std::size_t i = 0; i < lattice.curves().size(); ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      if (dot(lattice, p, lattice.curve(i).cls) < 0) {
        support.insert(std::upper_bound(support.begin(), support.end(), i), i);
        grew = true;
      }
    }
    if (!grew) break;
    const Matrix g = lattice.curve_gram(support);
    if (!negative_definite(g)) {
      return NotPseudoeffective{kNegativeDefiniteCertificate,
                                "violated curves span a Gram matrix that is not negative definite"};
    }
    nu = *solve(g, pairings(lattice, a, support));
    p = subtract_curves(lattice, a, support, nu);
  }

  ZariskiDecomposition z{p, support, nu};
  if (std::any_of(nu.begin(), nu.end(), [](const Rational& x) { return x < 0; })) {
    auto found = search_subsets(lattice, a, support);
    if (!found) {
      return NotPseudoeffective{kNegativePartCertificate,
                                "no support with nonnegative coefficients and nef positive part"};
    }
    z = std::move(*found);
  }
  strip_zero_coefficients(z);

  const Rational pp = square(lattice, z.positive);
  const Rational ph = dot(lattice, z.positive, lattice.ample());
  if (pp < 0 || ph < 0) {
    return NotPseudoeffective{kPositiveConeCertificate,
                              "positive part has P^2 = " + to_string(pp) +
                                  ", P.ample = " + to_string(ph)};
  }
  return z;
}

ZariskiDecomposition decompose_or_throw(const SurfaceLattice& lattice, const DivisorClass& a) {
  auto r = decompose(lattice, a);
  if (auto* z = std::get_if<ZariskiDecomposition>(&r)) return std::move(*z);
  const auto& np = std::get<NotPseudoeffective>(r);
  throw std::invalid_argument("class " + to_string(a) + " is not pseudoeffective (" +
                              np.certificate + ")");
}

ZariskiOracle::ZariskiOracle(const SurfaceLattice& lattice, std::size_t bound)
    : lattice_(lattice) {
  const std::size_t m = lattice.curves().size();
  if (m > bound) {
    throw OracleBoundExceeded("catalog has " + std::to_string(m) +
                              " curves, oracle bound is " + std::to_string(bound));
  }
  // Principal submatrices of a negative-definite matrix are negative definite,
  // so extending only negative-definite subsets reaches all of them.
  std::vector<std::vector<std::size_t>> frontier{{}};
  subsets_.push_back({{}, Matrix()});
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier) {
      const std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t i = start; i < m; ++i) {
        auto t = s;
        t.push_back(i);
        const Matrix g = lattice.curve_gram(t);
        if (!negative_definite(g)) continue;
        Matrix inv(t.size(), t.size());
        for (std::size_t col = 0; col < t.size(); ++col) {
          RationalVector e(t.size());
          e[col] = 1;
          const auto x = *solve(g, e);
          for (std::size_t row = 0; row < t.size(); ++row) inv(row, col) = x[row];
        }
        subsets_.push_back({t, std::move(inv)});
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
}

std::vector<ZariskiDecomposition> ZariskiOracle::enumerate(const DivisorClass& a) const {
  if (a.size() != lattice_.rank()) {
    throw std::invalid_argument("oracle: class length does not match rank");
  }
  RationalVector all_pairings;
  for (const auto& c : lattice_.curves()) all_pairings.push_back(dot(lattice_, a, c.cls));

  std::vector<ZariskiDecomposition> found;
  for (const auto& s : subsets_) {
    RationalVector rhs;
    for (auto i : s.indices) rhs.push_back(all_pairings[i]);
    const RationalVector nu = s.indices.empty() ? RationalVector{} : s.inverse.multiply(rhs);
    if (std::any_of(nu.begin(), nu.end(), [](const Rational& x) { return x < 0; })) continue;
    ZariskiDecomposition z{subtract_curves(lattice_, a, s.indices, nu), s.indices, nu};
    if (!is_nef(lattice_, z.positive)) continue;
    strip_zero_coefficients(z);
    if (std::find(found.begin(), found.end(), z) == found.end()) found.push_back(std::move(z));
  }
  return found;
}

DecomposeResult ZariskiOracle::decompose(const DivisorClass& a) const {
  auto found = enumerate(a);
  if (found.size() > 1) {
    throw UniquenessViolation("oracle found " + std::to_string(found.size()) +
                              " distinct decompositions of " + to_string(a));
  }
  if (found.empty()) {
    return NotPseudoeffective{kNegativePartCertificate,
                              "no negative-definite support yields a nef positive part"};
  }
  return std::move(found.front());
}

DecomposeResult oracle_decompose(const SurfaceLattice& lattice, const DivisorClass& a,
                                 std::size_t bound) {
  return ZariskiOracle(lattice, bound).decompose(a);
}

}  // namespace divvol
