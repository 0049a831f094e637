#include "divvol/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace divvol {

bool DivisorClass::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size()) throw std::invalid_argument("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += other.coords[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size()) throw std::invalid_argument("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }

DivisorClass operator*(const Rational& s, DivisorClass a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

std::string to_string(const DivisorClass& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a[i]);
  }
  return out + ")";
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

SurfaceLattice::SurfaceLattice(std::string name, Matrix gram, std::vector<Curve> curves,
                               DivisorClass ample)
    : name_(std::move(name)), gram_(std::move(gram)), curves_(std::move(curves)),
      ample_(std::move(ample)) {
  if (!gram_.square() || gram_.rows() == 0) {
    throw std::invalid_argument("gram must be a non-empty square matrix");
  }
  if (ample_.size() != rank()) {
    throw std::invalid_argument("ample class has length " + std::to_string(ample_.size()) +
                                ", expected rank " + std::to_string(rank()));
  }
  for (const auto& c : curves_) {
    if (c.cls.size() != rank()) {
      throw std::invalid_argument("curve '" + c.name + "' has length " +
                                  std::to_string(c.cls.size()) + ", expected rank " +
                                  std::to_string(rank()));
    }
  }
}

Matrix SurfaceLattice::curve_gram(const std::vector<std::size_t>& indices) const {
  Matrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i; j < indices.size(); ++j) {
      out(i, j) = dot(*this, curves_[indices[i]].cls, curves_[indices[j]].cls);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

Rational dot(const SurfaceLattice& lattice, const DivisorClass& a, const DivisorClass& b) {
  const std::size_t n = lattice.rank();
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument("dot: class lengths " + std::to_string(a.size()) + ", " +
                                std::to_string(b.size()) + " do not match rank " +
                                std::to_string(n));
  }
  const Matrix& g = lattice.gram();
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] != 0) row += g(i, j) * b[j];
    }
    acc += a[i] * row;
  }
  return acc;
}

ValidationReport validate(const SurfaceLattice& lattice) {
  ValidationReport report;
  const Matrix& g = lattice.gram();

  ValidationCheck sym{"symmetry", g.symmetric(), ""};
  if (!sym.passed) sym.detail = "gram matrix is not symmetric";
  report.checks.push_back(sym);

  ValidationCheck sig{"signature", false, ""};
  if (sym.passed) {
    const Inertia in = inertia(g);
    sig.passed = in.positive == 1 && in.negative == lattice.rank() - 1 && in.zero == 0;
    std::ostringstream os;
    os << "inertia (+" << in.positive << ", -" << in.negative << ", 0x" << in.zero
       << "), expected (1, " << lattice.rank() - 1 << ")";
    sig.detail = os.str();
  } else {
    sig.detail = "not computed for an asymmetric gram";
  }
  report.checks.push_back(sig);

  const DivisorClass& h = lattice.ample();
  const Rational hh = dot(lattice, h, h);
  ValidationCheck amp{"ample-positive", hh > 0, "ample^2 = " + to_string(hh)};
  report.checks.push_back(amp);

  ValidationCheck self{"curve-self-intersection", true, ""};
  ValidationCheck against{"curve-ample", true, ""};
  ValidationCheck pairs{"curve-intersections", true, ""};
  const auto& curves = lattice.curves();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Rational cc = dot(lattice, curves[i].cls, curves[i].cls);
    if (cc >= 0 && self.passed) {
      self.passed = false;
      self.detail = curves[i].name + "^2 = " + to_string(cc) + " is not negative";
    }
    const Rational ch = dot(lattice, curves[i].cls, h);
    if (ch <= 0 && against.passed) {
      against.passed = false;
      against.detail = curves[i].name + ".ample = " + to_string(ch) + " is not positive";
    }
    for (std::size_t j = i + 1; j < curves.size() && pairs.passed; ++j) {
      const Rational cd = dot(lattice, curves[i].cls, curves[j].cls);
      if (cd < 0) {
        pairs.passed = false;
        pairs.detail = curves[i].name + "." + curves[j].name + " = " + to_string(cd) +
                       " (distinct irreducible curves meet nonnegatively)";
      }
    }
  }
  report.checks.push_back(self);
  report.checks.push_back(against);
  report.checks.push_back(pairs);
  return report;
}

}  // namespace divvol
