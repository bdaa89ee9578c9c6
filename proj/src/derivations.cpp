#include "supercoinv/derivations.hpp"

#include <sstream>

#include "supercoinv/errors.hpp"
#include "supercoinv/linalg.hpp"

namespace supercoinv {

namespace {

// α_{i,k} for i < k, 0 meaning the coordinate form.
Polynomial alpha(int i, int k, int n) {
  Polynomial xk = Polynomial::variable(n, k);
  return i == 0 ? xk : Polynomial::variable(n, i) - xk;
}

void check_forms(const std::vector<Polynomial>& forms, int n) {
  for (const auto& f : forms) {
    if (f.nvars() != n) throw DimensionError("linear form in the wrong ring");
    if (f.degree() != 1 || !f.is_homogeneous()) throw DomainError("hyperplanes must be given by linear forms");
  }
}

}  // namespace

Derivation::Derivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionError("derivation needs n >= 1 coefficients");
  for (const auto& c : coeffs_) {
    if (c.nvars() != n()) throw DimensionError("derivation coefficient in the wrong ring");
  }
}

Derivation Derivation::zero(int n) { return Derivation(std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(n))); }

Derivation Derivation::euler(int n) {
  std::vector<Polynomial> c;
  for (int k = 1; k <= n; ++k) c.push_back(Polynomial::variable(n, k));
  return Derivation(std::move(c));
}

const Polynomial& Derivation::coeff(int k) const {
  if (k < 1 || k > n()) throw IndexError("derivation slot out of range");
  return coeffs_[static_cast<std::size_t>(k - 1)];
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<int> Derivation::degree() const {
  std::optional<int> d;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return std::nullopt;
    if (d && *d != c.degree()) return std::nullopt;
    d = c.degree();
  }
  return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (other.n() != n()) throw DimensionError("adding derivations of different rank");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
  std::vector<Polynomial> c;
  for (const auto& x : d.coeffs()) c.push_back(f * x);
  return Derivation(std::move(c));
}

std::string to_string(const Derivation& d) {
  std::ostringstream os;
  bool first = true;
  for (int k = 1; k <= d.n(); ++k) {
    const Polynomial& c = d.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*d" << k;
  }
  return first ? "0" : os.str();
}

Polynomial apply(const Derivation& theta, const Polynomial& f) {
  if (f.nvars() != theta.n()) throw DimensionError("apply: derivation and polynomial in different rings");
  Polynomial out(f.nvars());
  for (int k = 1; k <= theta.n(); ++k) {
    const Polynomial& c = theta.coeff(k);
    if (!c.is_zero()) out += c * partial(f, k);
  }
  return out;
}

bool is_derivation_of(const Derivation& theta, const std::vector<Polynomial>& forms) {
  check_forms(forms, theta.n());
  for (const auto& a : forms) {
    if (!divides(a, apply(theta, a))) return false;
  }
  return true;
}

bool is_derivation_of(const Derivation& theta, const Arrangement& a) {
  if (a.n() != theta.n()) throw DimensionError("derivation and arrangement in different dimensions");
  return is_derivation_of(theta, a.linear_forms());
}

bool preserves_defining_ideal(const Derivation& theta, const std::vector<Polynomial>& forms) {
  check_forms(forms, theta.n());
  Polynomial q = product(theta.n(), forms);
  return divides(q, apply(theta, q));
}

SaitoCertificate saito_certificate(const std::vector<Derivation>& basis, const std::vector<Polynomial>& forms) {
  if (basis.empty()) throw DimensionError("saito_check: empty basis");
  const int n = basis.front().n();
  if (static_cast<int>(basis.size()) != n) {
    throw DimensionError("saito_check: need exactly " + std::to_string(n) + " derivations");
  }
  check_forms(forms, n);
  SaitoCertificate cert;
  int degree_sum = 0;
  bool has_zero = false;
  for (const auto& d : basis) {
    if (d.n() != n) throw DimensionError("saito_check: derivations of different rank");
    if (d.is_zero()) {
      has_zero = true;
      continue;
    }
    auto deg = d.degree();
    if (!deg) throw DomainError("saito_check: inhomogeneous derivation " + to_string(d));
    degree_sum += *deg;
  }
  cert.membership = true;
  for (const auto& d : basis) {
    if (!is_derivation_of(d, forms)) {
      cert.membership = false;
      break;
    }
  }
  cert.degree_sum = !has_zero && degree_sum == static_cast<int>(forms.size());
  if (has_zero) return cert;

  std::vector<std::vector<Polynomial>> m;
  for (const auto& d : basis) m.push_back(d.coeffs());
  Polynomial det = determinant(m);
  Polynomial q = product(n, forms);
  if (auto ratio = exact_quotient(det, q); ratio && !ratio->is_zero() && ratio->is_constant()) {
    cert.ratio = ratio->leading_term().coeff;
  }
  return cert;
}

bool saito_check(const std::vector<Derivation>& basis, const std::vector<Polynomial>& forms) {
  return saito_certificate(basis, forms).ok();
}

bool saito_check(const std::vector<Derivation>& basis, const Arrangement& a) {
  if (!basis.empty() && basis.front().n() != a.n()) throw DimensionError("basis and arrangement differ in rank");
  return saito_check(basis, a.linear_forms());
}

std::vector<Derivation> southwest_basis(const Arrangement& a) {
  if (!is_southwest(a)) throw DomainError("southwest_basis: arrangement is not southwest");
  const int n = a.n();
  std::vector<Derivation> out;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> column;  // the i with H_{i,j} ∈ A
    for (int i = 0; i < j; ++i) {
      if (a.contains(i, j)) column.push_back(i);
    }
    std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(n));
    for (int k = j; k <= n; ++k) {
      Polynomial term = Polynomial::constant(n, 1);
      for (int i : column) term *= alpha(i, k, n);
      c[static_cast<std::size_t>(k - 1)] = std::move(term);
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<Derivation> aj_basis(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  std::vector<Derivation> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(n));
    auto prefix = [&](int k) {
      Polynomial p = Polynomial::constant(n, 1);
      for (int j = 1; j < i; ++j) {
        if (!contains(J, j)) p *= alpha(j, k, n);
      }
      return p;
    };
    if (contains(J, i)) {
      c[static_cast<std::size_t>(i - 1)] = prefix(i);
    } else {
      for (int k = i; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = prefix(k) * Polynomial::variable(n, k);
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

Derivation restrict_derivation(const Derivation& theta, int p) {
  const int n = theta.n();
  if (p < 1 || p > n) throw IndexError("restrict_derivation: slot out of range");
  if (n == 1) throw DimensionError("restrict_derivation: nothing left after restriction");
  if (!specialize(theta.coeff(p), p, std::nullopt).is_zero()) {
    throw DomainError("restrict_derivation: x_p does not divide the d_p coefficient");
  }
  std::vector<Polynomial> c;
  for (int k = 1; k <= n; ++k) {
    if (k == p) continue;
    c.push_back(remove_variable(specialize(theta.coeff(k), p, std::nullopt), p));
  }
  return Derivation(std::move(c));
}

// ---------------------------------------------------------------------------

CMap::CMap(std::string name, std::vector<Polynomial> images) : name_(std::move(name)), images_(std::move(images)) {
  if (images_.empty()) throw DimensionError("CMap needs n >= 1 images");
  std::optional<int> d;
  for (const auto& im : images_) {
    if (im.nvars() != n()) throw DimensionError("CMap image in the wrong ring");
    if (im.is_zero()) continue;
    if (!im.is_homogeneous() || (d && *d != im.degree())) {
      throw DomainError("CMap images must be homogeneous of one degree");
    }
    d = im.degree();
  }
  degree_ = d.value_or(0);
}

CMap CMap::i_map(int n) {
  return CMap("i", std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial::constant(n, 1)));
}

CMap CMap::a_map(int n) {
  std::vector<Polynomial> im;
  for (int k = 1; k <= n; ++k) im.push_back(Polynomial::variable(n, k));
  return CMap("a", std::move(im));
}

Polynomial CMap::operator()(const Derivation& theta) const {
  if (theta.n() != n()) throw DimensionError("CMap applied to a derivation of different rank");
  Polynomial out(n());
  for (int k = 1; k <= n(); ++k) out += images_[static_cast<std::size_t>(k - 1)] * theta.coeff(k);
  return out;
}

Ideal st_ideal(const std::vector<Polynomial>& forms, const CMap& c, const std::vector<Derivation>& basis) {
  if (!saito_check(basis, forms)) throw DomainError("st_ideal: basis fails Saito's criterion");
  std::vector<Polynomial> gens;
  for (const auto& d : basis) gens.push_back(c(d));
  return Ideal(c.n(), std::move(gens));
}

Ideal st_ideal(const Arrangement& a, const CMap& c, const std::vector<Derivation>& basis) {
  if (a.n() != c.n()) throw DimensionError("st_ideal: arrangement and map differ in rank");
  return st_ideal(a.linear_forms(), c, basis);
}

std::vector<Polynomial> g_generators(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i) {
    auto prefix = [&](int k) {
      Polynomial p = Polynomial::constant(n, 1);
      for (int j = 1; j < i; ++j) {
        if (!contains(J, j)) p *= alpha(j, k, n);
      }
      return p;
    };
    if (contains(J, i)) {
      out.push_back(prefix(i));
    } else {
      Polynomial g(n);
      for (int k = i; k <= n; ++k) g += prefix(k) * Polynomial::variable(n, k);
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace supercoinv
