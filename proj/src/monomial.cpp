#include "supercoinv/monomial.hpp"

#include <string>

#include "supercoinv/errors.hpp"

namespace supercoinv {

namespace {

std::uint8_t checked_exponent(long value) {
  if (value < 0 || value > 255) {
    throw DomainError("monomial exponent out of range: " + std::to_string(value));
  }
  return static_cast<std::uint8_t>(value);
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
    throw DimensionError("too many variables for a monomial");
  }
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    exps_[k] = checked_exponent(exponents[k]);
    deg_ = static_cast<std::uint16_t>(deg_ + exps_[k]);
  }
}

Monomial Monomial::variable(int pos, int power) {
  Monomial m;
  m.set(pos, power);
  return m;
}

void Monomial::set(int pos, int value) {
  if (pos < 0 || pos >= kMaxVars) throw IndexError("monomial position out of range");
  auto& slot = exps_[static_cast<std::size_t>(pos)];
  deg_ = static_cast<std::uint16_t>(deg_ - slot);
  slot = checked_exponent(value);
  deg_ = static_cast<std::uint16_t>(deg_ + slot);
}

int Monomial::support_end() const {
  for (int k = kMaxVars - 1; k >= 0; --k) {
    if (exps_[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) {
    r.exps_[k] = checked_exponent(static_cast<long>(a.exps_[k]) + b.exps_[k]);
  }
  r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) {
    r.exps_[k] = checked_exponent(static_cast<long>(a.exps_[k]) - b.exps_[k]);
  }
  r.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int deg = 0;
  for (std::size_t k = 0; k < r.exps_.size(); ++k) {
    r.exps_[k] = a.exps_[k] > b.exps_[k] ? a.exps_[k] : b.exps_[k];
    deg += r.exps_[k];
  }
  r.deg_ = static_cast<std::uint16_t>(deg);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int k = kMaxVars - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kMaxVars; ++k) {
    if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
  }
  return 0;
}

}  // namespace supercoinv
