#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace supercoinv {

// Upper bound on the number of variables of any ring handled by the library
// (ambient n plus auxiliary elimination variables).
inline constexpr int kMaxVars = 16;

/// Exponent vector x_1^{a_1} ... x_m^{a_m}. Storage is zero padded to
/// kMaxVars; the ambient variable count is carried by the owning polynomial.
/// Positions are 0-based here (position k holds the exponent of x_{k+1}).
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  // x_{pos+1}^power
  static Monomial variable(int pos, int power = 1);

  int operator[](int pos) const { return exps_[static_cast<std::size_t>(pos)]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  void set(int pos, int value);

  // Highest position with a nonzero exponent, -1 for the unit monomial.
  int support_end() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t deg_ = 0;
};

// Graded reverse lexicographic comparison with x_1 > ... > x_m. Returns
// negative / zero / positive like strcmp.
int grevlex_compare(const Monomial& a, const Monomial& b);
int lex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

}  // namespace supercoinv

template <>
struct std::hash<supercoinv::Monomial> {
  std::size_t operator()(const supercoinv::Monomial& m) const noexcept { return m.hash(); }
};
