#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercoinv/monomial.hpp"

namespace supercoinv {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

/// Multivariate polynomial over Q in the variables x_1..x_n.
///
/// Terms are kept in canonical form: strictly decreasing graded reverse
/// lexicographic order, no zero coefficients. Every polynomial carries its
/// ambient variable count and binary operations between polynomials of
/// different rings throw DimensionError. Variable indices in the public API
/// are 1-based, matching x_1..x_n.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars);
  // Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, const Monomial& m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(int e) const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial product(int nvars, std::span<const Polynomial> factors);

// Formal partial derivative d/dx_i.
Polynomial partial(const Polynomial& p, int i);

// f (.) g := f(d_1, ..., d_n) applied to g.
Polynomial odot(const Polynomial& f, const Polynomial& g);

// prod_{1 <= i < j <= n} (x_i - x_j)
Polynomial vandermonde(int n);

// Substitutes x_i -> 0 (target empty) or x_i -> x_target.
Polynomial specialize(const Polynomial& p, int i, std::optional<int> target);

struct HomogeneousDecomposition {
  std::map<int, Polynomial> pieces;
  Polynomial sum(int nvars) const;
};
HomogeneousDecomposition homogeneous_decomposition(const Polynomial& p);
Polynomial homogeneous_component(const Polynomial& p, int degree);

// Multivariate division by a single divisor under grevlex:
// p = quotient * f + remainder, no term of remainder divisible by LM(f).
std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& f);
// Quotient when f | p exactly, otherwise nullopt.
std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& f);
bool divides(const Polynomial& f, const Polynomial& p);

// Embeds into a ring with more variables (new variables appended).
Polynomial extend_variables(const Polynomial& p, int nvars);
// Restricts to the first nvars variables; throws if a dropped variable occurs.
Polynomial truncate_variables(const Polynomial& p, int nvars);
// Removes x_i (which must not occur) and renumbers x_{i+1}.. down by one.
Polynomial remove_variable(const Polynomial& p, int i);
// Inverse of remove_variable: ring grows by one, new variable inserted at x_i.
Polynomial insert_variable(const Polynomial& p, int i);

// Divides by the leading coefficient under lex order (so it becomes +1).
Polynomial normalize_lex_leading(const Polynomial& p);

// Canonical text form: terms in grevlex order, no spaces, e.g.
// "x1^2-1/2*x1*x2+3". Unit coefficients are omitted before a monomial.
std::string rational_to_string(const Rational& c);
std::string monomial_to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text, int nvars);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace supercoinv
