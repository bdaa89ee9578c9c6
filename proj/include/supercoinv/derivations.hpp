#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercoinv/arrangement.hpp"
#include "supercoinv/groebner.hpp"
#include "supercoinv/polynomial.hpp"

namespace supercoinv {

/// Σ_k c_k ∂_k with c_k ∈ Q[x_1..x_n]. Coefficient slots are 1-based in the
/// accessors to match ∂_1..∂_n.
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial> coeffs);
  static Derivation zero(int n);
  static Derivation euler(int n);  // Σ x_k ∂_k

  int n() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& coeff(int k) const;

  bool is_zero() const;
  // Common degree of the nonzero coefficients; nullopt for zero or mixed degrees.
  std::optional<int> degree() const;

  Derivation& operator+=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator*(const Polynomial& f, const Derivation& d);
  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

std::string to_string(const Derivation& d);

// θ(f) = Σ c_k ∂f/∂x_k
Polynomial apply(const Derivation& theta, const Polynomial& f);

// α | θ(α) for every listed linear form.
bool is_derivation_of(const Derivation& theta, const std::vector<Polynomial>& forms);
bool is_derivation_of(const Derivation& theta, const Arrangement& a);
// Q | θ(Q) with Q the product of the forms.
bool preserves_defining_ideal(const Derivation& theta, const std::vector<Polynomial>& forms);

struct SaitoCertificate {
  bool membership = false;
  bool degree_sum = false;        // Σ deg = number of hyperplanes
  std::optional<Rational> ratio;  // det / Q when it is a nonzero constant
  bool ok() const { return membership && degree_sum && ratio.has_value(); }
};

// Throws DimensionError for the wrong count and DomainError for inhomogeneous
// entries. The zero derivation is allowed and simply fails the criterion.
SaitoCertificate saito_certificate(const std::vector<Derivation>& basis, const std::vector<Polynomial>& forms);
bool saito_check(const std::vector<Derivation>& basis, const std::vector<Polynomial>& forms);
bool saito_check(const std::vector<Derivation>& basis, const Arrangement& a);

// ρ_j = Σ_{k>=j} (∏_{H_{i,j} ∈ A} α_{i,k}) ∂_k; requires a southwest A.
std::vector<Derivation> southwest_basis(const Arrangement& a);
// ρ^J_i for the arrangement A_J.
std::vector<Derivation> aj_basis(const IndexSet& J, int n);

// Sets x_p = 0, drops the ∂_p slot and renumbers; ambient n drops by one.
// Requires x_p | c_p.
Derivation restrict_derivation(const Derivation& theta, int p);

/// S-module map Der(S) -> S given by ∂_k ↦ images[k], images homogeneous of
/// one common degree.
class CMap {
 public:
  CMap(std::string name, std::vector<Polynomial> images);
  static CMap i_map(int n);  // ∂_k ↦ 1
  static CMap a_map(int n);  // ∂_k ↦ x_k

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(images_.size()); }
  int degree() const { return degree_; }
  const std::vector<Polynomial>& images() const { return images_; }
  Polynomial operator()(const Derivation& theta) const;

 private:
  std::string name_;
  std::vector<Polynomial> images_;
  int degree_ = 0;
};

// c(Der(A)) from a basis certified by Saito's criterion.
Ideal st_ideal(const std::vector<Polynomial>& forms, const CMap& c, const std::vector<Derivation>& basis);
Ideal st_ideal(const Arrangement& a, const CMap& c, const std::vector<Derivation>& basis);

// g_{J,i} = i(ρ^J_i)
std::vector<Polynomial> g_generators(const IndexSet& J, int n);

}  // namespace supercoinv
