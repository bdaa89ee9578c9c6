#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercoinv/arrangement.hpp"
#include "supercoinv/derivations.hpp"
#include "supercoinv/groebner.hpp"

namespace supercoinv {

enum class STKind { Zero, Infinite, PoincareDuality };
const char* to_string(STKind kind);

/// S / c(Der(A)) together with the data that certifies its shape.
struct STInstance {
  std::optional<Arrangement> arrangement;  // empty for arrangements outside the augmented braid family
  std::vector<Polynomial> forms;
  std::string cmap;
  int cmap_degree = 0;
  std::vector<Derivation> basis;
  std::vector<int> exponents;  // degrees of the basis derivations
  Ideal ideal = Ideal(1, {});
  HilbertSeries hilbert;  // truncated when infinite
  STKind kind = STKind::Zero;
  int socle_degree = -1;  // Σ e_i + n(d-1); meaningful for PoincareDuality
  // PoincareDuality: series equals ∏(1 - q^{e_i+d})/(1 - q)^n, is palindromic and
  // ends at the socle degree. Other branches: the series is empty / truncated.
  bool series_consistent = false;
};

// Basis certified by Saito's criterion for the southwest and A_J families.
std::optional<std::vector<Derivation>> certified_basis(const Arrangement& a);

// Throws DomainError when the basis fails Saito's criterion.
STInstance classify(const std::vector<Polynomial>& forms, const CMap& c, const std::vector<Derivation>& basis);
// Throws DomainError when no certified basis is known for a.
STInstance classify(const Arrangement& a, const CMap& c);

// 𝔦_A from the certified basis.
Ideal i_ideal(const Arrangement& a);
// Hilbert series of ST(A, 𝔦); empty coefficients for the zero algebra.
HilbertSeries st_series(const Arrangement& a);

enum class LemmaStatus { Holds, Fails, SkippedHypothesis };
const char* to_string(LemmaStatus status);

// c_B = c_A : (Q(A)/Q(B)) under the hypotheses that ST(A, c) is finite and
// Q(A)/Q(B) ∉ c_A. B must be a subarrangement of A.
LemmaStatus derivation_colon_check(const Arrangement& a, const Arrangement& b, const CMap& c);

struct ExactSequenceReport {
  int p = 0;
  HilbertSeries whole;       // ST(A)
  HilbertSeries deletion;    // ST(A \ H_p)
  HilbertSeries restriction; // ST(A^(p)) in n - 1 variables
  bool additive = false;     // whole = q·deletion + restriction
  bool restriction_ideal = false;  // 𝔦_{A^(p)} lifted + (x_p) = 𝔦_A + (x_p)
  LemmaStatus colon = LemmaStatus::SkippedHypothesis;  // 𝔦_{A\H_p} = 𝔦_A : x_p
  bool ok() const { return additive && restriction_ideal && colon != LemmaStatus::Fails; }
};

// Requires an essential southwest arrangement.
ExactSequenceReport exact_sequence_report(const Arrangement& a);
bool exact_sequence_check(const Arrangement& a);

struct BoxBasisReport {
  std::vector<int> h;
  std::size_t box_size = 0;
  long dimension = -1;
  bool independent = false;
  bool ok() const { return independent && dimension == static_cast<long>(box_size); }
};

// {x^a : a_i < h_i} modulo 𝔦_A; requires an essential southwest arrangement.
BoxBasisReport sw_monomial_basis_report(const Arrangement& a);
bool verify_sw_monomial_basis(const Arrangement& a);

struct SsJReport {
  bool unit_branch = false;  // 1 ∈ J
  bool colon_is_unit = false;
  std::size_t count = 0;  // |ℳ(J)|
  long dimension = -1;
  bool independent = false;
  bool ok() const {
    return unit_branch ? colon_is_unit : (!colon_is_unit && independent && dimension == static_cast<long>(count));
  }
};

// The coinvariant ideal colon f_J, with ℳ(J) as a candidate basis.
Ideal coinvariant_colon(const IndexSet& J, int n);
SsJReport ssJ_report(const IndexSet& J, int n);
bool verify_ssJ(const IndexSet& J, int n);

struct GeneratingSetReport {
  bool regular = false;
  bool equal = false;
  bool ok() const { return regular && equal; }
};

// (g_{J,1}, ..., g_{J,n}) is a regular sequence generating the coinvariant
// colon ideal; requires 1 ∉ J.
GeneratingSetReport generating_set_report(const IndexSet& J, int n);

struct CospanReport {
  bool steinberg_member = false;
  bool groebner_member = false;
  bool complement_spans = false;
  bool holds() const { return steinberg_member == groebner_member && steinberg_member == !complement_spans; }
};

// T ⊆ Φ̃⁺ given as hyperplanes of the full arrangement.
CospanReport cospan_report(const std::vector<Hyperplane>& T, int n);
bool cospan_check(const std::vector<Hyperplane>& T, int n);

struct InvariantQuotientReport {
  bool contains_coinvariant = false;  // 𝔦_A ⊇ (S₊^{S_n})
  bool nonessential_unit = true;      // vacuous for essential A
  std::optional<bool> beta_colon;     // 𝔦_A = (S₊^{S_n}) : β_A, when a certified basis exists
  bool ok() const { return contains_coinvariant && nonessential_unit && beta_colon.value_or(true); }
};

InvariantQuotientReport invariant_quotient_report(const Arrangement& a);

// A_J ∪ {H_{x_k} : k ∈ J}
Arrangement augmented_AJ(const IndexSet& J, int n);
// h(augmented_AJ) = st(J) + [k ∈ J]
bool h_chain_check(const IndexSet& J, int n);

// Normal forms of the monomials are linearly independent.
bool independent_modulo(const GroebnerBasis& gb, const std::vector<Monomial>& monomials);

}  // namespace supercoinv
