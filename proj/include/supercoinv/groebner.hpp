#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "supercoinv/polynomial.hpp"

namespace supercoinv {

/// Monomial order with variable precedence x_1 > ... > x_n.
///
/// `EliminateLast` is the block order used for elimination: the exponent of
/// the last variable is compared first, ties are broken by grevlex on the
/// remaining variables. Any monomial containing the last variable is then
/// larger than every monomial free of it.
struct MonomialOrder {
  enum class Kind { GrevLex, Lex, EliminateLast };
  Kind kind = Kind::GrevLex;
  int nvars = 0;  // only consulted by EliminateLast

  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate_last(int nvars) { return {Kind::EliminateLast, nvars}; }

  int compare(const Monomial& a, const Monomial& b) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

const char* to_string(MonomialOrder::Kind kind);

class GroebnerBasis;

/// Finitely generated ideal of Q[x_1..x_n]. Reduced Gröbner bases are cached
/// per monomial order; the cache is filled once and shared between copies.
class Ideal {
 public:
  Ideal(int nvars, std::vector<Polynomial> generators);

  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;

  const GroebnerBasis& groebner(MonomialOrder order = MonomialOrder::grevlex()) const&;
  // Temporaries hand back a copy; the cache dies with them.
  GroebnerBasis groebner(MonomialOrder order = MonomialOrder::grevlex()) &&;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const GroebnerBasis>> by_order;
  };

  int nvars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

struct StandardMonomials {
  std::vector<Monomial> monomials;  // graded, then grevlex descending
  bool complete = false;            // quotient is Artinian and every monomial is listed
};

struct HilbertSeries {
  std::vector<long> coefficients;  // dim of degree-d piece at index d
  bool complete = false;           // false: truncated at the cap (non-Artinian quotient)

  long total() const;
  bool is_palindromic() const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// prod_i (1 - q^{d_i}) / (1 - q)^n for d_i >= 1 and n = degrees.size().
HilbertSeries complete_intersection_series(const std::vector<int>& degrees);
// The same expression truncated to degree <= cap for r < n degrees.
HilbertSeries complete_intersection_series(const std::vector<int>& degrees, int nvars, int cap);

/// Reduced Gröbner basis: monic, interreduced, sorted by increasing leading
/// monomial. Polynomials are stored in canonical (grevlex) term order; the
/// active order determines which term leads.
class GroebnerBasis {
 public:
  GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> reduced);

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& polynomials() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  bool is_unit() const;
  bool is_artinian() const;
  bool contains(const Polynomial& f) const;
  Polynomial normal_form(const Polynomial& f) const;

  StandardMonomials standard_monomials(int degree_cap) const;
  long quotient_dimension() const;  // -1 when not Artinian

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  int nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<Term>> ordered_;  // basis_ with terms sorted by order_
};

// Buchberger's algorithm with the sugar selection strategy and the
// Gebauer-Moeller installation of both Buchberger criteria.
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex());

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex());

StandardMonomials standard_monomials(const Ideal& ideal, int degree_cap,
                                     MonomialOrder order = MonomialOrder::grevlex());

// Requires homogeneous generators.
HilbertSeries hilbert_series(const Ideal& ideal, int degree_cap);

// I : f via I ∩ (f) = elim_t(t·I + (1 - t)·f), then division by f.
Ideal colon(const Ideal& ideal, const Polynomial& f);
// I : (f_1 ⋯ f_k) as ((I : f_1) : f_2) ⋯
Ideal colon_iterated(const Ideal& ideal, const std::vector<Polynomial>& factors);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b, MonomialOrder order = MonomialOrder::grevlex());
// a ⊆ b
bool ideal_contains(const Ideal& b, const Ideal& a, MonomialOrder order = MonomialOrder::grevlex());

// fs must hold exactly nvars homogeneous polynomials of positive degree.
bool is_regular_sequence(const std::vector<Polynomial>& fs);

// Term cap from SUPERCOINV_GB_TERM_LIMIT (0 = unlimited).
std::size_t groebner_term_limit();

}  // namespace supercoinv
