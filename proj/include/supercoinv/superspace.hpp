#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "supercoinv/arrangement.hpp"
#include "supercoinv/polynomial.hpp"

namespace supercoinv {

/// x^a · θ_J with J stored as a bitmask (bit k-1 for θ_k); the θ factors are
/// always read in increasing index order.
struct SuperMonomial {
  Monomial bosonic;
  std::uint32_t fermionic = 0;

  int bosonic_degree() const { return bosonic.degree(); }
  int fermionic_degree() const { return __builtin_popcount(fermionic); }
  IndexSet theta_indices() const;

  static SuperMonomial make(const Monomial& m, const IndexSet& J);

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

// Fermionic degree first, then θ mask, then grevlex descending on x.
struct SuperMonomialLess {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

/// Element of Q[x_1..x_n] ⊗ ∧{θ_1..θ_n}.
class SuperElement {
 public:
  using TermMap = std::map<SuperMonomial, Rational, SuperMonomialLess>;

  explicit SuperElement(int n) : n_(n) {}
  SuperElement(int n, TermMap terms);
  static SuperElement monomial(int n, const SuperMonomial& m, const Rational& c = 1);
  static SuperElement from_polynomial(const Polynomial& p);
  static SuperElement theta(int n, int i);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const SuperMonomial& m) const;

  // Degree-(i, j) component.
  SuperElement component(int bosonic, int fermionic) const;
  bool is_bihomogeneous() const;

  SuperElement& operator+=(const SuperElement& other);
  SuperElement& operator-=(const SuperElement& other);
  SuperElement& operator*=(const Rational& c);
  SuperElement operator-() const;
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(SuperElement a, const Rational& c) { return a *= c; }
  friend SuperElement operator*(const SuperElement& a, const SuperElement& b);
  friend bool operator==(const SuperElement&, const SuperElement&) = default;

 private:
  void add_term(const SuperMonomial& m, const Rational& c);

  int n_;
  TermMap terms_;
};

SuperElement super_multiply(const SuperElement& a, const SuperElement& b);

// d(f θ_J) = Σ_i ∂_i(f) θ_i θ_J
SuperElement euler_d(const SuperElement& w);

// w is given by its images: w[i-1] = w(i), 1-based.
SuperElement sn_act(const std::vector<int>& w, const SuperElement& omega);

// "2*x1*x3^2*t2*t4 - t1"-style text; θ_k is written t<k> after the x factors.
std::string to_string(const SuperMonomial& m);
std::string to_string(const SuperElement& e);
// θ factors must be strictly ascending.
SuperElement parse_super(std::string_view text, int n);

// Basis of Ω_{i,j} in SuperMonomialLess order.
std::vector<SuperMonomial> super_monomials(int n, int bosonic, int fermionic);

// p_k = Σ x_t^k
Polynomial power_sum_poly(int n, int k);

// Spanning set of I_{i,j} from {p_k, d p_k : 1 <= k <= n} times monomials of
// complementary bidegree.
std::vector<SuperElement> invariant_ideal_pieces(int n, int bosonic, int fermionic);
// rank of I_{i,j} inside Ω_{i,j}
std::size_t invariant_ideal_rank(int n, int bosonic, int fermionic);

struct BigradedTable {
  int n = 0;
  int bosonic_cap = 0;
  std::vector<std::vector<long>> dims;  // dims[i][j] = dim SR_{i,j}, 0 <= i <= cap, 0 <= j <= n
  // Every piece of bosonic degree cap+1 vanishes, hence so does everything beyond.
  bool complete = false;

  long total() const;
  long at(int i, int j) const;
};

// Default cap n(n-1)/2. Pieces are computed on `workers` threads (0 = hardware).
BigradedTable sr_bigraded_hilbert(int n, int bosonic_cap = -1, unsigned workers = 0);

// ⊔_J ℳ(J)·θ_J, J in the order of all_subsets(n).
std::vector<SuperMonomial> artin_monomials(int n);

struct SrBasisReport {
  int n = 0;
  std::size_t artin_count = 0;
  long sr_total = 0;
  bool table_complete = false;
  bool independent = false;    // ℳ independent modulo I in every bidegree
  bool bidegrees_match = false;  // #ℳ in bidegree (i,j) equals dim SR_{i,j}
  bool ok() const { return table_complete && independent && bidegrees_match && sr_total == static_cast<long>(artin_count); }
};

SrBasisReport sr_basis_report(int n, unsigned workers = 0);
bool verify_sr_basis(int n, unsigned workers = 0);

// Number of ordered set partitions of [n].
long fubini_number(int n);

}  // namespace supercoinv
