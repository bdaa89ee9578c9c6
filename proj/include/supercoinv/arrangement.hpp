#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercoinv/polynomial.hpp"

namespace supercoinv {

// Sorted 1-based index set, e.g. J ⊆ [n].
using IndexSet = std::vector<int>;

// H_{i,j}, 0 <= i < j <= n. i = 0 is the coordinate hyperplane x_j = 0,
// otherwise x_i = x_j.
struct Hyperplane {
  int i = 0;
  int j = 0;

  bool is_coordinate() const { return i == 0; }

  // Canonical order: by j, then by i.
  friend std::strong_ordering operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// α_{0,j} = x_j, α_{i,j} = x_i - x_j.
Polynomial linear_form(const Hyperplane& h, int n);

/// Subarrangement of the augmented braid arrangement in K^n.
class Arrangement {
 public:
  explicit Arrangement(int n, std::vector<Hyperplane> hyperplanes = {});

  static Arrangement full(int n);   // every H_{i,j}, 0 <= i < j <= n
  static Arrangement braid(int n);  // only the H_{i,j} with i >= 1
  // "n=5; H:0-1,0-2,1-2"
  static Arrangement parse(std::string_view text);

  int n() const { return n_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  bool contains(const Hyperplane& h) const;
  bool contains(int i, int j) const { return contains(Hyperplane{i, j}); }

  std::vector<Polynomial> linear_forms() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int n_;
  std::vector<Hyperplane> hyperplanes_;  // canonical order, no duplicates
};

std::string to_string(const Arrangement& a);

IndexSet make_index_set(std::vector<int> elements, int n);
bool contains(const IndexSet& J, int i);
// All subsets of [n]; element i carries weight 2^{n-i}, so for n = 3 the order
// is {}, {3}, {2}, {2,3}, {1}, ...
std::vector<IndexSet> all_subsets(int n);
std::string to_string(const IndexSet& J);

// st_1 = [1 ∉ J], st_i = st_{i-1} + [i ∉ J].
std::vector<int> staircase(const IndexSet& J, int n);
// {x^a : a_i < st(J)_i} in lex-descending order.
std::vector<Monomial> staircase_monomials(const IndexSet& J, int n);

bool is_southwest(const Arrangement& a);
std::vector<int> h_sequence(const Arrangement& a);

// {H_{j,i} : j ∉ J, i > j} ∪ {H_{0,j} : j ∉ J}
Arrangement build_AJ(const IndexSet& J, int n);

Arrangement delete_hyperplane(const Arrangement& a, const Hyperplane& h);
// Restriction to x_p = 0; ambient dimension drops to n - 1.
Arrangement restrict_coord(const Arrangement& a, int p);
// max{k : H_k ∈ A}, or nullopt without coordinate hyperplanes.
std::optional<int> max_coordinate(const Arrangement& a);

// Q(A), scaled so the lex-leading coefficient is +1.
Polynomial defining_polynomial(const Arrangement& a);
// Q(A) / Q(B) for B ⊆ A, as the product of the forms in A \ B.
Polynomial quotient_polynomial(const Arrangement& a, const Arrangement& b);
Polynomial f_poly(const IndexSet& J, int n);
Polynomial ftilde_poly(const IndexSet& J, int n);
// product of α over the hyperplanes of the full arrangement missing from A
Polynomial beta_poly(const Arrangement& a);

/// Flat as a set partition of {0, 1, ..., n}: the block of 0 holds the
/// coordinates forced to zero, every other block holds equal coordinates.
struct Flat {
  std::vector<std::uint8_t> label;  // restricted growth string over 0..n
  int nblocks = 0;

  int dimension() const { return nblocks - 1; }
  std::vector<std::vector<int>> blocks() const;
  // this ⊇ other as subspaces, i.e. this refines other
  bool refines(const Flat& other) const;
  friend bool operator==(const Flat&, const Flat&) = default;
};

struct IntersectionLattice {
  std::vector<Flat> flats;  // by decreasing dimension; flats[0] is the ambient space
  std::vector<long> mobius;  // μ(V, X)
};

// Size guard: n <= 7.
IntersectionLattice intersection_lattice(const Arrangement& a);

// Coefficients of t^0, t^1, ..., t^n.
using IntPoly = std::vector<std::int64_t>;

IntPoly characteristic_polynomial(const Arrangement& a);
IntPoly characteristic_polynomial(const IntersectionLattice& lattice, int n);
IntPoly poly_from_roots(const std::vector<int>& roots);
std::int64_t evaluate(const IntPoly& p, std::int64_t t);
std::string to_string(const IntPoly& p);

// |{x ∈ F_q^n : x avoids every hyperplane}|, grouped by equality pattern.
std::int64_t count_points_mod(const Arrangement& a, std::int64_t q);
// Smallest prime > n * |A| (at least 2).
std::int64_t default_prime(const Arrangement& a);
std::int64_t next_prime_above(std::int64_t m);

// Graph on {0..n} with an edge i-j per hyperplane.
bool is_chordal(const Arrangement& a);
bool is_essential(const Arrangement& a);

// Text rendering of the root poset with ● for members and ○ otherwise.
std::string render_poset(const Arrangement& a);

}  // namespace supercoinv
