#pragma once

#include <initializer_list>
#include <vector>

#include "supercoinv/polynomial.hpp"

namespace supercoinv {

// Weakly decreasing positive parts; zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Every partition of m (reverse lex order).
std::vector<Partition> partitions_of(int m);

// A is a set of 1-based variable indices in [n]. Polynomials live in Q[x_1..x_n].
using VariableSubset = std::vector<int>;

Polynomial elementary(int d, const VariableSubset& A, int n);
Polynomial complete(int d, const VariableSubset& A, int n);
Polynomial power_sum(int k, const VariableSubset& A, int n);
// Jacobi-Trudi: det(h_{λ_i - i + j}(A)).
Polynomial schur(const Partition& lambda, const VariableSubset& A, int n);

VariableSubset full_set(int n);

// e_1, ..., e_n in all n variables.
std::vector<Polynomial> coinvariant_generators(int n);
// p_1, ..., p_n in all n variables.
std::vector<Polynomial> power_sum_generators(int n);

// f lies in the coinvariant ideal iff f(∂) kills the Vandermonde determinant.
bool steinberg_member(const Polynomial& f, int n);

// h_d(A) - (-1)^d e_d(B) in the coinvariant ideal; A and B must partition [n].
bool eh_duality_check(int d, const VariableSubset& A, const VariableSubset& B, int n);

}  // namespace supercoinv
