#include "supercoinv/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "supercoinv/errors.hpp"
#include "supercoinv/linalg.hpp"

namespace supercoinv {

namespace {

void check_subset(const VariableSubset& A, int n) {
  if (n < 1 || n > kMaxVars) throw DimensionError("variable count out of range");
  for (int a : A) {
    if (a < 1 || a > n) throw IndexError("variable index " + std::to_string(a) + " outside [1, n]");
  }
}

VariableSubset normalized(VariableSubset A) {
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  return A;
}

// Monomials of degree d in the listed variables, each exactly once.
void for_each_multiset(const VariableSubset& A, std::size_t from, int d, std::vector<int>& exps,
                       const std::function<void()>& emit) {
  if (d == 0) {
    emit();
    return;
  }
  if (from == A.size()) return;
  int pos = A[from] - 1;
  for (int e = d; e >= 0; --e) {
    exps[static_cast<std::size_t>(pos)] = e;
    for_each_multiset(A, from + 1, d - e, exps, emit);
  }
  exps[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw DomainError("negative partition part");
    if (p > 0) parts_.push_back(p);
  }
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

Polynomial elementary(int d, const VariableSubset& A0, int n) {
  check_subset(A0, n);
  VariableSubset A = normalized(A0);
  if (d < 0 || d > static_cast<int>(A.size())) return Polynomial(n);
  if (d == 0) return Polynomial::constant(n, 1);
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      terms.push_back(Term{Monomial(std::span<const int>(exps)), Rational(1)});
      return;
    }
    for (std::size_t k = from; k + static_cast<std::size_t>(left) <= A.size(); ++k) {
      exps[static_cast<std::size_t>(A[k] - 1)] = 1;
      rec(k + 1, left - 1);
      exps[static_cast<std::size_t>(A[k] - 1)] = 0;
    }
  };
  rec(0, d);
  return Polynomial(n, std::move(terms));
}

Polynomial complete(int d, const VariableSubset& A0, int n) {
  check_subset(A0, n);
  VariableSubset A = normalized(A0);
  if (d < 0) return Polynomial(n);
  if (d == 0) return Polynomial::constant(n, 1);
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for_each_multiset(A, 0, d, exps,
                    [&] { terms.push_back(Term{Monomial(std::span<const int>(exps)), Rational(1)}); });
  return Polynomial(n, std::move(terms));
}

Polynomial power_sum(int k, const VariableSubset& A0, int n) {
  check_subset(A0, n);
  if (k < 1) throw DomainError("power sums start at k = 1");
  Polynomial out(n);
  for (int a : normalized(A0)) out += Polynomial::monomial(n, Monomial::variable(a - 1, k));
  return out;
}

Polynomial schur(const Partition& lambda, const VariableSubset& A0, int n) {
  check_subset(A0, n);
  VariableSubset A = normalized(A0);
  const int l = lambda.length();
  if (l == 0) return Polynomial::constant(n, 1);
  std::unordered_map<int, Polynomial> h;
  auto hd = [&](int d) -> const Polynomial& {
    auto it = h.find(d);
    if (it == h.end()) it = h.emplace(d, complete(d, A, n)).first;
    return it->second;
  };
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[static_cast<std::size_t>(i)].push_back(hd(lambda[i] - i + j));
  }
  return determinant(m);
}

VariableSubset full_set(int n) {
  VariableSubset A(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) A[static_cast<std::size_t>(i)] = i + 1;
  return A;
}

std::vector<Polynomial> coinvariant_generators(int n) {
  if (n < 1) throw DimensionError("n must be positive");
  std::vector<Polynomial> out;
  for (int d = 1; d <= n; ++d) out.push_back(elementary(d, full_set(n), n));
  return out;
}

std::vector<Polynomial> power_sum_generators(int n) {
  if (n < 1) throw DimensionError("n must be positive");
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) out.push_back(power_sum(k, full_set(n), n));
  return out;
}

bool steinberg_member(const Polynomial& f, int n) {
  if (f.nvars() != n) throw DimensionError("steinberg_member: polynomial in the wrong ring");
  Polynomial delta = vandermonde(n);
  for (const auto& [d, piece] : homogeneous_decomposition(f).pieces) {
    if (!odot(piece, delta).is_zero()) return false;
  }
  return true;
}

bool eh_duality_check(int d, const VariableSubset& A, const VariableSubset& B, int n) {
  check_subset(A, n);
  check_subset(B, n);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int a : A) ++seen[static_cast<std::size_t>(a)];
  for (int b : B) ++seen[static_cast<std::size_t>(b)];
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)] != 1) throw DomainError("A and B must partition [n]");
  }
  Polynomial diff = complete(d, A, n);
  Polynomial e = elementary(d, B, n);
  if (d % 2 == 0) {
    diff -= e;
  } else {
    diff += e;
  }
  return steinberg_member(diff, n);
}

}  // namespace supercoinv
