#include "supercoinv/linalg.hpp"

#include <string>
#include <unordered_map>

#include "supercoinv/errors.hpp"

namespace supercoinv {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

IntRow clear_denominators(const SparseVector& row) {
  mpz_class den = 1;
  for (const auto& [col, v] : row) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [col, v] : row) {
    if (v == 0) continue;
    out.emplace_back(col, mpz_class(v.get_num() * (den / v.get_den())));
  }
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a_scale * a - b_scale * b
IntRow combine(const IntRow& a, const mpz_class& a_scale, const IntRow& b, const mpz_class& b_scale) {
  IntRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, a[i].second * a_scale);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(b[j].second * b_scale));
      ++j;
    } else {
      mpz_class v = a[i].second * a_scale - b[j].second * b_scale;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RowEchelon::RowEchelon(std::size_t ncols) : pivots_(ncols) {}

RowEchelon::IntRow RowEchelon::reduce(IntRow row) const {
  while (!row.empty()) {
    std::size_t lead = row.front().first;
    if (lead >= pivots_.size()) throw IndexError("row entry beyond the column count");
    const IntRow& pivot = pivots_[lead];
    if (pivot.empty()) break;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
    mpz_class row_scale = pivot.front().second / g;
    mpz_class pivot_scale = row.front().second / g;
    row = combine(row, row_scale, pivot, pivot_scale);
    make_primitive(row);
  }
  return row;
}

bool RowEchelon::insert(const SparseVector& row) {
  IntRow reduced = reduce(clear_denominators(row));
  if (reduced.empty()) return false;
  std::size_t lead = reduced.front().first;
  pivots_[lead] = std::move(reduced);
  ++rank_;
  return true;
}

bool RowEchelon::in_span(const SparseVector& row) const { return reduce(clear_denominators(row)).empty(); }

std::size_t rank(const std::vector<SparseVector>& rows, std::size_t ncols) {
  RowEchelon ech(ncols);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  if (n > 20) throw ResourceLimitError("determinant size guard exceeded");
  for (const auto& row : matrix) {
    if (row.size() != n) throw DimensionError("determinant needs a square matrix");
  }
  const int nvars = matrix[0][0].nvars();
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);

  // det of rows [popcount(used)..n) x columns not in used
  auto minor = [&](auto&& self, std::uint32_t used) -> Polynomial {
    if (used == full) return Polynomial::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    std::size_t row = static_cast<std::size_t>(__builtin_popcount(used));
    Polynomial acc(nvars);
    int free_before = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const Polynomial& entry = matrix[row][c];
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, used | (1u << c));
        if (free_before % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++free_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0);
}

}  // namespace supercoinv
