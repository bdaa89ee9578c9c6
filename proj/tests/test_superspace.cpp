#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "supercoinv/errors.hpp"
#include "supercoinv/groebner.hpp"
#include "supercoinv/linalg.hpp"
#include "supercoinv/superspace.hpp"
#include "supercoinv/symmetric.hpp"

using namespace supercoinv;

namespace {

SuperElement S(const char* text, int n) { return parse_super(text, n); }

// Random element with small exponents and coefficients in [-3, 3].
SuperElement random_element(std::mt19937& rng, int n, int terms, int maxdeg = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, maxdeg), mask(0, (1 << n) - 1);
  SuperElement out(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < n; ++k) m.set(k, exp(rng) / 2);
    out += SuperElement::monomial(n, SuperMonomial{m, static_cast<std::uint32_t>(mask(rng))}, coeff(rng));
  }
  return out;
}

SuperElement random_bihomogeneous(std::mt19937& rng, int n, int i, int j, int terms) {
  auto basis = super_monomials(n, i, j);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  SuperElement out(n);
  for (int t = 0; t < terms; ++t) out += SuperElement::monomial(n, basis[pick(rng)], coeff(rng));
  return out;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Sign of θ_{a_1}...θ_{a_k} relative to the ascending product, by bubble sort;
// zero on repetition.
int bubble_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k] == seq[k + 1]) return 0;
      if (seq[k] > seq[k + 1]) {
        std::swap(seq[k], seq[k + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

// Product computed term by term from explicit index lists.
SuperElement oracle_multiply(const SuperElement& a, const SuperElement& b) {
  SuperElement out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto seq = ma.theta_indices();
      auto tail = mb.theta_indices();
      seq.insert(seq.end(), tail.begin(), tail.end());
      int s = bubble_sign(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      out += SuperElement::monomial(a.n(), SuperMonomial::make(ma.bosonic * mb.bosonic, seq), ca * cb * s);
    }
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& w, const std::vector<int>& v) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[static_cast<std::size_t>(v[i] - 1)];
  return out;
}

// Σ_k k! S(n, k) with Stirling numbers from their own recurrence.
long fubini_oracle(int n) {
  std::vector<std::vector<long>> s(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) s[m][k] = k * s[m - 1][k] + s[m - 1][k - 1];
  }
  long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += fact * s[n][k];
  }
  return total;
}

std::string join(const std::vector<SuperMonomial>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

}  // namespace

TEST_CASE("exterior multiplication") {
  CHECK(S("t2", 2) * S("t1", 2) == S("-t1*t2", 2));
  CHECK((S("t1", 2) * S("t1", 2)).is_zero());
  CHECK(S("x1*t1", 2) * S("x2*t2", 2) == S("x1*x2*t1*t2", 2));
  CHECK(super_multiply(S("t3", 3), S("t1*t2", 3)) == S("t1*t2*t3", 3));
  CHECK(super_multiply(S("t2", 3), S("t1*t3", 3)) == S("-t1*t2*t3", 3));
  CHECK_THROWS_AS(S("t1", 2) * S("t1", 3), DimensionError);

  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_element(rng, n, 4), b = random_element(rng, n, 4), c = random_element(rng, n, 3);
      CHECK(a * b == oracle_multiply(a, b));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("graded commutativity") {
  std::mt19937 rng(12);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> deg(0, n);
      int ja = deg(rng), jb = deg(rng);
      auto a = random_bihomogeneous(rng, n, 1, ja, 3), b = random_bihomogeneous(rng, n, 2, jb, 3);
      SuperElement ba = b * a;
      if ((ja * jb) % 2 == 1) ba = -ba;
      CHECK(a * b == ba);
    }
  }
}

TEST_CASE("euler operator") {
  CHECK(euler_d(S("x1", 2)) == S("t1", 2));
  CHECK(euler_d(S("x1*t1", 2)).is_zero());
  CHECK(euler_d(S("x1^2+x2^2+x3^2", 3)) == S("2*x1*t1+2*x2*t2+2*x3*t3", 3));
  CHECK(euler_d(S("x2*t1", 2)) == S("-t1*t2", 2));
  CHECK(euler_d(S("7", 2)).is_zero());

  std::mt19937 rng(13);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_element(rng, n, 5);
      CHECK(euler_d(euler_d(w)).is_zero());
    }
  }
}

TEST_CASE("super Leibniz rule") {
  std::mt19937 rng(14);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> deg(0, n), bdeg(0, 3);
      int ja = deg(rng);
      auto a = random_bihomogeneous(rng, n, bdeg(rng), ja, 3);
      auto b = random_element(rng, n, 4);
      SuperElement rhs = euler_d(a) * b;
      SuperElement second = a * euler_d(b);
      if (ja % 2 == 1) second = -second;
      rhs += second;
      CHECK(euler_d(a * b) == rhs);
    }
  }
}

TEST_CASE("symmetric group action") {
  CHECK(sn_act({2, 1}, S("t1*t2", 2)) == S("-t1*t2", 2));
  CHECK(sn_act({1, 2, 3}, S("x1^2*t3-t1*t2", 3)) == S("x1^2*t3-t1*t2", 3));
  CHECK(sn_act({2, 3, 1}, S("x1*t1", 3)) == S("x2*t2", 3));
  CHECK(sn_act({3, 1, 2}, S("t1*t3", 3)) == S("-t2*t3", 3));
  CHECK_THROWS_AS(sn_act({1, 1}, S("t1", 2)), DomainError);
  CHECK_THROWS_AS(sn_act({1, 2, 3}, S("t1", 2)), DimensionError);

  std::mt19937 rng(15);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      auto w = random_permutation(rng, n), v = random_permutation(rng, n);
      auto a = random_element(rng, n, 4), b = random_element(rng, n, 4);
      CHECK(sn_act(w, sn_act(v, a)) == sn_act(compose(w, v), a));
      CHECK(sn_act(w, euler_d(a)) == euler_d(sn_act(w, a)));
      CHECK(sn_act(w, a * b) == sn_act(w, a) * sn_act(w, b));
    }
  }
}

TEST_CASE("serialization") {
  CHECK(to_string(S("2*t3*x1^2", 3)) == "2*x1^2*t3");
  CHECK(to_string(S("t1-x2*t2+3", 2)) == "3+t1-x2*t2");
  CHECK(to_string(SuperElement(2)) == "0");
  CHECK_THROWS_AS(S("t2*t1", 2), ParseError);
  CHECK_THROWS_AS(S("t1*t1", 2), ParseError);
  CHECK_THROWS_AS(S("t3", 2), ParseError);

  std::mt19937 rng(16);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(rng, n, 5);
      CHECK(parse_super(to_string(a), n) == a);
    }
  }
}

TEST_CASE("invariant ideal pieces") {
  CHECK(invariant_ideal_rank(1, 1, 0) == 1);
  CHECK(invariant_ideal_rank(1, 0, 1) == 1);  // d p_1 = θ_1
  CHECK(super_monomials(2, 0, 1).size() == 2);
  CHECK(invariant_ideal_rank(2, 0, 1) == 1);
  auto pieces = invariant_ideal_pieces(2, 0, 1);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0] == S("t1+t2", 2));
  CHECK(super_monomials(3, 0, 2).size() - invariant_ideal_rank(3, 0, 2) == 1);
  for (const auto& g : invariant_ideal_pieces(3, 2, 1)) {
    CHECK(g.is_bihomogeneous());
    CHECK(g.component(2, 1) == g);
  }
}

TEST_CASE("ideal pieces are stable under permutations") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      for (int i = 0; i <= n * (n - 1) / 2 + 1; ++i) {
        for (int j = 0; j <= n; ++j) {
          auto basis = super_monomials(n, i, j);
          auto pieces = invariant_ideal_pieces(n, i, j);
          std::size_t r = invariant_ideal_rank(n, i, j);
          // adding the permuted generators must not raise the rank
          std::map<SuperMonomial, std::size_t, SuperMonomialLess> col;
          for (std::size_t c = 0; c < basis.size(); ++c) col[basis[c]] = c;
          RowEchelon ech(basis.size());
          auto add = [&](const SuperElement& e) {
            SparseVector row;
            for (const auto& [m, c] : e.terms()) row.emplace_back(col.at(m), c);
            std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
            ech.insert(row);
          };
          for (const auto& g : pieces) add(g);
          for (const auto& g : pieces) add(sn_act(w, g));
          CHECK(ech.rank() == r);
        }
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("artin monomials") {
  CHECK(join(artin_monomials(1)) == "1");
  CHECK(join(artin_monomials(2)) == "x2, 1, t2");
  CHECK(join(artin_monomials(3)) ==
        "x2*x3^2, x2*x3, x2, x3^2, x3, 1, x2*x3*t3, x2*t3, x3*t3, t3, x3*t2, t2, t2*t3");
  for (int n = 1; n <= 6; ++n) {
    CHECK(artin_monomials(n).size() == static_cast<std::size_t>(fubini_oracle(n)));
    CHECK(fubini_number(n) == fubini_oracle(n));
  }
  CHECK(fubini_oracle(4) == 75);
}

TEST_CASE("bigraded Hilbert series") {
  auto t1 = sr_bigraded_hilbert(1);
  CHECK(t1.total() == 1);
  CHECK(t1.complete);

  auto t2 = sr_bigraded_hilbert(2);
  CHECK(t2.complete);
  CHECK(t2.total() == 3);
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(1, 0) == 1);
  CHECK(t2.at(0, 1) == 1);
  CHECK(t2.at(1, 1) == 0);
  CHECK(t2.at(0, 2) == 0);

  auto t3 = sr_bigraded_hilbert(3, -1, 1);
  CHECK(t3.complete);
  CHECK(t3.total() == 13);
  CHECK(t3.dims == sr_bigraded_hilbert(3, -1, 4).dims);

  // A cap too small leaves nonzero pieces beyond it.
  CHECK_FALSE(sr_bigraded_hilbert(3, 1).complete);

  // θ-degree 0 is the classical coinvariant ring: [n]_q! via Gröbner bases.
  for (int n = 1; n <= 3; ++n) {
    auto table = sr_bigraded_hilbert(n);
    HilbertSeries classical = hilbert_series(Ideal(n, coinvariant_generators(n)), n * n);
    for (int i = 0; i <= table.bosonic_cap; ++i) {
      long expect = i < static_cast<int>(classical.coefficients.size()) ? classical.coefficients[static_cast<std::size_t>(i)] : 0;
      CHECK(table.at(i, 0) == expect);
    }
  }
}

TEST_CASE("artin monomials form a basis of SR") {
  for (int n = 1; n <= 3; ++n) {
    auto rep = sr_basis_report(n);
    CHECK(rep.table_complete);
    CHECK(rep.independent);
    CHECK(rep.bidegrees_match);
    CHECK(rep.sr_total == fubini_oracle(n));
    CHECK(verify_sr_basis(n));
  }
}
