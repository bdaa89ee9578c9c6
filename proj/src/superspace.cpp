#include "supercoinv/superspace.hpp"

#include <algorithm>
#include <functional>

#include "supercoinv/detail/parallel.hpp"
#include "supercoinv/detail/term_parser.hpp"
#include "supercoinv/errors.hpp"
#include "supercoinv/linalg.hpp"

namespace supercoinv {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVars) throw DimensionError("superspace rank must lie in [1, " + std::to_string(kMaxVars) + "]");
}

std::uint32_t bit(int i) { return 1u << (i - 1); }

// θ_a θ_b for disjoint masks: sign of sorting the concatenation.
int shuffle_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    std::uint32_t low = rest & (~rest + 1);
    // elements of a larger than this element of b
    inversions += __builtin_popcount(a & ~((low << 1) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(std::span<const int>(a));
      return;
    }
    for (int e = left; e >= 0; --e) {
      a[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

std::vector<std::uint32_t> masks_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) == k) out.push_back(m);
  }
  return out;
}

class ColumnIndex {
 public:
  explicit ColumnIndex(std::vector<SuperMonomial> basis) : basis_(std::move(basis)) {
    for (std::size_t c = 0; c < basis_.size(); ++c) index_.emplace(basis_[c], c);
  }
  std::size_t size() const { return basis_.size(); }
  SparseVector row(const SuperElement& e) const {
    SparseVector out;
    for (const auto& [m, c] : e.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw DomainError("element outside the bidegree piece");
      out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

 private:
  std::vector<SuperMonomial> basis_;
  std::map<SuperMonomial, std::size_t, SuperMonomialLess> index_;
};

RowEchelon ideal_echelon(int n, int bosonic, int fermionic, const ColumnIndex& cols) {
  RowEchelon ech(cols.size());
  for (const auto& g : invariant_ideal_pieces(n, bosonic, fermionic)) ech.insert(cols.row(g));
  return ech;
}

}  // namespace

// ---------------------------------------------------------------------------

IndexSet SuperMonomial::theta_indices() const {
  IndexSet out;
  for (int k = 1; k <= 32; ++k) {
    if (fermionic & bit(k)) out.push_back(k);
  }
  return out;
}

SuperMonomial SuperMonomial::make(const Monomial& m, const IndexSet& J) {
  SuperMonomial out{m, 0};
  for (int k : J) {
    if (k < 1 || k > kMaxVars) throw IndexError("theta index out of range");
    out.fermionic |= bit(k);
  }
  return out;
}

bool SuperMonomialLess::operator()(const SuperMonomial& a, const SuperMonomial& b) const {
  int da = a.fermionic_degree(), db = b.fermionic_degree();
  if (da != db) return da < db;
  if (a.fermionic != b.fermionic) return a.fermionic < b.fermionic;
  return grevlex_compare(a.bosonic, b.bosonic) > 0;
}

SuperElement::SuperElement(int n, TermMap terms) : n_(n) {
  for (auto& [m, c] : terms) add_term(m, c);
}

SuperElement SuperElement::monomial(int n, const SuperMonomial& m, const Rational& c) {
  SuperElement out(n);
  out.add_term(m, c);
  return out;
}

SuperElement SuperElement::from_polynomial(const Polynomial& p) {
  SuperElement out(p.nvars());
  for (const auto& t : p.terms()) out.add_term(SuperMonomial{t.monomial, 0}, t.coeff);
  return out;
}

SuperElement SuperElement::theta(int n, int i) {
  if (i < 1 || i > n) throw IndexError("theta index out of range");
  return monomial(n, SuperMonomial{Monomial{}, bit(i)});
}

void SuperElement::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.bosonic.support_end() >= n_ || (m.fermionic >> n_) != 0) throw IndexError("variable beyond the ambient rank");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperElement::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SuperElement SuperElement::component(int bosonic, int fermionic) const {
  SuperElement out(n_);
  for (const auto& [m, c] : terms_) {
    if (m.bosonic_degree() == bosonic && m.fermionic_degree() == fermionic) out.terms_.emplace(m, c);
  }
  return out;
}

bool SuperElement::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  const auto& first = terms_.begin()->first;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return kv.first.bosonic_degree() == first.bosonic_degree() && kv.first.fermionic_degree() == first.fermionic_degree();
  });
}

SuperElement& SuperElement::operator+=(const SuperElement& other) {
  if (other.n_ != n_) throw DimensionError("superspace ranks differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& other) {
  if (other.n_ != n_) throw DimensionError("superspace ranks differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperElement SuperElement::operator-() const {
  SuperElement out = *this;
  return out *= Rational(-1);
}

SuperElement operator*(const SuperElement& a, const SuperElement& b) {
  if (a.n_ != b.n_) throw DimensionError("superspace ranks differ");
  SuperElement out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.fermionic & mb.fermionic) continue;
      SuperMonomial m{ma.bosonic * mb.bosonic, ma.fermionic | mb.fermionic};
      Rational c = ca * cb;
      if (shuffle_sign(ma.fermionic, mb.fermionic) < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

SuperElement super_multiply(const SuperElement& a, const SuperElement& b) { return a * b; }

SuperElement euler_d(const SuperElement& w) {
  const int n = w.n();
  SuperElement out(n);
  for (const auto& [m, c] : w.terms()) {
    for (int i = 1; i <= n; ++i) {
      int e = m.bosonic[i - 1];
      if (e == 0 || (m.fermionic & bit(i))) continue;
      Monomial lowered = m.bosonic;
      lowered.set(i - 1, e - 1);
      Rational coeff = c * e;
      if (shuffle_sign(bit(i), m.fermionic) < 0) coeff = -coeff;
      out += SuperElement::monomial(n, SuperMonomial{lowered, m.fermionic | bit(i)}, coeff);
    }
  }
  return out;
}

SuperElement sn_act(const std::vector<int>& w, const SuperElement& omega) {
  const int n = omega.n();
  if (static_cast<int>(w.size()) != n) throw DimensionError("permutation length differs from the rank");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) throw DomainError("not a permutation of [n]");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  SuperElement out(n);
  for (const auto& [m, c] : omega.terms()) {
    Monomial image;
    for (int i = 1; i <= n; ++i) image.set(w[static_cast<std::size_t>(i - 1)] - 1, m.bosonic[i - 1]);
    std::vector<int> seq;
    for (int j : m.theta_indices()) seq.push_back(w[static_cast<std::size_t>(j - 1)]);
    int inversions = 0;
    std::uint32_t mask = 0;
    for (std::size_t a = 0; a < seq.size(); ++a) {
      mask |= bit(seq[a]);
      for (std::size_t b = a + 1; b < seq.size(); ++b) inversions += seq[a] > seq[b];
    }
    out += SuperElement::monomial(n, SuperMonomial{image, mask}, inversions % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// text form

std::string to_string(const SuperMonomial& m) {
  std::string out = m.bosonic.is_one() ? std::string() : monomial_to_string(m.bosonic);
  for (int k : m.theta_indices()) {
    if (!out.empty()) out += '*';
    out += "t" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const SuperElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    bool unit = m.bosonic.is_one() && m.fermionic == 0;
    if (unit) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += to_string(m);
    }
  }
  return out;
}

SuperElement parse_super(std::string_view text, int n) {
  check_n(n);
  SuperElement out(n);
  for (const auto& t : detail::parse_terms(text, n)) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < t.fermionic.size(); ++k) {
      if (k > 0 && t.fermionic[k] <= t.fermionic[k - 1]) {
        throw ParseError("theta factors must be strictly ascending in '" + std::string(text) + "'");
      }
      mask |= bit(t.fermionic[k]);
    }
    out += SuperElement::monomial(n, SuperMonomial{t.bosonic, mask}, t.coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// the invariant ideal

std::vector<SuperMonomial> super_monomials(int n, int bosonic, int fermionic) {
  check_n(n);
  std::vector<SuperMonomial> out;
  for (std::uint32_t mask : masks_of_size(n, fermionic)) {
    for (const auto& m : monomials_of_degree(n, bosonic)) out.push_back(SuperMonomial{m, mask});
  }
  std::sort(out.begin(), out.end(), SuperMonomialLess{});
  return out;
}

Polynomial power_sum_poly(int n, int k) {
  Polynomial p(n);
  for (int t = 1; t <= n; ++t) p += Polynomial::monomial(n, Monomial::variable(t - 1, k));
  return p;
}

std::vector<SuperElement> invariant_ideal_pieces(int n, int bosonic, int fermionic) {
  check_n(n);
  if (bosonic < 0 || fermionic < 0 || fermionic > n) return {};
  if (bosonic > 4 * n * n) throw ResourceLimitError("bosonic degree cap exceeded");
  std::vector<SuperElement> out;
  for (int k = 1; k <= n; ++k) {
    SuperElement p = SuperElement::from_polynomial(power_sum_poly(n, k));
    SuperElement dp = euler_d(p);
    for (const auto& m : super_monomials(n, bosonic - k, fermionic)) {
      out.push_back(p * SuperElement::monomial(n, m));
    }
    for (const auto& m : super_monomials(n, bosonic - k + 1, fermionic - 1)) {
      out.push_back(dp * SuperElement::monomial(n, m));
    }
  }
  return out;
}

std::size_t invariant_ideal_rank(int n, int bosonic, int fermionic) {
  ColumnIndex cols(super_monomials(n, bosonic, fermionic));
  return ideal_echelon(n, bosonic, fermionic, cols).rank();
}

long BigradedTable::total() const {
  long s = 0;
  for (const auto& row : dims) {
    for (long v : row) s += v;
  }
  return s;
}

long BigradedTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(dims.size()) || j > n) return 0;
  return dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

BigradedTable sr_bigraded_hilbert(int n, int bosonic_cap, unsigned workers) {
  check_n(n);
  if (bosonic_cap < 0) bosonic_cap = n * (n - 1) / 2;
  BigradedTable table;
  table.n = n;
  table.bosonic_cap = bosonic_cap;
  const int rows = bosonic_cap + 2;  // the last row is the vanishing check
  std::vector<std::vector<long>> dims(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(n + 1)));
  const std::size_t cells = static_cast<std::size_t>(rows * (n + 1));
  detail::parallel_for(cells, workers, [&](std::size_t k) {
    int i = static_cast<int>(k) / (n + 1);
    int j = static_cast<int>(k) % (n + 1);
    std::size_t full = super_monomials(n, i, j).size();
    dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(full - invariant_ideal_rank(n, i, j));
  });
  const auto& last = dims.back();
  table.complete = std::all_of(last.begin(), last.end(), [](long v) { return v == 0; });
  dims.pop_back();
  table.dims = std::move(dims);
  return table;
}

std::vector<SuperMonomial> artin_monomials(int n) {
  check_n(n);
  std::vector<SuperMonomial> out;
  for (const auto& J : all_subsets(n)) {
    for (const auto& m : staircase_monomials(J, n)) out.push_back(SuperMonomial::make(m, J));
  }
  return out;
}

SrBasisReport sr_basis_report(int n, unsigned workers) {
  SrBasisReport rep;
  rep.n = n;
  auto artin = artin_monomials(n);
  rep.artin_count = artin.size();
  BigradedTable table = sr_bigraded_hilbert(n, -1, workers);
  rep.sr_total = table.total();
  rep.table_complete = table.complete;

  std::map<std::pair<int, int>, std::vector<SuperMonomial>> by_bidegree;
  for (const auto& m : artin) by_bidegree[{m.bosonic_degree(), m.fermionic_degree()}].push_back(m);

  bool counts = true;
  for (int i = 0; i <= table.bosonic_cap; ++i) {
    for (int j = 0; j <= n; ++j) {
      auto it = by_bidegree.find({i, j});
      long have = it == by_bidegree.end() ? 0 : static_cast<long>(it->second.size());
      if (have != table.at(i, j)) counts = false;
    }
  }
  for (const auto& [bd, ms] : by_bidegree) {
    if (bd.first > table.bosonic_cap) counts = false;
  }
  rep.bidegrees_match = counts;

  std::vector<std::pair<std::pair<int, int>, std::vector<SuperMonomial>>> work(by_bidegree.begin(), by_bidegree.end());
  std::vector<char> independent(work.size(), 0);
  detail::parallel_for(work.size(), workers, [&](std::size_t k) {
    const auto& [bd, ms] = work[k];
    ColumnIndex cols(super_monomials(n, bd.first, bd.second));
    RowEchelon ech = ideal_echelon(n, bd.first, bd.second, cols);
    std::size_t base = ech.rank();
    for (const auto& m : ms) ech.insert(cols.row(SuperElement::monomial(n, m)));
    independent[k] = ech.rank() == base + ms.size();
  });
  rep.independent = std::all_of(independent.begin(), independent.end(), [](char c) { return c != 0; });
  return rep;
}

bool verify_sr_basis(int n, unsigned workers) { return sr_basis_report(n, workers).ok(); }

long fubini_number(int n) {
  if (n < 0) throw DomainError("negative n");
  std::vector<long> a(static_cast<std::size_t>(n + 1), 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long binom = 1;  // C(m, k)
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - k)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

}  // namespace supercoinv
