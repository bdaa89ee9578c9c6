#include "supercoinv/solomon_terao.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "supercoinv/errors.hpp"
#include "supercoinv/linalg.hpp"
#include "supercoinv/symmetric.hpp"

namespace supercoinv {

namespace {

HilbertSeries zero_series() {
  HilbertSeries s;
  s.complete = true;
  return s;
}

HilbertSeries one_series() {
  HilbertSeries s;
  s.coefficients = {1};
  s.complete = true;
  return s;
}

const GroebnerBasis& coinvariant_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GroebnerBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const GroebnerBasis>(Ideal(n, coinvariant_generators(n)).groebner());
  return *slot;
}

Ideal coinvariant_ideal(int n) { return Ideal(n, coinvariant_generators(n)); }

std::vector<Monomial> box_monomials(const std::vector<int>& h) {
  std::vector<Monomial> out;
  if (std::find(h.begin(), h.end(), 0) != h.end()) return out;
  std::vector<int> a(h.size(), 0);
  while (true) {
    out.emplace_back(std::span<const int>(a));
    std::size_t k = 0;
    while (k < a.size() && ++a[k] == h[k]) a[k++] = 0;
    if (k == a.size()) break;
  }
  return out;
}

std::vector<Derivation> require_basis(const Arrangement& a) {
  auto basis = certified_basis(a);
  if (!basis) throw DomainError("no certified derivation basis for " + to_string(a));
  return *basis;
}

void require_essential_southwest(const Arrangement& a, const char* who) {
  if (!is_southwest(a)) throw DomainError(std::string(who) + ": arrangement is not southwest");
  if (!is_essential(a)) throw DomainError(std::string(who) + ": arrangement is not essential");
}

}  // namespace

const char* to_string(STKind kind) {
  switch (kind) {
    case STKind::Zero:
      return "zero";
    case STKind::Infinite:
      return "infinite";
    case STKind::PoincareDuality:
      return "poincare-duality";
  }
  return "?";
}

const char* to_string(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::Holds:
      return "holds";
    case LemmaStatus::Fails:
      return "fails";
    case LemmaStatus::SkippedHypothesis:
      return "skipped-hypothesis";
  }
  return "?";
}

std::optional<std::vector<Derivation>> certified_basis(const Arrangement& a) {
  std::vector<Derivation> basis;
  if (is_southwest(a)) {
    basis = southwest_basis(a);
  } else {
    const auto subsets = all_subsets(a.n());
    auto it = std::find_if(subsets.begin(), subsets.end(), [&](const IndexSet& J) { return build_AJ(J, a.n()) == a; });
    if (it == subsets.end()) return std::nullopt;
    basis = aj_basis(*it, a.n());
  }
  if (!saito_check(basis, a)) return std::nullopt;
  return basis;
}

STInstance classify(const std::vector<Polynomial>& forms, const CMap& c, const std::vector<Derivation>& basis) {
  const int n = c.n();
  STInstance out;
  out.forms = forms;
  out.cmap = c.name();
  out.cmap_degree = c.degree();
  out.basis = basis;
  out.ideal = st_ideal(forms, c, basis);
  for (const auto& d : basis) out.exponents.push_back(d.degree().value_or(0));
  const int d = c.degree();
  const int esum = std::accumulate(out.exponents.begin(), out.exponents.end(), 0);

  const GroebnerBasis& gb = out.ideal.groebner();
  if (gb.is_unit()) {
    out.kind = STKind::Zero;
    out.hilbert = zero_series();
    out.series_consistent = true;
  } else if (!gb.is_artinian()) {
    out.kind = STKind::Infinite;
    out.hilbert = hilbert_series(out.ideal, std::max(1, esum + n * d));
    out.series_consistent = !out.hilbert.complete;
  } else {
    out.kind = STKind::PoincareDuality;
    out.socle_degree = esum + n * (d - 1);
    out.hilbert = hilbert_series(out.ideal, std::max(0, out.socle_degree) + 1);
    std::vector<int> degs;
    for (int e : out.exponents) degs.push_back(e + d);
    out.series_consistent = out.hilbert.complete && out.hilbert == complete_intersection_series(degs) &&
                            out.hilbert.is_palindromic() &&
                            static_cast<int>(out.hilbert.coefficients.size()) == out.socle_degree + 1;
  }
  return out;
}

STInstance classify(const Arrangement& a, const CMap& c) {
  if (a.n() != c.n()) throw DimensionError("classify: arrangement and map differ in rank");
  STInstance out = classify(a.linear_forms(), c, require_basis(a));
  out.arrangement = a;
  return out;
}

Ideal i_ideal(const Arrangement& a) { return st_ideal(a, CMap::i_map(a.n()), require_basis(a)); }

HilbertSeries st_series(const Arrangement& a) {
  Ideal ideal = i_ideal(a);
  if (ideal.groebner().is_unit()) return zero_series();
  return hilbert_series(ideal, static_cast<int>(a.size()) + 1);
}

LemmaStatus derivation_colon_check(const Arrangement& a, const Arrangement& b, const CMap& c) {
  if (a.n() != b.n() || a.n() != c.n()) throw DimensionError("derivation_colon_check: rank mismatch");
  for (const auto& h : b.hyperplanes()) {
    if (!a.contains(h)) throw DomainError("derivation_colon_check: B is not a subarrangement of A");
  }
  Ideal ca = st_ideal(a, c, require_basis(a));
  const GroebnerBasis& gb = ca.groebner();
  if (!gb.is_artinian()) return LemmaStatus::SkippedHypothesis;
  Polynomial quotient = quotient_polynomial(a, b);
  if (gb.contains(quotient)) return LemmaStatus::SkippedHypothesis;
  Ideal cb = st_ideal(b, c, require_basis(b));
  return ideal_equal(cb, colon(ca, quotient)) ? LemmaStatus::Holds : LemmaStatus::Fails;
}

ExactSequenceReport exact_sequence_report(const Arrangement& a) {
  require_essential_southwest(a, "exact_sequence_check");
  const int n = a.n();
  ExactSequenceReport rep;
  auto p = max_coordinate(a);
  if (!p) throw DomainError("exact_sequence_check: no coordinate hyperplane");
  rep.p = *p;
  Arrangement deleted = delete_hyperplane(a, Hyperplane{0, rep.p});

  rep.whole = st_series(a);
  rep.deletion = st_series(deleted);
  std::vector<Polynomial> lifted;
  if (n == 1) {
    rep.restriction = one_series();  // S = K, no derivations to apply
  } else {
    Arrangement restricted = restrict_coord(a, rep.p);
    rep.restriction = st_series(restricted);
    Ideal below = i_ideal(restricted);
    for (const auto& g : below.generators()) lifted.push_back(insert_variable(g, rep.p));
  }

  if (rep.whole.complete && rep.deletion.complete && rep.restriction.complete) {
    const auto& w = rep.whole.coefficients;
    const auto& dl = rep.deletion.coefficients;
    const auto& r = rep.restriction.coefficients;
    std::size_t len = std::max({w.size(), dl.size() + 1, r.size()});
    auto at = [](const std::vector<long>& v, std::size_t k) { return k < v.size() ? v[k] : 0L; };
    rep.additive = true;
    for (std::size_t k = 0; k < len; ++k) {
      long shifted = k == 0 ? 0 : at(dl, k - 1);
      if (at(w, k) != shifted + at(r, k)) rep.additive = false;
    }
  }

  Polynomial xp = Polynomial::variable(n, rep.p);
  lifted.push_back(xp);
  rep.restriction_ideal = ideal_equal(Ideal(n, lifted), ideal_sum(i_ideal(a), Ideal(n, {xp})));
  rep.colon = derivation_colon_check(a, deleted, CMap::i_map(n));
  return rep;
}

bool exact_sequence_check(const Arrangement& a) { return exact_sequence_report(a).ok(); }

bool independent_modulo(const GroebnerBasis& gb, const std::vector<Monomial>& monomials) {
  std::unordered_map<Monomial, std::size_t> columns;
  std::vector<SparseVector> rows;
  for (const auto& m : monomials) {
    Polynomial nf = gb.normal_form(Polynomial::monomial(gb.nvars(), m));
    SparseVector row;
    for (const auto& t : nf.terms()) {
      auto [it, fresh] = columns.emplace(t.monomial, columns.size());
      row.emplace_back(it->second, t.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(std::move(row));
  }
  return rank(rows, columns.size()) == monomials.size();
}

BoxBasisReport sw_monomial_basis_report(const Arrangement& a) {
  require_essential_southwest(a, "verify_sw_monomial_basis");
  BoxBasisReport rep;
  rep.h = h_sequence(a);
  auto box = box_monomials(rep.h);
  rep.box_size = box.size();
  Ideal ideal = i_ideal(a);
  const GroebnerBasis& gb = ideal.groebner();
  rep.dimension = gb.quotient_dimension();
  rep.independent = independent_modulo(gb, box);
  return rep;
}

bool verify_sw_monomial_basis(const Arrangement& a) { return sw_monomial_basis_report(a).ok(); }

Ideal coinvariant_colon(const IndexSet& J, int n) { return colon(coinvariant_ideal(n), f_poly(J, n)); }

SsJReport ssJ_report(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  SsJReport rep;
  rep.unit_branch = contains(J, 1);
  Ideal ideal = coinvariant_colon(J, n);
  const GroebnerBasis& gb = ideal.groebner();
  rep.colon_is_unit = gb.is_unit();
  auto ms = staircase_monomials(J, n);
  rep.count = ms.size();
  if (!rep.colon_is_unit) {
    rep.dimension = gb.quotient_dimension();
    rep.independent = independent_modulo(gb, ms);
  } else {
    rep.dimension = 0;
  }
  return rep;
}

bool verify_ssJ(const IndexSet& J, int n) { return ssJ_report(J, n).ok(); }

GeneratingSetReport generating_set_report(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  if (contains(J, 1)) throw DomainError("generating_set_report: requires 1 ∉ J");
  GeneratingSetReport rep;
  auto g = g_generators(J, n);
  rep.regular = is_regular_sequence(g);
  rep.equal = ideal_equal(Ideal(n, g), coinvariant_colon(J, n));
  return rep;
}

CospanReport cospan_report(const std::vector<Hyperplane>& T, int n) {
  Arrangement full = Arrangement::full(n);
  Polynomial prod = Polynomial::constant(n, 1);
  for (const auto& h : T) {
    if (!full.contains(h)) throw IndexError("cospan_check: hyperplane outside the augmented braid arrangement");
    prod *= linear_form(h, n);
  }
  CospanReport rep;
  rep.steinberg_member = steinberg_member(prod, n);
  rep.groebner_member = coinvariant_basis(n).contains(prod);
  RowEchelon ech(static_cast<std::size_t>(n));
  for (const auto& h : full.hyperplanes()) {
    if (std::find(T.begin(), T.end(), h) != T.end()) continue;
    SparseVector row;
    Polynomial form = linear_form(h, n);
    for (const auto& t : form.terms()) {
      int pos = t.monomial.support_end();
      row.emplace_back(static_cast<std::size_t>(pos), t.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ech.insert(row);
  }
  rep.complement_spans = ech.full();
  return rep;
}

bool cospan_check(const std::vector<Hyperplane>& T, int n) { return cospan_report(T, n).holds(); }

InvariantQuotientReport invariant_quotient_report(const Arrangement& a) {
  const int n = a.n();
  InvariantQuotientReport rep;
  Ideal ia = i_ideal(a);
  Ideal coinv = coinvariant_ideal(n);
  rep.contains_coinvariant = ideal_contains(ia, coinv);
  if (!is_essential(a)) rep.nonessential_unit = ia.groebner().is_unit();
  rep.beta_colon = ideal_equal(ia, colon(coinv, beta_poly(a)));
  return rep;
}

Arrangement augmented_AJ(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  auto hs = build_AJ(J, n).hyperplanes();
  for (int k : J) hs.push_back(Hyperplane{0, k});
  return Arrangement(n, hs);
}

bool h_chain_check(const IndexSet& J0, int n) {
  IndexSet J = make_index_set(J0, n);
  auto expected = staircase(J, n);
  for (int k : J) ++expected[static_cast<std::size_t>(k - 1)];
  return h_sequence(augmented_AJ(J, n)) == expected;
}

}  // namespace supercoinv
