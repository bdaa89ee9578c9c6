#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supercoinv/errors.hpp"
#include "supercoinv/solomon_terao.hpp"
#include "supercoinv/symmetric.hpp"

using namespace supercoinv;

namespace {

Polynomial P(const char* text, int n) { return parse_polynomial(text, n); }

Arrangement running_example() { return Arrangement::parse("n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5"); }

// Coefficients of [n]_q! = ∏_{k=1}^n (1 + q + ... + q^{k-1}).
std::vector<long> q_factorial(int n) {
  std::vector<long> acc{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<long> next(acc.size() + static_cast<std::size_t>(k - 1), 0);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (int b = 0; b < k; ++b) next[a + static_cast<std::size_t>(b)] += acc[a];
    }
    acc = next;
  }
  return acc;
}

// Subsets of the augmented braid arrangement passing the southwest predicate.
std::vector<Arrangement> southwest_arrangements(int n, bool essential_only) {
  auto all = Arrangement::full(n).hyperplanes();
  std::vector<Arrangement> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Hyperplane> hs;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (1u << k)) hs.push_back(all[k]);
    }
    Arrangement a(n, hs);
    if (!is_southwest(a)) continue;
    if (essential_only && !is_essential(a)) continue;
    out.push_back(a);
  }
  return out;
}

std::vector<Hyperplane> subset_of_full(int n, unsigned mask) {
  auto all = Arrangement::full(n).hyperplanes();
  std::vector<Hyperplane> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (mask & (1u << k)) out.push_back(all[k]);
  }
  return out;
}

}  // namespace

TEST_CASE("trichotomy fixtures") {
  auto empty = classify(Arrangement(3), CMap::i_map(3));
  CHECK(empty.kind == STKind::Zero);
  CHECK(empty.hilbert.total() == 0);
  CHECK(empty.series_consistent);

  std::vector<Polynomial> sum_form{P("x1+x2", 2)};
  std::vector<Derivation> basis{Derivation({P("1", 2), P("-1", 2)}), Derivation::euler(2)};
  auto line = classify(sum_form, CMap::i_map(2), basis);
  CHECK(line.kind == STKind::Infinite);
  CHECK_FALSE(line.hilbert.complete);
  CHECK(line.series_consistent);
  CHECK_FALSE(line.arrangement.has_value());
  // the basis written down for this arrangement is rejected
  std::vector<Derivation> rotated{Derivation({P("1", 2), P("-1", 2)}), Derivation({P("x2", 2), P("-x1", 2)})};
  CHECK_THROWS_AS(classify(sum_form, CMap::i_map(2), rotated), DomainError);

  long fact = 1;
  for (int n = 1; n <= 4; ++n) {
    fact *= n;
    auto inst = classify(Arrangement::full(n), CMap::i_map(n));
    CHECK(inst.kind == STKind::PoincareDuality);
    CHECK(inst.hilbert.coefficients == q_factorial(n));
    CHECK(inst.hilbert.total() == fact);
    CHECK(inst.series_consistent);
    CHECK(inst.socle_degree == n * (n - 1) / 2);
  }

  auto run = classify(running_example(), CMap::i_map(5));
  CHECK(run.kind == STKind::PoincareDuality);
  CHECK(run.hilbert.coefficients == std::vector<long>{1, 3, 4, 3, 1});
  CHECK(run.hilbert.is_palindromic());
  CHECK(run.series_consistent);

  // the braid arrangement under 𝔞 gives the coinvariant ring again
  for (int n = 2; n <= 3; ++n) {
    auto braid = classify(Arrangement::braid(n), CMap::a_map(n));
    CHECK(braid.kind == STKind::PoincareDuality);
    CHECK(braid.hilbert.coefficients == q_factorial(n));
    CHECK(ideal_equal(braid.ideal, Ideal(n, coinvariant_generators(n))));
  }
}

TEST_CASE("trichotomy is exclusive on every southwest arrangement") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : southwest_arrangements(n, false)) {
      auto inst = classify(a, CMap::i_map(n));
      CHECK(inst.series_consistent);
      bool unit = inst.ideal.groebner().is_unit();
      bool artinian = inst.ideal.groebner().is_artinian();
      CHECK((inst.kind == STKind::Zero) == unit);
      CHECK((inst.kind == STKind::Infinite) == !artinian);
      // southwest arrangements have a constant among their 𝔦-generators unless essential
      CHECK((inst.kind == STKind::Zero) == !is_essential(a));
    }
  }
}

TEST_CASE("certified bases") {
  CHECK_FALSE(is_southwest(Arrangement::parse("n=3; H:0-3,1-3")));
  CHECK_FALSE(certified_basis(Arrangement::parse("n=3; H:0-3,1-3")).has_value());
  for (const auto& J : all_subsets(4)) CHECK(certified_basis(build_AJ(J, 4)).has_value());
  CHECK_THROWS_AS(i_ideal(Arrangement::parse("n=3; H:0-3,1-3")), DomainError);
}

TEST_CASE("short exact sequences") {
  auto phi2 = exact_sequence_report(Arrangement::full(2));
  CHECK(phi2.p == 2);
  CHECK(phi2.whole.coefficients == std::vector<long>{1, 1});
  CHECK(phi2.deletion.coefficients == std::vector<long>{1});
  CHECK(phi2.restriction.coefficients == std::vector<long>{1});
  CHECK(phi2.ok());

  auto run = exact_sequence_report(running_example());
  CHECK(run.p == 2);
  CHECK(run.ok());

  // h_p = 1: the deletion is not essential and vanishes
  Arrangement a = Arrangement::parse("n=2; H:0-1,0-2");
  auto rep = exact_sequence_report(a);
  CHECK(rep.deletion.total() == 0);
  CHECK(rep.restriction == rep.whole);
  CHECK(rep.ok());

  CHECK_THROWS_AS(exact_sequence_check(Arrangement::parse("n=2; H:0-1")), DomainError);

  for (int n = 1; n <= 3; ++n) {
    for (const auto& sw : southwest_arrangements(n, true)) CHECK(exact_sequence_check(sw));
  }
}

TEST_CASE("box monomial bases") {
  auto phi2 = sw_monomial_basis_report(Arrangement::full(2));
  CHECK(phi2.h == std::vector<int>{1, 2});
  CHECK(phi2.ok());

  auto run = sw_monomial_basis_report(running_example());
  CHECK(run.h == std::vector<int>{1, 2, 2, 3, 1});
  CHECK(run.box_size == 12);
  CHECK(run.dimension == 12);
  CHECK(run.ok());

  for (int n = 1; n <= 3; ++n) {
    for (const auto& sw : southwest_arrangements(n, true)) CHECK(verify_sw_monomial_basis(sw));
  }
  CHECK_THROWS_AS(verify_sw_monomial_basis(Arrangement::parse("n=2; H:0-1")), DomainError);
}

TEST_CASE("colon ideals for subarrangements") {
  // Q(A)/Q(∅) has degree 3 and lies in the coinvariant ideal
  CHECK(derivation_colon_check(Arrangement::full(2), Arrangement(2), CMap::i_map(2)) == LemmaStatus::SkippedHypothesis);
  CHECK(derivation_colon_check(Arrangement::full(2), Arrangement::parse("n=2; H:0-1,0-2"), CMap::i_map(2)) ==
        LemmaStatus::Holds);
  CHECK(derivation_colon_check(running_example(), Arrangement::parse("n=5; H:0-1,1-2,1-3,2-3,1-4,2-4,3-4,2-5"),
                               CMap::i_map(5)) == LemmaStatus::Holds);
  CHECK_THROWS_AS(derivation_colon_check(Arrangement::parse("n=2; H:0-1"), Arrangement::full(2), CMap::i_map(2)),
                  DomainError);
  CHECK(std::string(to_string(LemmaStatus::SkippedHypothesis)) == "skipped-hypothesis");
}

TEST_CASE("staircase bases of coinvariant colon ideals") {
  auto j2 = ssJ_report({2}, 2);
  CHECK_FALSE(j2.unit_branch);
  CHECK(j2.count == 1);
  CHECK(j2.dimension == 1);
  CHECK(ideal_equal(coinvariant_colon({2}, 2), Ideal(2, {P("x1", 2), P("x2", 2)})));
  CHECK(j2.ok());

  auto j1 = ssJ_report({1, 3}, 3);
  CHECK(j1.unit_branch);
  CHECK(j1.colon_is_unit);
  CHECK(j1.ok());

  for (int n = 1; n <= 3; ++n) {
    for (const auto& J : all_subsets(n)) CHECK(verify_ssJ(J, n));
  }
  CHECK(staircase_monomials({2, 4}, 5).size() == 12);
}

TEST_CASE("g generators") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& J : all_subsets(n)) {
      if (contains(J, 1)) {
        CHECK_THROWS_AS(generating_set_report(J, n), DomainError);
        continue;
      }
      CHECK(generating_set_report(J, n).ok());
    }
  }
}

TEST_CASE("products of roots in the coinvariant ideal") {
  auto none = cospan_report({}, 2);
  CHECK_FALSE(none.steinberg_member);
  CHECK(none.complement_spans);
  CHECK(none.holds());

  auto x1 = cospan_report({Hyperplane{0, 1}}, 2);
  CHECK_FALSE(x1.steinberg_member);
  CHECK(x1.complement_spans);
  CHECK(x1.holds());

  auto all = cospan_report(Arrangement::full(2).hyperplanes(), 2);
  CHECK(all.steinberg_member);
  CHECK(all.groebner_member);
  CHECK_FALSE(all.complement_spans);

  // complement {x1 - x2, x1 - x3, x2 - x3} spans only the sum-zero plane
  auto braid = cospan_report({Hyperplane{0, 1}, Hyperplane{0, 2}, Hyperplane{0, 3}}, 3);
  CHECK_FALSE(braid.complement_spans);
  CHECK(braid.steinberg_member);
  CHECK(braid.holds());

  for (int n = 2; n <= 3; ++n) {
    std::size_t m = Arrangement::full(n).size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) CHECK(cospan_check(subset_of_full(n, mask), n));
  }
  CHECK_THROWS_AS(cospan_report({Hyperplane{0, 3}}, 2), IndexError);
}

TEST_CASE("𝔦 ideals as quotients of the coinvariant ring") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : southwest_arrangements(n, false)) {
      auto rep = invariant_quotient_report(a);
      CHECK(rep.contains_coinvariant);
      CHECK(rep.nonessential_unit);
      REQUIRE(rep.beta_colon.has_value());
      CHECK(*rep.beta_colon);
    }
  }
  // β of the running example, iterated colon agrees with the single colon
  Arrangement run = running_example();
  Ideal coinv(5, coinvariant_generators(5));
  std::vector<Polynomial> missing;
  Arrangement full = Arrangement::full(5);
  for (const auto& h : full.hyperplanes()) {
    if (!run.contains(h)) missing.push_back(linear_form(h, 5));
  }
  CHECK(ideal_equal(colon(coinv, beta_poly(run)), i_ideal(run)));
  CHECK(ideal_equal(colon_iterated(coinv, missing), i_ideal(run)));
}

TEST_CASE("h sequence of the augmented A_J") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& J : all_subsets(n)) {
      CHECK(h_chain_check(J, n));
      CHECK(is_southwest(augmented_AJ(J, n)));
    }
  }
  CHECK(h_sequence(augmented_AJ({2, 4}, 5)) == std::vector<int>{1, 2, 2, 3, 3});
}
