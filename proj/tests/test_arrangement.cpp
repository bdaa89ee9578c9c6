#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "supercoinv/arrangement.hpp"
#include "supercoinv/errors.hpp"

using namespace supercoinv;

namespace {

Arrangement running_example() { return Arrangement::parse("n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5"); }

std::vector<Arrangement> all_subarrangements(int n) {
  auto full = Arrangement::full(n).hyperplanes();
  std::vector<Arrangement> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << full.size()); ++mask) {
    std::vector<Hyperplane> hs;
    for (std::size_t k = 0; k < full.size(); ++k)
      if (mask >> k & 1) hs.push_back(full[k]);
    out.emplace_back(n, hs);
  }
  return out;
}

// literal count over F_q^n
std::int64_t brute_force_points(const Arrangement& a, int q) {
  std::vector<int> x(static_cast<std::size_t>(a.n()), 0);
  std::int64_t count = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == a.n()) {
      for (const auto& h : a.hyperplanes()) {
        int xi = h.i == 0 ? 0 : x[static_cast<std::size_t>(h.i - 1)];
        if (xi == x[static_cast<std::size_t>(h.j - 1)]) return;
      }
      ++count;
      return;
    }
    for (int v = 0; v < q; ++v) {
      x[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return count;
}

// chromatic polynomial of the graph on {0..n} by deletion-contraction, divided by t
IntPoly chromatic_oracle(const Arrangement& a) {
  std::function<IntPoly(int, std::vector<std::pair<int, int>>)> chrom = [&](int nv, std::vector<std::pair<int, int>> e) {
    if (e.empty()) {
      IntPoly p(static_cast<std::size_t>(nv) + 1, 0);
      p[static_cast<std::size_t>(nv)] = 1;
      return p;
    }
    auto [u, v] = e.back();
    e.pop_back();
    IntPoly del = chrom(nv, e);
    // contract v into u, relabel the last vertex to v
    std::vector<std::pair<int, int>> c;
    for (auto [s, t] : e) {
      if (s == v) s = u;
      if (t == v) t = u;
      if (s == nv - 1) s = v;
      if (t == nv - 1) t = v;
      if (s == t) continue;
      if (s > t) std::swap(s, t);
      if (std::find(c.begin(), c.end(), std::make_pair(s, t)) == c.end()) c.emplace_back(s, t);
    }
    IntPoly con = chrom(nv - 1, c);
    for (std::size_t k = 0; k < con.size(); ++k) del[k] -= con[k];
    return del;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& h : a.hyperplanes()) edges.emplace_back(h.i, h.j);
  IntPoly g = chrom(a.n() + 1, edges);
  return IntPoly(g.begin() + 1, g.end());
}

std::string monomials_text(const std::vector<Monomial>& ms) {
  std::string out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (k) out += ", ";
    out += monomial_to_string(ms[k]);
  }
  return out;
}

}  // namespace

TEST_CASE("text format") {
  Arrangement a = running_example();
  CHECK(a.size() == 9);
  CHECK(to_string(a) == "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5");
  CHECK(Arrangement::parse("n=5;H:2-5,0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,0-1") == a);
  CHECK(to_string(Arrangement(3)) == "n=3; H:");
  CHECK(Arrangement::parse("n=3; H:").empty());
  CHECK_THROWS_AS(Arrangement::parse("n=3; H:0-4"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse("n=3; H:2-1"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse("n=3 H:0-1"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse("n=3; H:0-1,"), ParseError);
  CHECK_THROWS_AS(Arrangement(2, {{1, 3}}), IndexError);
}

TEST_CASE("staircases") {
  CHECK(staircase({2, 4}, 5) == std::vector<int>{1, 1, 2, 2, 3});
  CHECK(staircase({}, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(staircase({1, 3}, 3)[0] == 0);
  CHECK(staircase_monomials({1}, 3).empty());
  CHECK(staircase_monomials({1, 2, 3}, 3).empty());
  CHECK(monomials_text(staircase_monomials({2, 4}, 5)) ==
        "x3*x4*x5^2, x3*x4*x5, x3*x4, x3*x5^2, x3*x5, x3, x4*x5^2, x4*x5, x4, x5^2, x5, 1");
  CHECK(monomials_text(staircase_monomials({}, 3)) == "x2*x3^2, x2*x3, x2, x3^2, x3, 1");
  CHECK(monomials_text(staircase_monomials({3}, 3)) == "x2*x3, x2, x3, 1");
  CHECK(monomials_text(staircase_monomials({2}, 3)) == "x3, 1");
  CHECK(monomials_text(staircase_monomials({2, 3}, 3)) == "1");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& J : all_subsets(n)) {
      auto st = staircase(J, n);
      long prod = 1;
      for (int s : st) prod *= s;
      CHECK(static_cast<long>(staircase_monomials(J, n).size()) == prod);
      CHECK(st[0] == (contains(J, 1) ? 0 : 1));
      for (int i = 2; i <= n; ++i) CHECK(st[i - 1] - st[i - 2] == (contains(J, i) ? 0 : 1));
    }
  }
  CHECK_THROWS_AS(staircase({4}, 3), IndexError);
}

TEST_CASE("subset order") {
  auto subs = all_subsets(3);
  REQUIRE(subs.size() == 8);
  CHECK(subs[0] == IndexSet{});
  CHECK(subs[1] == IndexSet{3});
  CHECK(subs[2] == IndexSet{2});
  CHECK(subs[3] == IndexSet{2, 3});
  CHECK(subs[4] == IndexSet{1});
  CHECK(to_string(IndexSet{2, 4}) == "{2,4}");
}

TEST_CASE("southwest predicate and h-sequences") {
  Arrangement a = running_example();
  CHECK(is_southwest(a));
  CHECK(is_southwest(Arrangement::full(5)));
  CHECK_FALSE(is_southwest(build_AJ({2, 4}, 5)));
  CHECK(h_sequence(a) == std::vector<int>{1, 2, 2, 3, 1});
  CHECK(h_sequence(Arrangement::full(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(h_sequence(Arrangement(3)) == std::vector<int>{0, 0, 0});
  for (int n = 1; n <= 3; ++n) {
    for (const auto& b : all_subarrangements(n)) {
      int sum = 0;
      for (int h : h_sequence(b)) sum += h;
      CHECK(sum == static_cast<int>(b.size()));
    }
  }
}

TEST_CASE("A_J") {
  Arrangement aj = build_AJ({2, 4}, 5);
  CHECK(to_string(aj) == "n=5; H:0-1,1-2,0-3,1-3,1-4,3-4,0-5,1-5,3-5");
  CHECK(aj.size() == 9);
  CHECK(build_AJ({1, 2, 3}, 3).empty());
  CHECK(build_AJ({}, 4) == Arrangement::full(4));
}

TEST_CASE("deletion and restriction") {
  Arrangement a = running_example();
  REQUIRE(max_coordinate(a) == 2);
  Arrangement d = delete_hyperplane(a, {0, 2});
  CHECK(h_sequence(d) == std::vector<int>{1, 1, 2, 3, 1});
  CHECK(is_southwest(d));
  Arrangement r = restrict_coord(a, 2);
  CHECK(r.n() == 4);
  CHECK(h_sequence(r) == std::vector<int>{1, 2, 3, 1});
  CHECK(is_southwest(r));
  for (int n = 2; n <= 5; ++n) CHECK(restrict_coord(Arrangement::full(n), n) == Arrangement::full(n - 1));
  CHECK_THROWS_AS(delete_hyperplane(a, {0, 3}), DomainError);
  CHECK_THROWS_AS(restrict_coord(a, 3), DomainError);
  CHECK_FALSE(max_coordinate(Arrangement::braid(3)));
}

TEST_CASE("deletion-restriction recursion on every southwest arrangement") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& a : all_subarrangements(n)) {
      if (!is_southwest(a)) continue;
      auto p = max_coordinate(a);
      if (!p) continue;
      auto h = h_sequence(a);
      Arrangement d = delete_hyperplane(a, {0, *p});
      Arrangement r = restrict_coord(a, *p);
      CHECK(is_southwest(d));
      CHECK(is_southwest(r));
      auto hd = h;
      --hd[static_cast<std::size_t>(*p - 1)];
      CHECK(h_sequence(d) == hd);
      auto hr = h;
      hr.erase(hr.begin() + (*p - 1));
      CHECK(h_sequence(r) == hr);
    }
  }
}

TEST_CASE("defining polynomials") {
  CHECK(defining_polynomial(Arrangement(1, {{0, 1}})) == parse_polynomial("x1", 1));
  CHECK(defining_polynomial(Arrangement::braid(2)) == parse_polynomial("x1-x2", 2));
  CHECK(defining_polynomial(Arrangement(2, {})) == parse_polynomial("1", 2));
  CHECK(f_poly({2}, 2) == parse_polynomial("x2", 2));
  CHECK(ftilde_poly({2}, 3) == parse_polynomial("x2-x3", 3));
  CHECK(f_poly({2, 4}, 5) == parse_polynomial("x2", 5) * parse_polynomial("x2-x3", 5) *
                                 parse_polynomial("x2-x4", 5) * parse_polynomial("x2-x5", 5) *
                                 parse_polynomial("x4", 5) * parse_polynomial("x4-x5", 5));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& J : all_subsets(n)) {
      Arrangement aj = build_AJ(J, n);
      CHECK(beta_poly(aj) == f_poly(J, n));
      auto q = exact_quotient(defining_polynomial(Arrangement::full(n)), defining_polynomial(aj));
      REQUIRE(q);
      CHECK((*q == f_poly(J, n) || *q == -f_poly(J, n)));
      CHECK(quotient_polynomial(Arrangement::full(n), aj) == f_poly(J, n));
    }
  }
}

TEST_CASE("intersection lattices") {
  CHECK(intersection_lattice(Arrangement(2, {{0, 1}})).flats.size() == 2);
  CHECK(intersection_lattice(Arrangement::braid(3)).flats.size() == 5);
  CHECK(intersection_lattice(Arrangement(3)).flats.size() == 1);
  CHECK(intersection_lattice(Arrangement::full(3)).flats.size() == 15);  // Bell(4)
  CHECK_THROWS_AS(intersection_lattice(Arrangement(8)), ResourceLimitError);
  auto lat = intersection_lattice(Arrangement::braid(3));
  CHECK(lat.flats[0].dimension() == 3);
  CHECK(lat.mobius[0] == 1);
}

TEST_CASE("characteristic polynomials") {
  CHECK(characteristic_polynomial(Arrangement(3)) == IntPoly{0, 0, 0, 1});
  CHECK(characteristic_polynomial(Arrangement::braid(3)) == poly_from_roots({0, 1, 2}));
  CHECK(characteristic_polynomial(build_AJ({2, 4}, 5)) == poly_from_roots({1, 1, 2, 2, 3}));
  CHECK(to_string(poly_from_roots({0, 1, 2})) == "t^3-3*t^2+2*t");
  CHECK(to_string(IntPoly{0, 0, 0, 1}) == "t^3");
  CHECK(to_string(IntPoly{-6, 1}) == "t-6");
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : all_subarrangements(n)) {
      IntPoly chi = characteristic_polynomial(a);
      CHECK(chi == chromatic_oracle(a));
      for (int q : {2, 3, 5, 7}) {
        CHECK(count_points_mod(a, q) == brute_force_points(a, q));
        CHECK(count_points_mod(a, q) == evaluate(chi, q));
      }
    }
  }
}

TEST_CASE("A_J characteristic polynomial factors over the staircase") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& J : all_subsets(n)) {
      Arrangement aj = build_AJ(J, n);
      IntPoly expected = poly_from_roots(staircase(J, n));
      IntPoly chi = characteristic_polynomial(aj);
      CHECK(chi == expected);
      std::int64_t p = default_prime(aj);
      CHECK(p > n * static_cast<std::int64_t>(aj.size()));
      CHECK(count_points_mod(aj, p) == evaluate(expected, p));
    }
  }
  CHECK(next_prime_above(0) == 2);
  CHECK(next_prime_above(45) == 47);
}

TEST_CASE("chordality and essentiality") {
  CHECK_FALSE(is_chordal(Arrangement(3, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK(is_chordal(Arrangement::full(5)));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : all_subarrangements(n)) {
      if (is_southwest(a)) CHECK(is_chordal(a));
    }
  }
  CHECK(is_essential(Arrangement::full(3)));
  CHECK_FALSE(is_essential(Arrangement::braid(3)));
  CHECK_FALSE(is_essential(Arrangement(2, {{0, 1}})));
  // essential iff the lattice top is the single-block partition
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : all_subarrangements(n)) {
      auto lat = intersection_lattice(a);
      CHECK(is_essential(a) == (lat.flats.back().nblocks == 1));
    }
  }
}

TEST_CASE("chordality against induced cycles") {
  // brute force: a graph is chordal iff no induced cycle of length >= 4
  auto has_long_induced_cycle = [](const Arrangement& a) {
    const int m = a.n() + 1;
    auto adj = [&](int u, int v) { return a.contains(std::min(u, v), std::max(u, v)); };
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int k = __builtin_popcount(mask);
      if (k < 4) continue;
      bool ok = true;
      for (int v = 0; v < m && ok; ++v) {
        if (!(mask >> v & 1)) continue;
        int deg = 0;
        for (int u = 0; u < m; ++u)
          if (u != v && (mask >> u & 1) && adj(u, v)) ++deg;
        ok = deg == 2;
      }
      if (!ok) continue;
      // 2-regular: a single cycle iff connected
      int start = __builtin_ctz(mask);
      std::vector<bool> seen(static_cast<std::size_t>(m), false);
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = true;
      int reached = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < m; ++v)
          if ((mask >> v & 1) && v != u && !seen[static_cast<std::size_t>(v)] && adj(u, v)) {
            seen[static_cast<std::size_t>(v)] = true;
            ++reached;
            stack.push_back(v);
          }
      }
      if (reached == k) return true;
    }
    return false;
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : all_subarrangements(n)) CHECK(is_chordal(a) == !has_long_induced_cycle(a));
  }
}

TEST_CASE("poset rendering") {
  std::string expected =
      "        ○\n"
      "      ○   ○\n"
      "    ○   ●   ●\n"
      "  ●   ●   ●   ○\n"
      "●   ●   ●   ●   ○\n";
  CHECK(render_poset(running_example()) == expected);
}
