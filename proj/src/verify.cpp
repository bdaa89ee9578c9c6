#include "supercoinv/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "supercoinv/derivations.hpp"
#include "supercoinv/detail/parallel.hpp"
#include "supercoinv/errors.hpp"
#include "supercoinv/solomon_terao.hpp"
#include "supercoinv/superspace.hpp"
#include "supercoinv/symmetric.hpp"

namespace supercoinv {

namespace {

struct Task {
  std::string check;
  int n = 0;
  std::string instance;
  // (expected, actual)
  std::function<std::pair<std::string, std::string>()> run;
};

using TaskList = std::vector<Task>;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

std::string join_longs(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "]";
}

std::string hyperplane_list(const std::vector<Hyperplane>& hs) {
  std::string out = "T={";
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(hs[k].i) + "-" + std::to_string(hs[k].j);
  }
  return out + "}";
}

std::string j_label(const IndexSet& J) { return "J=" + to_string(J); }

std::string monomial_list(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += monomial_to_string(m);
  }
  return out;
}

std::string super_list(const std::vector<SuperMonomial>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

long product_of(const std::vector<int>& v) {
  long p = 1;
  for (int x : v) p *= x;
  return p;
}

Arrangement running_example() { return Arrangement::parse("n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5"); }

// [n]_q! coefficients
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

void add_coverage(TaskList& tasks, const std::string& suite, int n, long expected, long actual) {
  tasks.push_back({suite + "/coverage", n, "instances", [expected, actual] {
                     return std::pair{std::to_string(expected), std::to_string(actual)};
                   }});
}

// Suites whose cost grows quickly; n = 5 needs allow_large.
bool is_expensive(const std::string& suite) {
  return suite != "staircase" && suite != "char-poly-AJ" && suite != "h-chain";
}

// staircase-basis runs a fixed n = 5 sample by default; allow_large widens it
// to every J.
bool has_n5_sample(const std::string& suite) { return suite == "staircase-basis"; }

int max_n_for(const std::string& suite, const RunConfig& cfg) {
  int n = cfg.max_n.value_or(is_expensive(suite) && !has_n5_sample(suite) ? 4 : 5);
  if (n < 1) throw DomainError("max n must be positive");
  if (is_expensive(suite) && !has_n5_sample(suite) && n >= 5 && !cfg.allow_large) {
    throw DomainError("suite '" + suite + "' at n >= 5 needs the allow-large option");
  }
  if (n > 5 && suite != "staircase") throw DomainError("n > 5 is outside the supported range");
  return n;
}

// ---------------------------------------------------------------------------
// suites

TaskList suite_staircase(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("staircase", cfg);
  t.push_back({"staircase", 5, j_label({2, 4}), [] {
                 return std::pair<std::string, std::string>{"(1,1,2,2,3)", join_ints(staircase({2, 4}, 5))};
               }});
  t.push_back({"staircase-monomials", 5, j_label({2, 4}), [] {
                 return std::pair<std::string, std::string>{
                     "x3*x4*x5^2, x3*x4*x5, x3*x4, x3*x5^2, x3*x5, x3, x4*x5^2, x4*x5, x4, x5^2, x5, 1",
                     monomial_list(staircase_monomials({2, 4}, 5))};
               }});
  t.push_back({"artin-monomials", 3, "all J", [] {
                 return std::pair<std::string, std::string>{
                     "x2*x3^2, x2*x3, x2, x3^2, x3, 1, x2*x3*t3, x2*t3, x3*t3, t3, x3*t2, t2, t2*t3",
                     super_list(artin_monomials(3))};
               }});
  for (int n = 1; n <= top; ++n) {
    t.push_back({"artin-count", n, "all J", [n] {
                   return std::pair{std::to_string(fubini_number(n)), std::to_string(artin_monomials(n).size())};
                 }});
    for (const auto& J : all_subsets(n)) {
      t.push_back({"staircase-count", n, j_label(J), [J, n] {
                     return std::pair{std::to_string(product_of(staircase(J, n))),
                                      std::to_string(staircase_monomials(J, n).size())};
                   }});
    }
  }
  return t;
}

TaskList suite_sagan_swanson(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("sagan-swanson", cfg);
  for (int n = 1; n <= top; ++n) {
    t.push_back({"sr-basis", n, "artin monomials", [n, cfg] {
                   auto rep = sr_basis_report(n, 1);
                   long expected_total = fubini_number(n) + (cfg.inject_fault ? 1 : 0);
                   std::string expected = "total=" + std::to_string(expected_total) + " basis=true";
                   std::string actual = "total=" + std::to_string(rep.sr_total) + " basis=" + yes_no(rep.ok());
                   return std::pair{expected, actual};
                 }});
  }
  return t;
}

TaskList suite_staircase_basis(const RunConfig& cfg) {
  TaskList t;
  const int requested = max_n_for("staircase-basis", cfg);
  const int top = std::min(requested, 4);
  auto add = [&](const IndexSet& J, int n) {
    t.push_back({"staircase-basis", n, j_label(J), [J, n] {
                   auto rep = ssJ_report(J, n);
                   std::string expected = contains(J, 1) ? "unit" : "basis dim=" + std::to_string(product_of(staircase(J, n)));
                   std::string actual;
                   if (rep.colon_is_unit) {
                     actual = "unit";
                   } else {
                     actual = std::string(rep.independent ? "basis" : "dependent") + " dim=" + std::to_string(rep.dimension);
                     if (rep.dimension != static_cast<long>(rep.count)) actual += " count=" + std::to_string(rep.count);
                   }
                   return std::pair{expected, actual};
                 }});
  };
  for (int n = 1; n <= top; ++n) {
    for (const auto& J : all_subsets(n)) add(J, n);
    add_coverage(t, "staircase-basis", n, 1L << n, static_cast<long>(all_subsets(n).size()));
  }
  if (requested >= 5) {
    if (cfg.allow_large) {
      for (const auto& J : all_subsets(5)) add(J, 5);
    } else {
      add({2, 4}, 5);
      for (int r = 1; r <= 6; ++r) {
        IndexSet J;
        for (int k = r; k <= 5; ++k) J.push_back(k);
        add(J, 5);
      }
    }
  }
  return t;
}

TaskList suite_generating_set(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("generating-set", cfg);
  for (int n = 1; n <= top; ++n) {
    long count = 0;
    for (const auto& J : all_subsets(n)) {
      if (contains(J, 1)) continue;
      ++count;
      t.push_back({"generating-set", n, j_label(J), [J, n, cfg] {
                     auto g = g_generators(J, n);
                     if (cfg.inject_fault) g.pop_back();
                     bool regular = g.size() == static_cast<std::size_t>(n) && is_regular_sequence(g);
                     bool equal = ideal_equal(Ideal(n, g), coinvariant_colon(J, n), cfg.order);
                     return std::pair<std::string, std::string>{"regular=true equal=true",
                                                                "regular=" + yes_no(regular) + " equal=" + yes_no(equal)};
                   }});
    }
    add_coverage(t, "generating-set", n, 1L << (n - 1), count);
  }
  return t;
}

std::string saito_summary(const SaitoCertificate& c) {
  if (c.ok()) return "certified";
  std::string out = "fails:";
  if (!c.membership) out += " membership";
  if (!c.degree_sum) out += " degree-sum";
  if (!c.ratio) out += " determinant";
  return out;
}

TaskList suite_saito_southwest(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("saito-southwest", cfg);
  for (int n = 1; n <= top; ++n) {
    for (const auto& a : enumerate_southwest(n)) {
      t.push_back({"saito-southwest", n, to_string(a), [a] {
                     auto cert = saito_certificate(southwest_basis(a), a.linear_forms());
                     return std::pair<std::string, std::string>{"certified", saito_summary(cert)};
                   }});
    }
  }
  return t;
}

TaskList suite_saito_aj(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("saito-AJ", cfg);
  for (int n = 1; n <= top; ++n) {
    for (const auto& J : all_subsets(n)) {
      t.push_back({"saito-AJ", n, j_label(J), [J, n] {
                     Arrangement a = build_AJ(J, n);
                     auto cert = saito_certificate(aj_basis(J, n), a.linear_forms());
                     return std::pair<std::string, std::string>{"certified", saito_summary(cert)};
                   }});
    }
    add_coverage(t, "saito-AJ", n, 1L << n, static_cast<long>(all_subsets(n).size()));
  }
  return t;
}

TaskList suite_char_poly(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("char-poly-AJ", cfg);
  for (int n = 1; n <= top; ++n) {
    for (const auto& J : all_subsets(n)) {
      t.push_back({"char-poly-AJ", n, j_label(J), [J, n, cfg] {
                     Arrangement a = build_AJ(J, n);
                     auto roots = staircase(J, n);
                     if (cfg.inject_fault) ++roots.back();
                     IntPoly expected_poly = poly_from_roots(roots);
                     std::int64_t q = cfg.prime.value_or(default_prime(a));
                     std::string expected =
                         "chi=" + to_string(expected_poly) + " count=" + std::to_string(evaluate(expected_poly, q));
                     std::string actual = "chi=" + to_string(characteristic_polynomial(a)) +
                                          " count=" + std::to_string(count_points_mod(a, q));
                     return std::pair{expected, actual};
                   }});
    }
    add_coverage(t, "char-poly-AJ", n, 1L << n, static_cast<long>(all_subsets(n).size()));
  }
  return t;
}

TaskList suite_cospan(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("cospan", cfg);
  for (int n = 2; n <= top; ++n) {
    Arrangement full = Arrangement::full(n);
    auto all = full.hyperplanes();
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Hyperplane> T;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask & (1u << k)) T.push_back(all[k]);
      }
      t.push_back({"cospan", n, hyperplane_list(T), [T, n] {
                     auto rep = cospan_report(T, n);
                     std::string member = yes_no(!rep.complement_spans);
                     return std::pair{"steinberg=" + member + " groebner=" + member,
                                      "steinberg=" + yes_no(rep.steinberg_member) +
                                          " groebner=" + yes_no(rep.groebner_member)};
                   }});
    }
    add_coverage(t, "cospan", n, 1L << (n * (n + 1) / 2), 1L << all.size());
  }
  return t;
}

TaskList suite_coinvariant_quotient(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("coinvariant-quotient", cfg);
  for (int n = 1; n <= top; ++n) {
    for (const auto& a : enumerate_southwest(n)) {
      t.push_back({"coinvariant-quotient", n, to_string(a), [a] {
                     auto rep = invariant_quotient_report(a);
                     return std::pair{std::string("contains=true nonessential-unit=true beta-colon=true"),
                                      "contains=" + yes_no(rep.contains_coinvariant) +
                                          " nonessential-unit=" + yes_no(rep.nonessential_unit) +
                                          " beta-colon=" + yes_no(rep.beta_colon.value_or(false))};
                   }});
    }
  }
  return t;
}

TaskList suite_exact_sequence(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("exact-sequence", cfg);
  auto add = [&](const Arrangement& a) {
    t.push_back({"exact-sequence", a.n(), to_string(a), [a] {
                   auto rep = exact_sequence_report(a);
                   std::string colon = rep.colon == LemmaStatus::Fails ? "fails" : "ok";
                   return std::pair{std::string("additive=true restriction=true colon=ok"),
                                    "additive=" + yes_no(rep.additive) + " restriction=" + yes_no(rep.restriction_ideal) +
                                        " colon=" + colon};
                 }});
  };
  for (int n = 1; n <= std::min(top, 4); ++n) {
    for (const auto& a : enumerate_southwest(n, true)) add(a);
  }
  if (top >= 5) {
    for (const auto& a : enumerate_southwest(5, true)) add(a);
  } else {
    add(running_example());
  }
  return t;
}

TaskList suite_box_basis(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("box-basis", cfg);
  auto add = [&](const Arrangement& a) {
    t.push_back({"box-basis", a.n(), to_string(a), [a] {
                   auto rep = sw_monomial_basis_report(a);
                   std::string expected = "dim=" + std::to_string(product_of(rep.h)) + " independent=true";
                   std::string actual = "dim=" + std::to_string(rep.dimension) + " independent=" + yes_no(rep.independent);
                   return std::pair{expected, actual};
                 }});
  };
  for (int n = 1; n <= std::min(top, 4); ++n) {
    for (const auto& a : enumerate_southwest(n, true)) add(a);
  }
  if (top >= 5) {
    for (const auto& a : enumerate_southwest(5, true)) add(a);
  } else {
    add(running_example());
  }
  t.push_back({"box-basis/running-example", 5, to_string(running_example()), [] {
                 auto inst = classify(running_example(), CMap::i_map(5));
                 return std::pair<std::string, std::string>{
                     "h=(1,2,2,3,1) series=[1,3,4,3,1] palindromic=true",
                     "h=" + join_ints(h_sequence(running_example())) + " series=" + join_longs(inst.hilbert.coefficients) +
                         " palindromic=" + yes_no(inst.hilbert.is_palindromic())};
               }});
  return t;
}

TaskList suite_h_chain(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("h-chain", cfg);
  for (int n = 1; n <= top; ++n) {
    for (const auto& J : all_subsets(n)) {
      t.push_back({"h-chain", n, j_label(J), [J, n] {
                     auto expected = staircase(J, n);
                     for (int k : J) ++expected[static_cast<std::size_t>(k - 1)];
                     Arrangement a = augmented_AJ(J, n);
                     std::string actual = join_ints(h_sequence(a));
                     if (!is_southwest(a)) actual += " not-southwest";
                     return std::pair{join_ints(expected), actual};
                   }});
    }
  }
  return t;
}

TaskList suite_trichotomy(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("trichotomy", cfg);
  for (int n = 1; n <= top; ++n) {
    t.push_back({"trichotomy", n, "empty", [n] {
                   auto inst = classify(Arrangement(n), CMap::i_map(n));
                   return std::pair<std::string, std::string>{"zero", to_string(inst.kind)};
                 }});
    t.push_back({"trichotomy", n, to_string(Arrangement::full(n)), [n] {
                   auto inst = classify(Arrangement::full(n), CMap::i_map(n));
                   std::string expected = "poincare-duality series=" + join_longs(q_factorial(n)) + " consistent=true";
                   std::string actual = std::string(to_string(inst.kind)) + " series=" + join_longs(inst.hilbert.coefficients) +
                                        " consistent=" + yes_no(inst.series_consistent);
                   return std::pair{expected, actual};
                 }});
  }
  t.push_back({"trichotomy", 2, "x1+x2", [] {
                 auto one = Polynomial::constant(2, 1);
                 std::vector<Derivation> basis{Derivation({one, -one}), Derivation::euler(2)};
                 auto inst = classify({parse_polynomial("x1+x2", 2)}, CMap::i_map(2), basis);
                 return std::pair<std::string, std::string>{"infinite", to_string(inst.kind)};
               }});
  t.push_back({"trichotomy", 5, to_string(running_example()), [] {
                 auto inst = classify(running_example(), CMap::i_map(5));
                 return std::pair<std::string, std::string>{"poincare-duality dim=12",
                                                            std::string(to_string(inst.kind)) +
                                                                " dim=" + std::to_string(inst.hilbert.total())};
               }});
  return t;
}

std::vector<int> complement_of(const VariableSubset& A, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (std::find(A.begin(), A.end(), i) == A.end()) out.push_back(i);
  }
  return out;
}

Polynomial random_poly(std::mt19937& rng, int n, int terms, int maxdeg) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n));
    int budget = maxdeg;
    for (auto& v : e) {
      v = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
      budget -= v;
    }
    out.push_back(Term{Monomial(std::span<const int>(e)), Rational(static_cast<int>(rng() % 9) - 4)});
  }
  return Polynomial(n, out);
}

TaskList suite_toolkit(const RunConfig& cfg) {
  TaskList t;
  const int top = max_n_for("coinvariant-toolkit", cfg);
  // Membership samples: even ones are built inside the ideal.
  std::mt19937 rng(cfg.sample_seed.value_or(2024));
  for (int k = 0; k < 200; ++k) {
    int n = 1 + k % std::min(top, 3);
    Polynomial f(n);
    if (k % 2 == 0) {
      for (const auto& g : coinvariant_generators(n)) f += random_poly(rng, n, 2, 6 - g.degree()) * g;
    } else {
      f = random_poly(rng, n, 5, 6);
    }
    t.push_back({"steinberg-agreement", n, to_string(f), [f, n] {
                   bool gb = Ideal(n, coinvariant_generators(n)).groebner().contains(f);
                   return std::pair{"member=" + yes_no(gb), "member=" + yes_no(steinberg_member(f, n))};
                 }});
  }
  for (int n = 1; n <= top; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      VariableSubset A;
      for (int i = 1; i <= n; ++i) {
        if (mask & (1u << (i - 1))) A.push_back(i);
      }
      std::string label = "A=" + to_string(IndexSet(A));
      t.push_back({"schur-long-row", n, label, [A, n] {
                     int bound = n - static_cast<int>(A.size());
                     long total = 0, members = 0;
                     for (int m = 1; m <= 6; ++m) {
                       for (const auto& lambda : partitions_of(m)) {
                         if (lambda[0] <= bound) continue;
                         ++total;
                         members += steinberg_member(schur(lambda, A, n), n);
                       }
                     }
                     return std::pair{std::to_string(total), std::to_string(members)};
                   }});
      t.push_back({"eh-duality", n, label, [A, n] {
                     VariableSubset B = complement_of(A, n);
                     int ok = 0;
                     for (int d = 0; d <= n + 2; ++d) ok += eh_duality_check(d, A, B, n);
                     return std::pair{std::to_string(n + 3), std::to_string(ok)};
                   }});
    }
  }
  return t;
}

using SuiteFn = TaskList (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"staircase", suite_staircase},
      {"sagan-swanson", suite_sagan_swanson},
      {"staircase-basis", suite_staircase_basis},
      {"generating-set", suite_generating_set},
      {"saito-southwest", suite_saito_southwest},
      {"saito-AJ", suite_saito_aj},
      {"char-poly-AJ", suite_char_poly},
      {"cospan", suite_cospan},
      {"coinvariant-quotient", suite_coinvariant_quotient},
      {"exact-sequence", suite_exact_sequence},
      {"box-basis", suite_box_basis},
      {"h-chain", suite_h_chain},
      {"trichotomy", suite_trichotomy},
      {"coinvariant-toolkit", suite_toolkit},
  };
  return r;
}

std::vector<CheckReport> execute(TaskList tasks, const RunConfig& cfg) {
  if (cfg.sample_seed) {
    std::mt19937 rng(*cfg.sample_seed);
    TaskList kept;
    for (auto& task : tasks) {
      bool keep = (rng() & 1u) != 0;
      if (keep && task.check.find("/coverage") == std::string::npos) kept.push_back(std::move(task));
    }
    tasks = std::move(kept);
  }
  std::vector<CheckReport> out(tasks.size());
  detail::parallel_for(tasks.size(), cfg.workers, [&](std::size_t k) {
    const Task& task = tasks[k];
    CheckReport& rep = out[k];
    rep.check = task.check;
    rep.n = task.n;
    rep.instance = task.instance;
    auto start = std::chrono::steady_clock::now();
    try {
      auto [expected, actual] = task.run();
      rep.expected = std::move(expected);
      rep.actual = std::move(actual);
      rep.pass = rep.expected == rep.actual;
    } catch (const std::exception& e) {
      rep.expected = rep.expected.empty() ? "no error" : rep.expected;
      rep.actual = std::string("error: ") + e.what();
      rep.pass = false;
    }
    if (cfg.timings) {
      rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
  });
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Arrangement> enumerate_southwest(int n, bool essential_only) {
  if (n < 1 || n > 5) throw DomainError("enumerate_southwest supports 1 <= n <= 5");
  Arrangement full = Arrangement::full(n);
  const auto& all = full.hyperplanes();
  std::vector<Arrangement> out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Hyperplane> hs;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (1u << k)) hs.push_back(all[k]);
    }
    Arrangement a(n, std::move(hs));
    if (!is_southwest(a)) continue;
    if (essential_only && !is_essential(a)) continue;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config) {
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& [suite, fn] : registry()) {
      auto part = execute(fn(config), config);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return execute(fn(config), config);
  }
  throw DomainError("unknown suite '" + name + "'");
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back({{"check", r.check},
                     {"n", r.n},
                     {"instance", r.instance},
                     {"expected", r.expected},
                     {"actual", r.actual},
                     {"pass", r.pass},
                     {"ms", r.ms}});
    }
    out << arr.dump(2) << "\n";
    return;
  }
  out << "check,n,instance,expected,actual,pass,ms\n";
  for (const auto& r : reports) {
    out << csv_field(r.check) << ',' << r.n << ',' << csv_field(r.instance) << ',' << csv_field(r.expected) << ','
        << csv_field(r.actual) << ',' << (r.pass ? "true" : "false") << ',' << r.ms << '\n';
  }
}

void emit_report(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_report(reports, format, file);
  file.flush();
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

std::string describe_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << to_string(a) << "\n";
  os << "hyperplanes: " << a.size() << "\n";
  bool sw = is_southwest(a);
  os << "southwest: " << (sw ? "yes" : "no") << "\n";
  os << "essential: " << (is_essential(a) ? "yes" : "no") << "\n";
  if (sw) os << "h-sequence: " << join_ints(h_sequence(a)) << "\n";
  if (a.n() <= 7) os << "characteristic polynomial: " << to_string(characteristic_polynomial(a)) << "\n";
  os << "\n" << render_poset(a);
  return os.str();
}

}  // namespace supercoinv
