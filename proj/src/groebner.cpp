#include "supercoinv/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "supercoinv/errors.hpp"

namespace supercoinv {

namespace {

using OPoly = std::vector<Term>;  // terms strictly decreasing in the active order

OPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OPoly out(p.terms().begin(), p.terms().end());
  if (ord.kind != MonomialOrder::Kind::GrevLex) {
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  }
  return out;
}

void make_monic(OPoly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// f[from..] - c * m * g[gfrom..]
OPoly sub_scaled(const OPoly& f, std::size_t from, const Rational& c, const Monomial& m, const OPoly& g,
                 std::size_t gfrom, const MonomialOrder& ord) {
  OPoly out;
  out.reserve(f.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    int cmp = i == f.size() ? -1 : ord.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, -(c * g[j].coeff)});
      ++j;
    } else {
      Rational v = f[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back(Term{gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const OPoly* find_divisor(const Monomial& m, const std::vector<const OPoly*>& divisors) {
  for (const OPoly* g : divisors) {
    if (g->front().monomial.divides(m)) return g;
  }
  return nullptr;
}

// Complete reduction; divisors must be monic.
OPoly reduce_full(OPoly f, const std::vector<const OPoly*>& divisors, const MonomialOrder& ord) {
  OPoly rem;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& t = f[pos];
    const OPoly* g = find_divisor(t.monomial, divisors);
    if (g == nullptr) {
      rem.push_back(t);
      ++pos;
      continue;
    }
    Rational c = t.coeff;
    Monomial shift = t.monomial / g->front().monomial;
    f = sub_scaled(f, pos + 1, c, shift, *g, 1, ord);
    pos = 0;
  }
  return rem;
}

OPoly s_polynomial(const OPoly& a, const OPoly& b, const Monomial& l, const MonomialOrder& ord) {
  // both monic: (l/LM(a)) a - (l/LM(b)) b
  Monomial ma = l / a.front().monomial;
  Monomial mb = l / b.front().monomial;
  OPoly scaled_a;
  scaled_a.reserve(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) scaled_a.push_back(Term{a[k].monomial * ma, a[k].coeff});
  return sub_scaled(scaled_a, 0, Rational(1), mb, b, 1, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(MonomialOrder ord, std::size_t term_limit) : ord_(ord), term_limit_(term_limit) {}

  // Returns false when the ideal turned out to be the unit ideal.
  bool add(OPoly h, int sugar) {
    make_monic(h);
    if (h.front().monomial.is_one()) {
      unit_ = true;
      return false;
    }
    terms_ += h.size();
    if (term_limit_ != 0 && terms_ > term_limit_) {
      throw ResourceLimitError("Groebner computation exceeded SUPERCOINV_GB_TERM_LIMIT");
    }
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    update(polys_.size() - 1);
    return true;
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      // sugar for degree-compatible orders, the normal strategy under lex
      const bool normal = ord_.kind == MonomialOrder::Kind::Lex;
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (!normal && a.sugar != b.sugar) return a.sugar < b.sugar;
        return ord_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();

      OPoly s = s_polynomial(polys_[p.i], polys_[p.j], p.lcm, ord_);
      OPoly h = reduce_full(std::move(s), active_divisors(), ord_);
      if (!h.empty()) {
        if (!add(std::move(h), p.sugar)) return;
      }
    }
  }

  bool unit() const { return unit_; }

  OPoly reduce(OPoly f) const { return reduce_full(std::move(f), active_divisors(), ord_); }

  std::vector<OPoly> reduced_basis() const {
    if (unit_) return {OPoly{Term{Monomial{}, Rational(1)}}};
    std::vector<const OPoly*> minimal;
    for (std::size_t k : active_) minimal.push_back(&polys_[k]);
    std::sort(minimal.begin(), minimal.end(), [&](const OPoly* a, const OPoly* b) {
      return ord_.compare(a->front().monomial, b->front().monomial) < 0;
    });
    std::vector<OPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const OPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      OPoly tail(minimal[k]->begin() + 1, minimal[k]->end());
      OPoly red = reduce_full(std::move(tail), others, ord_);
      OPoly full;
      full.reserve(red.size() + 1);
      full.push_back(minimal[k]->front());
      for (auto& t : red) full.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    return out;
  }

 private:
  std::vector<const OPoly*> active_divisors() const {
    std::vector<const OPoly*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  const Monomial& lead(std::size_t k) const { return polys_[k].front().monomial; }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(lead(i), lead(j));
    int si = sugar_[i] + l.degree() - lead(i).degree();
    int sj = sugar_[j] + l.degree() - lead(j).degree();
    return Pair{i, j, l, std::max(si, sj)};
  }

  // Gebauer-Moeller update for the freshly added polynomial h.
  void update(std::size_t h) {
    std::vector<Pair> c;
    for (std::size_t g : active_) c.push_back(make_pair(h, g));

    std::vector<Pair> d;
    while (!c.empty()) {
      Pair p = c.front();
      c.erase(c.begin());
      bool keep = lead(h).coprime(lead(p.j));
      if (!keep) {
        keep = true;
        for (const auto& q : c) {
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const auto& q : d) {
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) d.push_back(p);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lead(h).divides(p.lcm) && lcm(lead(p.i), lead(h)) != p.lcm && lcm(lead(h), lead(p.j)) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& p : d) {
      if (!lead(p.i).coprime(lead(p.j))) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      if (!lead(h).divides(lead(g))) still.push_back(g);
    }
    still.push_back(h);
    active_ = std::move(still);
  }

  MonomialOrder ord_;
  std::size_t term_limit_;
  std::size_t terms_ = 0;
  std::vector<OPoly> polys_;
  std::vector<int> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

void enumerate_standard(const std::vector<Monomial>& leads, int nvars, int cap, int pos, Monomial& current,
                        std::vector<Monomial>& out) {
  if (pos == nvars) {
    out.push_back(current);
    return;
  }
  int base = current.degree();
  for (int e = 0; base + e <= cap; ++e) {
    current.set(pos, e);
    bool divisible = false;
    for (const auto& l : leads) {
      if (l.divides(current)) {
        divisible = true;
        break;
      }
    }
    if (divisible) break;
    enumerate_standard(leads, nvars, cap, pos + 1, current, out);
  }
  current.set(pos, 0);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::GrevLex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::EliminateLast: {
      int last = nvars - 1;
      if (a[last] != b[last]) return a[last] > b[last] ? 1 : -1;
      return grevlex_compare(a, b);
    }
  }
  return 0;
}

const char* to_string(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::GrevLex:
      return "grevlex";
    case MonomialOrder::Kind::Lex:
      return "lex";
    case MonomialOrder::Kind::EliminateLast:
      return "elim";
  }
  return "?";
}

std::size_t groebner_term_limit() {
  const char* env = std::getenv("SUPERCOINV_GB_TERM_LIMIT");
  if (env == nullptr || *env == '\0') return 0;
  return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(int nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw DimensionError("ideal generator in the wrong ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis Ideal::groebner(MonomialOrder order) && {
  const Ideal& self = *this;
  return self.groebner(order);
}

const GroebnerBasis& Ideal::groebner(MonomialOrder order) const& {
  int key = static_cast<int>(order.kind) * 100 + order.nvars;
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->by_order.find(key); it != cache_->by_order.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(groebner_basis(*this, order));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->by_order.emplace(key, std::move(gb));
  return *it->second;
}

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> reduced)
    : nvars_(nvars), order_(order), basis_(std::move(reduced)) {
  for (const auto& p : basis_) {
    ordered_.push_back(to_ordered(p, order_));
    leads_.push_back(ordered_.back().front().monomial);
  }
}

bool GroebnerBasis::is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }

bool GroebnerBasis::is_artinian() const {
  for (int k = 0; k < nvars_; ++k) {
    bool found = false;
    for (const auto& l : leads_) {
      if (l.degree() > 0 && l.degree() == l[k]) {
        found = true;
        break;
      }
      if (l.is_one()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw DimensionError("normal_form: polynomial in the wrong ring");
  std::vector<const OPoly*> divisors;
  for (const auto& g : ordered_) divisors.push_back(&g);
  OPoly r = reduce_full(to_ordered(f, order_), divisors, order_);
  return Polynomial(nvars_, std::move(r));
}

bool GroebnerBasis::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

StandardMonomials GroebnerBasis::standard_monomials(int degree_cap) const {
  StandardMonomials out;
  if (is_unit()) {
    out.complete = true;
    return out;
  }
  Monomial current;
  std::vector<Monomial> found;
  enumerate_standard(leads_, nvars_, degree_cap + 1, 0, current, found);
  bool overflow = false;
  for (auto& m : found) {
    if (m.degree() > degree_cap) {
      overflow = true;
    } else {
      out.monomials.push_back(m);
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  out.complete = is_artinian() && !overflow;
  return out;
}

long GroebnerBasis::quotient_dimension() const {
  if (is_unit()) return 0;
  if (!is_artinian()) return -1;
  int bound = 0;
  for (int k = 0; k < nvars_; ++k) {
    int best = -1;
    for (const auto& l : leads_) {
      if (l.degree() > 0 && l.degree() == l[k] && (best < 0 || l[k] < best)) best = l[k];
    }
    bound += best - 1;
  }
  return static_cast<long>(standard_monomials(bound).monomials.size());
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.basis_ == b.basis_;
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  const int n = ideal.nvars();
  if (order.kind == MonomialOrder::Kind::EliminateLast && order.nvars != n) {
    throw DimensionError("elimination order built for a different ring");
  }
  Buchberger engine(order, groebner_term_limit());
  for (const auto& g : ideal.generators()) {
    OPoly r = engine.reduce(to_ordered(g, order));
    if (r.empty()) continue;
    if (!engine.add(std::move(r), g.degree())) break;
  }
  engine.run();
  std::vector<Polynomial> reduced;
  for (auto& p : engine.reduced_basis()) reduced.emplace_back(n, std::move(p));
  return GroebnerBasis(n, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, MonomialOrder order) {
  return ideal.groebner(order).normal_form(f);
}

StandardMonomials standard_monomials(const Ideal& ideal, int degree_cap, MonomialOrder order) {
  return ideal.groebner(order).standard_monomials(degree_cap);
}

// ---------------------------------------------------------------------------
// Hilbert series

long HilbertSeries::total() const {
  long s = 0;
  for (long c : coefficients) s += c;
  return s;
}

bool HilbertSeries::is_palindromic() const {
  std::size_t m = coefficients.size();
  for (std::size_t d = 0; d < m; ++d) {
    if (coefficients[d] != coefficients[m - 1 - d]) return false;
  }
  return true;
}

HilbertSeries complete_intersection_series(const std::vector<int>& degrees) {
  HilbertSeries out;
  out.complete = true;
  out.coefficients = {1};
  for (int d : degrees) {
    if (d <= 0) {
      out.coefficients.clear();
      return out;
    }
    std::vector<long> next(out.coefficients.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += out.coefficients[i];
    }
    out.coefficients = std::move(next);
  }
  return out;
}

HilbertSeries complete_intersection_series(const std::vector<int>& degrees, int nvars, int cap) {
  if (static_cast<int>(degrees.size()) == nvars) return complete_intersection_series(degrees);
  HilbertSeries base = complete_intersection_series(degrees);
  HilbertSeries out;
  out.complete = false;
  out.coefficients.assign(static_cast<std::size_t>(cap) + 1, 0);
  for (std::size_t i = 0; i < base.coefficients.size() && i <= static_cast<std::size_t>(cap); ++i) {
    out.coefficients[i] = base.coefficients[i];
  }
  // multiply by 1/(1-q) once per missing generator
  for (int extra = static_cast<int>(degrees.size()); extra < nvars; ++extra) {
    for (std::size_t i = 1; i < out.coefficients.size(); ++i) out.coefficients[i] += out.coefficients[i - 1];
  }
  return out;
}

HilbertSeries hilbert_series(const Ideal& ideal, int degree_cap) {
  if (!ideal.is_homogeneous()) throw DomainError("hilbert_series needs homogeneous generators");
  StandardMonomials sm = standard_monomials(ideal, degree_cap);
  HilbertSeries out;
  out.complete = sm.complete;
  out.coefficients.assign(static_cast<std::size_t>(degree_cap) + 1, 0);
  for (const auto& m : sm.monomials) ++out.coefficients[static_cast<std::size_t>(m.degree())];
  if (out.complete) {
    while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal operations

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.nvars() != ideal.nvars()) throw DimensionError("colon: polynomial in the wrong ring");
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  const int n = ideal.nvars();
  if (f.is_constant()) return ideal;
  if (n + 1 > kMaxVars) throw DimensionError("colon: no room for the elimination variable");

  const int m = n + 1;
  Polynomial t = Polynomial::variable(m, m);
  Polynomial fe = extend_variables(f, m);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * extend_variables(g, m));
  gens.push_back((Polynomial::constant(m, 1) - t) * fe);
  GroebnerBasis gb = groebner_basis(Ideal(m, std::move(gens)), MonomialOrder::eliminate_last(m));

  std::vector<Polynomial> quotients;
  for (const auto& g : gb.polynomials()) {
    bool has_t = false;
    for (const auto& term : g.terms()) {
      if (term.monomial[m - 1] != 0) {
        has_t = true;
        break;
      }
    }
    if (has_t) continue;
    Polynomial gn = truncate_variables(g, n);
    auto q = exact_quotient(gn, f);
    if (!q) throw std::logic_error("colon: intersection element not divisible by f");
    quotients.push_back(std::move(*q));
  }
  return Ideal(n, std::move(quotients));
}

Ideal colon_iterated(const Ideal& ideal, const std::vector<Polynomial>& factors) {
  Ideal current = ideal;
  for (const auto& f : factors) current = colon(current, f);
  return current;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("ideal_sum: different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.nvars(), std::move(gens));
}

bool ideal_equal(const Ideal& a, const Ideal& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw DimensionError("ideal_equal: different rings");
  return a.groebner(order) == b.groebner(order);
}

bool ideal_contains(const Ideal& b, const Ideal& a, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw DimensionError("ideal_contains: different rings");
  const GroebnerBasis& gb = b.groebner(order);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

bool is_regular_sequence(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw DomainError("is_regular_sequence: empty sequence");
  const int n = fs.front().nvars();
  if (static_cast<int>(fs.size()) != n) {
    throw DomainError("is_regular_sequence: need exactly " + std::to_string(n) + " polynomials");
  }
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DimensionError("is_regular_sequence: mixed rings");
    if (!f.is_homogeneous() || f.degree() < 1) {
      throw DomainError("is_regular_sequence: inputs must be homogeneous of positive degree");
    }
  }
  GroebnerBasis gb = Ideal(n, fs).groebner();
  return !gb.is_unit() && gb.is_artinian();
}

}  // namespace supercoinv
