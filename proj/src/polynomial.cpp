#include "supercoinv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>

#include "supercoinv/detail/term_parser.hpp"
#include "supercoinv/errors.hpp"

namespace supercoinv {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw DimensionError("variable count " + std::to_string(nvars) + " outside [0, " +
                         std::to_string(kMaxVars) + "]");
  }
}

void check_index(int nvars, int i) {
  if (i < 1 || i > nvars) {
    throw IndexError("variable index " + std::to_string(i) + " outside [1, " + std::to_string(nvars) + "]");
  }
}

bool term_before(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

// Sorts and merges; the input may contain duplicates and zeros.
std::vector<Term> canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// a + sign * b for canonical term lists.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = 0;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grevlex_compare(a[i].monomial, b[j].monomial);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{b[j].monomial, sign > 0 ? Rational(b[j].coeff) : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// b!/(b-a)! for a <= b
Rational falling_factorial(int b, int a) {
  Rational r = 1;
  for (int k = 0; k < a; ++k) r *= (b - k);
  return r;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars) {
  check_nvars(nvars);
  for (const auto& t : terms) {
    if (t.monomial.support_end() >= nvars) throw DimensionError("monomial uses a variable beyond the ring");
  }
  terms_ = canonical(std::move(terms));
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  check_index(nvars, i);
  Polynomial p(nvars);
  p.terms_.push_back(Term{Monomial::variable(i - 1), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
  return Polynomial(nvars, {Term{m, c}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().monomial.degree();
  return terms_.back().monomial.degree() == d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grevlex_compare(t.monomial, key) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError("polynomials live in rings with " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = multiply(*this, other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative exponent");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.nvars());
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      auto [it, fresh] = acc.try_emplace(a.monomial * b.monomial, 0);
      it->second += a.coeff * b.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  return Polynomial(p.nvars(), std::move(terms));
}

Polynomial product(int nvars, std::span<const Polynomial> factors) {
  Polynomial r = Polynomial::constant(nvars, 1);
  for (const auto& f : factors) r *= f;
  return r;
}

Polynomial partial(const Polynomial& p, int i) {
  check_index(p.nvars(), i);
  int pos = i - 1;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    int e = t.monomial[pos];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(pos, e - 1);
    terms.push_back(Term{m, t.coeff * e});
  }
  return Polynomial(p.nvars(), std::move(terms));
}

Polynomial odot(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> terms;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      if (!a.monomial.divides(b.monomial)) continue;
      Rational c = a.coeff * b.coeff;
      for (int k = 0; k < f.nvars(); ++k) c *= falling_factorial(b.monomial[k], a.monomial[k]);
      terms.push_back(Term{b.monomial / a.monomial, std::move(c)});
    }
  }
  return Polynomial(f.nvars(), std::move(terms));
}

Polynomial vandermonde(int n) {
  if (n < 1) throw DomainError("vandermonde needs n >= 1");
  Polynomial r = Polynomial::constant(n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) r *= Polynomial::variable(n, i) - Polynomial::variable(n, j);
  }
  return r;
}

Polynomial specialize(const Polynomial& p, int i, std::optional<int> target) {
  check_index(p.nvars(), i);
  if (target) check_index(p.nvars(), *target);
  int pos = i - 1;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    int e = t.monomial[pos];
    if (e == 0) {
      terms.push_back(t);
      continue;
    }
    if (!target) continue;
    Monomial m = t.monomial;
    m.set(pos, 0);
    int tpos = *target - 1;
    m.set(tpos, m[tpos] + e);
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial(p.nvars(), std::move(terms));
}

Polynomial HomogeneousDecomposition::sum(int nvars) const {
  Polynomial r(nvars);
  for (const auto& [d, piece] : pieces) r += piece;
  return r;
}

HomogeneousDecomposition homogeneous_decomposition(const Polynomial& p) {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) buckets[t.monomial.degree()].push_back(t);
  HomogeneousDecomposition out;
  for (auto& [d, terms] : buckets) out.pieces.emplace(d, Polynomial(p.nvars(), std::move(terms)));
  return out;
}

Polynomial homogeneous_component(const Polynomial& p, int degree) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() == degree) terms.push_back(t);
  }
  return Polynomial(p.nvars(), std::move(terms));
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& f) {
  require_same_ring(p, f);
  if (f.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = f.leading_term();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (lead.monomial.divides(t.monomial)) {
      Term q{t.monomial / lead.monomial, t.coeff / lead.coeff};
      quotient.push_back(q);
      rest -= Polynomial(p.nvars(), {q}) * f;
    } else {
      remainder.push_back(t);
      rest -= Polynomial(p.nvars(), {t});
    }
  }
  return {Polynomial(p.nvars(), std::move(quotient)), Polynomial(p.nvars(), std::move(remainder))};
}

std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& f) {
  auto [q, r] = divide(p, f);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool divides(const Polynomial& f, const Polynomial& p) { return exact_quotient(p, f).has_value(); }

Polynomial extend_variables(const Polynomial& p, int nvars) {
  if (nvars < p.nvars()) throw DimensionError("extend_variables cannot shrink the ring");
  return Polynomial(nvars, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

Polynomial truncate_variables(const Polynomial& p, int nvars) {
  if (nvars > p.nvars()) throw DimensionError("truncate_variables cannot grow the ring");
  return Polynomial(nvars, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

Polynomial remove_variable(const Polynomial& p, int i) {
  check_index(p.nvars(), i);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.monomial[i - 1] != 0) throw DomainError("remove_variable: x" + std::to_string(i) + " occurs");
    Monomial m;
    for (int k = 0, out = 0; k < p.nvars(); ++k) {
      if (k == i - 1) continue;
      m.set(out++, t.monomial[k]);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial(p.nvars() - 1, std::move(terms));
}

Polynomial insert_variable(const Polynomial& p, int i) {
  int n = p.nvars() + 1;
  check_index(n, i);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int k = 0, out = 0; k < p.nvars(); ++k, ++out) {
      if (out == i - 1) ++out;
      m.set(out, t.monomial[k]);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial(n, std::move(terms));
}

Polynomial normalize_lex_leading(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (lex_compare(t.monomial, best->monomial) > 0) best = &t;
  }
  Rational inv = 1 / best->coeff;
  return p * inv;
}

std::string rational_to_string(const Rational& c) { return c.get_str(); }

std::string monomial_to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int k = 0; k < kMaxVars; ++k) {
    int e = m[k];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.monomial.is_one()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += monomial_to_string(t.monomial);
    } else {
      out += rational_to_string(mag) + '*' + monomial_to_string(t.monomial);
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, int nvars) {
  check_nvars(nvars);
  std::vector<Term> terms;
  for (auto& parsed : detail::parse_terms(text, nvars)) {
    if (!parsed.fermionic.empty()) throw ParseError("fermionic factor in a polynomial");
    terms.push_back(Term{parsed.bosonic, std::move(parsed.coeff)});
  }
  return Polynomial(nvars, std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace supercoinv
