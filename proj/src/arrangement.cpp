#include "supercoinv/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "supercoinv/errors.hpp"

namespace supercoinv {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVars) throw DimensionError("ambient dimension out of range: " + std::to_string(n));
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Adjacency matrix of the graph on {0..n}.
std::vector<std::vector<bool>> graph(const Arrangement& a) {
  const auto m = static_cast<std::size_t>(a.n()) + 1;
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (const auto& h : a.hyperplanes()) {
    adj[static_cast<std::size_t>(h.i)][static_cast<std::size_t>(h.j)] = true;
    adj[static_cast<std::size_t>(h.j)][static_cast<std::size_t>(h.i)] = true;
  }
  return adj;
}

// Calls visit(label, nblocks) for every set partition of {0..m-1}.
void for_each_set_partition(int m, const std::function<void(const std::vector<std::uint8_t>&, int)>& visit) {
  std::vector<std::uint8_t> label(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int nblocks) {
    if (pos == m) {
      visit(label, nblocks);
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      label[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(b);
      rec(pos + 1, std::max(nblocks, b + 1));
    }
  };
  rec(1, 1);  // element 0 always opens block 0
}

void canonicalize(std::vector<std::uint8_t>& label) {
  std::vector<int> remap(label.size(), -1);
  int next = 0;
  for (auto& l : label) {
    if (remap[l] < 0) remap[l] = next++;
    l = static_cast<std::uint8_t>(remap[l]);
  }
}

}  // namespace

Polynomial linear_form(const Hyperplane& h, int n) {
  if (h.i < 0 || h.i >= h.j || h.j > n) throw IndexError("hyperplane outside the ambient space");
  Polynomial out = Polynomial::variable(n, h.j);
  if (h.i == 0) return out;
  return Polynomial::variable(n, h.i) - out;
}

// ---------------------------------------------------------------------------

Arrangement::Arrangement(int n, std::vector<Hyperplane> hyperplanes) : n_(n), hyperplanes_(std::move(hyperplanes)) {
  check_n(n);
  for (const auto& h : hyperplanes_) {
    if (h.i < 0 || h.i >= h.j || h.j > n) {
      throw IndexError("hyperplane " + std::to_string(h.i) + "-" + std::to_string(h.j) + " outside n=" +
                       std::to_string(n));
    }
  }
  std::sort(hyperplanes_.begin(), hyperplanes_.end());
  hyperplanes_.erase(std::unique(hyperplanes_.begin(), hyperplanes_.end()), hyperplanes_.end());
}

Arrangement Arrangement::full(int n) {
  std::vector<Hyperplane> hs;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) hs.push_back({i, j});
  return Arrangement(n, hs);
}

Arrangement Arrangement::braid(int n) {
  std::vector<Hyperplane> hs;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) hs.push_back({i, j});
  return Arrangement(n, hs);
}

Arrangement Arrangement::parse(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("arrangement: missing ';'");
  std::string_view head = trim(text.substr(0, semi));
  std::string_view body = trim(text.substr(semi + 1));
  if (head.substr(0, 2) != "n=") throw ParseError("arrangement: expected 'n=' prefix");
  int n = parse_int(head.substr(2), "dimension");
  if (body.substr(0, 2) != "H:") throw ParseError("arrangement: expected 'H:' list");
  body.remove_prefix(2);
  std::vector<Hyperplane> hs;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("arrangement: expected i-j, got '" + std::string(item) + "'");
    hs.push_back({parse_int(item.substr(0, dash), "index"), parse_int(item.substr(dash + 1), "index")});
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("arrangement: trailing comma");
  }
  try {
    return Arrangement(n, hs);
  } catch (const std::exception& e) {
    throw ParseError(std::string("arrangement: ") + e.what());
  }
}

bool Arrangement::contains(const Hyperplane& h) const {
  return std::binary_search(hyperplanes_.begin(), hyperplanes_.end(), h);
}

std::vector<Polynomial> Arrangement::linear_forms() const {
  std::vector<Polynomial> out;
  out.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) out.push_back(linear_form(h, n_));
  return out;
}

std::string to_string(const Arrangement& a) {
  std::string out = "n=" + std::to_string(a.n()) + "; H:";
  bool first = true;
  for (const auto& h : a.hyperplanes()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(h.i) + "-" + std::to_string(h.j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// index sets and staircases

IndexSet make_index_set(std::vector<int> elements, int n) {
  for (int e : elements) {
    if (e < 1 || e > n) throw IndexError("index " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool contains(const IndexSet& J, int i) { return std::find(J.begin(), J.end(), i) != J.end(); }

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet J;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (n - i))) J.push_back(i);
    }
    out.push_back(J);
  }
  return out;
}

std::string to_string(const IndexSet& J) {
  std::string out = "{";
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(J[k]);
  }
  return out + "}";
}

std::vector<int> staircase(const IndexSet& J0, int n) {
  check_n(n);
  IndexSet J = make_index_set(J0, n);
  std::vector<int> st(static_cast<std::size_t>(n));
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    prev += contains(J, i) ? 0 : 1;
    st[static_cast<std::size_t>(i - 1)] = prev;
  }
  return st;
}

std::vector<Monomial> staircase_monomials(const IndexSet& J, int n) {
  std::vector<int> st = staircase(J, n);
  std::vector<Monomial> out;
  if (std::find(st.begin(), st.end(), 0) != st.end()) return out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.emplace_back(std::span<const int>(a));
      return;
    }
    for (int e = st[static_cast<std::size_t>(pos)] - 1; e >= 0; --e) {
      a[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0);
  return out;  // nested descending loops already give lex-descending order
}

// ---------------------------------------------------------------------------

bool is_southwest(const Arrangement& a) {
  for (const auto& h : a.hyperplanes()) {
    if (h.j > h.i + 1 && !a.contains(h.i, h.j - 1)) return false;
  }
  return true;
}

std::vector<int> h_sequence(const Arrangement& a) {
  std::vector<int> h(static_cast<std::size_t>(a.n()), 0);
  for (const auto& hp : a.hyperplanes()) ++h[static_cast<std::size_t>(hp.j - 1)];
  return h;
}

Arrangement build_AJ(const IndexSet& J0, int n) {
  check_n(n);
  IndexSet J = make_index_set(J0, n);
  std::vector<Hyperplane> hs;
  for (int j = 1; j <= n; ++j) {
    if (contains(J, j)) continue;
    hs.push_back({0, j});
    for (int i = j + 1; i <= n; ++i) hs.push_back({j, i});
  }
  return Arrangement(n, hs);
}

Arrangement delete_hyperplane(const Arrangement& a, const Hyperplane& h) {
  if (!a.contains(h)) {
    throw DomainError("hyperplane " + std::to_string(h.i) + "-" + std::to_string(h.j) + " not in the arrangement");
  }
  std::vector<Hyperplane> hs;
  for (const auto& g : a.hyperplanes()) {
    if (!(g == h)) hs.push_back(g);
  }
  return Arrangement(a.n(), hs);
}

Arrangement restrict_coord(const Arrangement& a, int p) {
  if (!a.contains(0, p)) throw DomainError("restriction needs H_" + std::to_string(p) + " in the arrangement");
  if (a.n() == 1) throw DimensionError("cannot restrict a one-dimensional arrangement");
  auto down = [p](int k) { return k > p ? k - 1 : k; };
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    if (h.i == 0 && h.j == p) continue;
    if (h.j == p) {
      hs.push_back({0, down(h.i)});
    } else if (h.i == p) {
      hs.push_back({0, down(h.j)});
    } else {
      hs.push_back({down(h.i), down(h.j)});
    }
  }
  return Arrangement(a.n() - 1, hs);
}

std::optional<int> max_coordinate(const Arrangement& a) {
  std::optional<int> best;
  for (const auto& h : a.hyperplanes()) {
    if (h.i == 0) best = h.j;
  }
  return best;
}

// ---------------------------------------------------------------------------
// polynomials

Polynomial defining_polynomial(const Arrangement& a) {
  return normalize_lex_leading(product(a.n(), a.linear_forms()));
}

Polynomial quotient_polynomial(const Arrangement& a, const Arrangement& b) {
  if (a.n() != b.n()) throw DimensionError("quotient_polynomial: different ambient dimensions");
  std::vector<Polynomial> forms;
  for (const auto& h : b.hyperplanes()) {
    if (!a.contains(h)) throw DomainError("quotient_polynomial: B is not a subarrangement of A");
  }
  for (const auto& h : a.hyperplanes()) {
    if (!b.contains(h)) forms.push_back(linear_form(h, a.n()));
  }
  return product(a.n(), forms);
}

Polynomial f_poly(const IndexSet& J0, int n) {
  check_n(n);
  IndexSet J = make_index_set(J0, n);
  std::vector<Polynomial> forms;
  for (int j : J) {
    forms.push_back(linear_form({0, j}, n));
    for (int i = j + 1; i <= n; ++i) forms.push_back(linear_form({j, i}, n));
  }
  return product(n, forms);
}

Polynomial ftilde_poly(const IndexSet& J0, int n) {
  check_n(n);
  IndexSet J = make_index_set(J0, n);
  std::vector<Polynomial> forms;
  for (int j : J) {
    for (int i = j + 1; i <= n; ++i) forms.push_back(linear_form({j, i}, n));
  }
  return product(n, forms);
}

Polynomial beta_poly(const Arrangement& a) {
  std::vector<Polynomial> forms;
  const Arrangement full = Arrangement::full(a.n());
  for (const auto& h : full.hyperplanes()) {
    if (!a.contains(h)) forms.push_back(linear_form(h, a.n()));
  }
  return product(a.n(), forms);
}

// ---------------------------------------------------------------------------
// lattice

std::vector<std::vector<int>> Flat::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nblocks));
  for (std::size_t k = 0; k < label.size(); ++k) out[label[k]].push_back(static_cast<int>(k));
  return out;
}

bool Flat::refines(const Flat& other) const {
  std::vector<int> image(static_cast<std::size_t>(nblocks), -1);
  for (std::size_t k = 0; k < label.size(); ++k) {
    int& im = image[label[k]];
    if (im < 0) {
      im = other.label[k];
    } else if (im != other.label[k]) {
      return false;
    }
  }
  return true;
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
  if (a.n() > 7) throw ResourceLimitError("intersection lattice limited to n <= 7");
  const std::size_t m = static_cast<std::size_t>(a.n()) + 1;
  Flat bottom;
  bottom.label.resize(m);
  for (std::size_t k = 0; k < m; ++k) bottom.label[k] = static_cast<std::uint8_t>(k);
  bottom.nblocks = static_cast<int>(m);

  std::map<std::vector<std::uint8_t>, std::size_t> index;
  std::vector<Flat> flats{bottom};
  index.emplace(bottom.label, 0);
  for (std::size_t cur = 0; cur < flats.size(); ++cur) {
    for (const auto& h : a.hyperplanes()) {
      const Flat& f = flats[cur];
      std::uint8_t bi = f.label[static_cast<std::size_t>(h.i)], bj = f.label[static_cast<std::size_t>(h.j)];
      if (bi == bj) continue;
      Flat g = f;
      for (auto& l : g.label) {
        if (l == bj) l = bi;
      }
      canonicalize(g.label);
      g.nblocks = f.nblocks - 1;
      if (index.emplace(g.label, flats.size()).second) flats.push_back(std::move(g));
    }
  }
  std::stable_sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) { return x.nblocks > y.nblocks; });

  IntersectionLattice out;
  out.mobius.assign(flats.size(), 0);
  out.mobius[0] = 1;
  for (std::size_t x = 1; x < flats.size(); ++x) {
    long s = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (flats[y].nblocks > flats[x].nblocks && flats[y].refines(flats[x])) s += out.mobius[y];
    }
    out.mobius[x] = -s;
  }
  out.flats = std::move(flats);
  return out;
}

IntPoly characteristic_polynomial(const IntersectionLattice& lattice, int n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < lattice.flats.size(); ++k) {
    p[static_cast<std::size_t>(lattice.flats[k].dimension())] += lattice.mobius[k];
  }
  return p;
}

IntPoly characteristic_polynomial(const Arrangement& a) {
  return characteristic_polynomial(intersection_lattice(a), a.n());
}

IntPoly poly_from_roots(const std::vector<int>& roots) {
  IntPoly p{1};
  for (int r : roots) {
    IntPoly next(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

std::int64_t evaluate(const IntPoly& p, std::int64_t t) {
  std::int64_t v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

std::string to_string(const IntPoly& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    std::int64_t c = p[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) out += std::to_string(a);
    if (k > 0) {
      if (k == 0 || a != 1) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::int64_t count_points_mod(const Arrangement& a, std::int64_t q) {
  if (q < 2) throw DomainError("field size must be at least 2");
  auto adj = graph(a);
  const int m = a.n() + 1;
  std::int64_t total = 0;
  for_each_set_partition(m, [&](const std::vector<std::uint8_t>& label, int nblocks) {
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v)
        if (label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)] &&
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
          return;
    // block 0 is pinned to 0, the others take distinct nonzero values
    std::int64_t ways = 1;
    for (int k = 0; k < nblocks - 1; ++k) ways *= (q - 1 - k);
    total += ways;
  });
  return total;
}

std::int64_t next_prime_above(std::int64_t m) {
  for (std::int64_t c = std::max<std::int64_t>(m + 1, 2);; ++c) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) return c;
  }
}

std::int64_t default_prime(const Arrangement& a) {
  return next_prime_above(static_cast<std::int64_t>(a.n()) * static_cast<std::int64_t>(a.size()));
}

bool is_chordal(const Arrangement& a) {
  auto adj = graph(a);
  const std::size_t m = adj.size();
  // maximum cardinality search; its reverse is a perfect elimination order iff chordal
  std::vector<int> weight(m, 0);
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> visit;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (!seen[v] && (best == m || weight[v] > weight[best])) best = v;
    }
    seen[best] = true;
    visit.push_back(best);
    for (std::size_t v = 0; v < m; ++v) {
      if (adj[best][v] && !seen[v]) ++weight[v];
    }
  }
  // earlier-visited neighbours of each vertex must form a clique
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::size_t> earlier;
    for (std::size_t l = 0; l < k; ++l) {
      if (adj[visit[k]][visit[l]]) earlier.push_back(visit[l]);
    }
    for (std::size_t x = 0; x < earlier.size(); ++x)
      for (std::size_t y = x + 1; y < earlier.size(); ++y)
        if (!adj[earlier[x]][earlier[y]]) return false;
  }
  return true;
}

bool is_essential(const Arrangement& a) {
  auto adj = graph(a);
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string render_poset(const Arrangement& a) {
  const int n = a.n();
  std::ostringstream os;
  for (int r = n - 1; r >= 0; --r) {
    std::string line(static_cast<std::size_t>(2 * (2 * n - 2) + 1), ' ');
    std::vector<std::string> cells(line.size(), " ");
    for (int i = 0; i + r + 1 <= n; ++i) {
      int x = r + 2 * i;
      cells[static_cast<std::size_t>(2 * x)] = a.contains(i, i + r + 1) ? "●" : "○";
    }
    std::string text;
    for (const auto& c : cells) text += c;
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  }
  return os.str();
}

}  // namespace supercoinv
