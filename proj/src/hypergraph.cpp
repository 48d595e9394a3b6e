#include "ordsplit/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ordsplit/combinatorics.hpp"

namespace ordsplit {

namespace {

std::string describe(const Violation& v) {
  std::string s = v.what;
  if (!v.edge.empty()) s += " at edge " + std::to_string(v.edge_index) + " " + to_string(v.edge);
  return s;
}

}  // namespace

InvalidHypergraph::InvalidHypergraph(const Violation& v)
    : std::invalid_argument(describe(v)), violation(v) {}

OrderedHypergraph::OrderedHypergraph(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 1 || r > n) {
    throw InvalidHypergraph({"uniformity out of range", 0, {}});
  }
}

OrderedHypergraph OrderedHypergraph::unchecked(int n, int r, const std::vector<Edge>& edges) {
  OrderedHypergraph h;
  h.n_ = n;
  h.r_ = r;
  for (const auto& e : edges) {
    // The flat layout cannot represent an edge of the wrong size.
    if (static_cast<int>(e.size()) != r) {
      throw InvalidHypergraph({"edge has wrong size", 0, e});
    }
    h.flat_.insert(h.flat_.end(), e.begin(), e.end());
  }
  return h;
}

OrderedHypergraph OrderedHypergraph::from_edges(int n, int r, const std::vector<Edge>& edges) {
  auto h = unchecked(n, r, edges);
  h.sort_edges();
  if (auto v = validate(h)) throw InvalidHypergraph(*v);
  return h;
}

OrderedHypergraph OrderedHypergraph::from_flat(int n, int r, std::vector<Vertex> flat) {
  OrderedHypergraph h;
  h.n_ = n;
  h.r_ = r;
  if (r < 1 || flat.size() % r != 0) throw InvalidHypergraph({"edge has wrong size", 0, {}});
  h.flat_ = std::move(flat);
  h.sort_edges();
  if (auto v = validate(h)) throw InvalidHypergraph(*v);
  return h;
}

void OrderedHypergraph::sort_edges() {
  const std::size_t m = edge_count();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    auto ea = edge(a), eb = edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  };
  if (std::is_sorted(idx.begin(), idx.end(), less)) return;
  std::sort(idx.begin(), idx.end(), less);
  std::vector<Vertex> out;
  out.reserve(flat_.size());
  for (auto i : idx) {
    auto e = edge(i);
    out.insert(out.end(), e.begin(), e.end());
  }
  flat_ = std::move(out);
}

std::vector<Edge> OrderedHypergraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (auto e : edges()) out.emplace_back(e.begin(), e.end());
  return out;
}

namespace {

// First edge index whose r-prefix of length |key| is not less than key.
std::size_t lower_bound_prefix(const OrderedHypergraph& h, EdgeView key) {
  std::size_t lo = 0, hi = h.edge_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto e = h.edge(mid).first(key.size());
    if (std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

bool OrderedHypergraph::contains_edge(EdgeView e) const {
  if (static_cast<int>(e.size()) != r_) return false;
  auto i = lower_bound_prefix(*this, e);
  return i < edge_count() && std::ranges::equal(edge(i), e);
}

bool OrderedHypergraph::has_prefix(EdgeView prefix) const {
  if (prefix.empty()) return !empty();
  if (static_cast<int>(prefix.size()) > r_) return false;
  auto i = lower_bound_prefix(*this, prefix);
  return i < edge_count() && std::ranges::equal(edge(i).first(prefix.size()), prefix);
}

std::uint64_t OrderedHypergraph::degree(Vertex v) const {
  std::uint64_t d = 0;
  for (auto e : edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

std::vector<Vertex> OrderedHypergraph::support() const {
  std::vector<Vertex> s(flat_.begin(), flat_.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<Violation> validate(const OrderedHypergraph& h) {
  if (h.n() < 1) return Violation{"vertex count must be positive", 0, {}};
  if (h.r() < 1 || h.r() > h.n()) return Violation{"uniformity out of range", 0, {}};
  std::size_t i = 0;
  for (auto e : h.edges()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 1 || e[j] > h.n()) return Violation{"vertex out of range", i, {e.begin(), e.end()}};
      if (j > 0 && e[j] <= e[j - 1]) {
        return Violation{"edge not strictly increasing", i, {e.begin(), e.end()}};
      }
    }
    ++i;
  }
  // Duplicates: compare neighbours in lexicographic order. Canonical inputs
  // are already sorted, so the index sort is skipped for them.
  auto lex_less = [&](std::size_t a, std::size_t b) {
    auto ea = h.edge(a), eb = h.edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  };
  bool sorted = true;
  for (std::size_t t = 1; t < h.edge_count(); ++t) {
    if (!lex_less(t - 1, t)) {
      sorted = false;
      break;
    }
  }
  if (sorted) return std::nullopt;
  std::vector<std::size_t> idx(h.edge_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), lex_less);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    if (std::ranges::equal(h.edge(idx[t]), h.edge(idx[t - 1]))) {
      auto e = h.edge(idx[t]);
      return Violation{"duplicate edge", idx[t], {e.begin(), e.end()}};
    }
  }
  return std::nullopt;
}

DensityParams density(const OrderedHypergraph& h, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("density: alpha must be positive");
  DensityParams p;
  p.alpha = alpha;
  const auto e = h.edge_count();
  if (auto a = as_small_integer(alpha)) {
    p.exact = Rational(BigInt(e), big_pow(h.n(), *a));
    p.d = to_double(*p.exact);
  } else {
    p.d = static_cast<double>(e) / std::pow(static_cast<double>(h.n()), alpha);
  }
  return p;
}

OrderedHypergraph link(const OrderedHypergraph& h, Vertex v) {
  if (h.r() < 2) throw std::invalid_argument("link: uniformity must be at least 2");
  if (v < 1 || v > h.n()) throw std::invalid_argument("link: vertex out of range");
  std::vector<Vertex> flat;
  for (auto e : h.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (auto x : e) {
      if (x != v) flat.push_back(x);
    }
  }
  return OrderedHypergraph::from_flat(h.n(), h.r() - 1, std::move(flat));
}

OrderedHypergraph shadow(const OrderedHypergraph& h) {
  if (h.r() < 2) throw std::invalid_argument("shadow: uniformity must be at least 2");
  std::set<Edge> sets;
  for (auto e : h.edges()) {
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      Edge f;
      f.reserve(e.size() - 1);
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != skip) f.push_back(e[j]);
      }
      sets.insert(std::move(f));
    }
  }
  return OrderedHypergraph::from_edges(h.n(), h.r() - 1, {sets.begin(), sets.end()});
}

OrderedHypergraph induced(const OrderedHypergraph& h, const std::vector<Vertex>& keep) {
  std::vector<char> in(h.n() + 1, 0);
  for (auto v : keep) {
    if (v < 1 || v > h.n()) throw std::invalid_argument("induced: vertex out of range");
    in[v] = 1;
  }
  std::vector<Vertex> flat;
  for (auto e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) {
      flat.insert(flat.end(), e.begin(), e.end());
    }
  }
  return OrderedHypergraph::from_flat(h.n(), h.r(), std::move(flat));
}

namespace {

constexpr std::uint64_t kEnumerateLimit = 4'000'000;

std::uint64_t safe_binomial(int n, int r) {
  try {
    return binomial(n, r);
  } catch (const std::overflow_error&) {
    return UINT64_MAX;
  }
}

// Floyd's algorithm: r distinct values from [1, n], returned sorted.
Edge random_subset(int n, int r, std::mt19937_64& rng) {
  Edge s;
  s.reserve(r);
  for (int j = n - r + 1; j <= n; ++j) {
    std::uniform_int_distribution<int> pick(1, j);
    int t = pick(rng);
    if (std::find(s.begin(), s.end(), t) == s.end()) {
      s.push_back(t);
    } else {
      s.push_back(j);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

void check_random_args(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("random_hypergraph: need 1 <= r <= n");
}

}  // namespace

OrderedHypergraph random_hypergraph(int n, int r, std::uint64_t edge_count, std::uint64_t seed) {
  check_random_args(n, r);
  const auto total = safe_binomial(n, r);
  if (edge_count > total) {
    throw std::invalid_argument("random_hypergraph: edge_count exceeds C(n, r)");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> flat;
  flat.reserve(edge_count * r);
  if (total <= kEnumerateLimit) {
    std::vector<Vertex> all;
    all.reserve(total * r);
    for_each_combination(1, n, r, [&](const std::vector<int>& c) {
      all.insert(all.end(), c.begin(), c.end());
      return true;
    });
    // Partial Fisher-Yates over edge slots.
    std::vector<std::uint64_t> slot(total);
    std::iota(slot.begin(), slot.end(), 0);
    for (std::uint64_t i = 0; i < edge_count; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, total - 1);
      std::swap(slot[i], slot[pick(rng)]);
      auto first = all.begin() + slot[i] * r;
      flat.insert(flat.end(), first, first + r);
    }
  } else {
    std::set<Edge> chosen;
    while (chosen.size() < edge_count) chosen.insert(random_subset(n, r, rng));
    for (const auto& e : chosen) flat.insert(flat.end(), e.begin(), e.end());
  }
  return OrderedHypergraph::from_flat(n, r, std::move(flat));
}

OrderedHypergraph random_hypergraph_p(int n, int r, double p, std::uint64_t seed) {
  check_random_args(n, r);
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_hypergraph_p: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> flat;
  for_each_combination(1, n, r, [&](const std::vector<int>& c) {
    if (coin(rng)) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return OrderedHypergraph::from_flat(n, r, std::move(flat));
}

std::string to_string(EdgeView e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << '}';
  return os.str();
}

}  // namespace ordsplit
