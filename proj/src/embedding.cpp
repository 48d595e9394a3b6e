#include "ordsplit/embedding.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ordsplit {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency_of(const OrderedHypergraph& h) {
  Adjacency adj(h.n() + 1);
  for (auto e : h.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool marked_by(const Adjacency& adj, Vertex owner, Vertex other, int k) {
  const auto& a = adj[owner];
  const auto rank = std::lower_bound(a.begin(), a.end(), other) - a.begin();
  return rank < k || rank >= static_cast<std::ptrdiff_t>(a.size()) - k;
}

// Drops every edge that is among the k smallest or k largest at either end.
Adjacency unmarked(const Adjacency& adj, int k) {
  Adjacency out(adj.size());
  for (std::size_t v = 1; v < adj.size(); ++v) {
    const auto& a = adj[v];
    const int deg = static_cast<int>(a.size());
    for (int i = k; i < deg - k; ++i) {
      if (!marked_by(adj, a[i], static_cast<Vertex>(v), k)) out[v].push_back(a[i]);
    }
  }
  return out;
}

// Tree edges of a forest completed to a tree, listed so that every edge after
// the first attaches one new vertex. Throws when F has a cycle.
std::vector<std::pair<Vertex, Vertex>> tree_build_order(const OrderedHypergraph& f) {
  const auto verts = f.support();
  std::vector<Vertex> parent(f.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  Adjacency adj(f.n() + 1);
  for (auto e : f.edges()) {
    const Vertex a = find(e[0]), b = find(e[1]);
    if (a == b) throw std::invalid_argument("embed_forest_ordered: F is not a forest");
    parent[std::max(a, b)] = std::min(a, b);
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  // Join every other component to the component of the smallest vertex.
  const Vertex root = verts.front();
  for (auto v : verts) {
    if (find(v) == v && v != root) {
      adj[root].push_back(v);
      adj[v].push_back(root);
      parent[v] = root;
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::pair<Vertex, Vertex>> order;
  std::vector<char> seen(f.n() + 1, 0);
  std::vector<Vertex> queue{root};
  seen[root] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto w : adj[queue[q]]) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back({queue[q], w});
        queue.push_back(w);
      }
    }
  }
  return order;
}

Interval span_of(const std::vector<Vertex>& images) {
  return {*std::min_element(images.begin(), images.end()), *std::max_element(images.begin(), images.end())};
}

}  // namespace

std::optional<Embedding> embed_forest_ordered(const OrderedHypergraph& host, const OrderedHypergraph& f) {
  if (host.r() != 2 || f.r() != 2) throw std::invalid_argument("embed_forest_ordered: graphs only (r = 2)");
  if (f.empty()) throw std::invalid_argument("embed_forest_ordered: F has no edges");
  const auto order = tree_build_order(f);
  const int k = static_cast<int>(order.size());

  // levels[j] is the graph used to place tree edge j (0-based); each level is
  // the unmarked part of the one above.
  std::vector<Adjacency> levels(k);
  levels[k - 1] = adjacency_of(host);
  for (int j = k - 1; j > 0; --j) levels[j - 1] = unmarked(levels[j], j + 1);

  std::vector<Vertex> image(f.n() + 1, 0);
  std::vector<int> side(f.n() + 1, -1);  // 0 = lower part, 1 = upper part
  std::vector<char> used(host.n() + 1, 0);

  const auto& base = levels[0];
  Vertex a = 0, b = 0;
  for (Vertex v = 1; v <= host.n() && !a; ++v) {
    for (auto w : base[v]) {
      if (w > v) {
        a = v;
        b = w;
        break;
      }
    }
  }
  if (!a) return std::nullopt;
  {
    auto [x, y] = order[0];
    if (y < x) std::swap(x, y);
    image[x] = a;
    image[y] = b;
    side[x] = 0;
    side[y] = 1;
    used[a] = used[b] = 1;
  }
  Vertex max_low = a, min_high = b;

  for (int j = 1; j < k; ++j) {
    const auto [x, y] = order[j];
    const Vertex v = image[x];
    const auto& nb = levels[j][v];
    Vertex pick = 0;
    if (side[x] == 0) {
      for (auto w : nb) {
        if (w > max_low && !used[w]) {
          pick = w;
          break;
        }
      }
    } else {
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (*it < min_high && !used[*it]) {
          pick = *it;
          break;
        }
      }
    }
    if (!pick) return std::nullopt;
    image[y] = pick;
    side[y] = 1 - side[x];
    used[pick] = 1;
    if (side[y] == 0) max_low = std::max(max_low, pick);
    else min_high = std::min(min_high, pick);
  }

  Embedding emb;
  emb.map.assign(image.begin() + 1, image.end());
  std::vector<Vertex> low, high;
  for (Vertex v = 1; v <= f.n(); ++v) {
    if (side[v] == 0) low.push_back(image[v]);
    if (side[v] == 1) high.push_back(image[v]);
  }
  for (auto e : f.edges()) {
    Edge img{image[e[0]], image[e[1]]};
    std::sort(img.begin(), img.end());
    emb.host_edges.push_back(std::move(img));
  }
  emb.parts = {span_of(low), span_of(high)};
  return emb;
}

void check_structure(const OrderedHypergraph& host, const StructuredHost& s) {
  const int r = host.r();
  if (static_cast<int>(s.parts.size()) != r - 1) {
    throw std::invalid_argument("embed_tight_tree: need exactly r - 1 parts");
  }
  if (s.doubled < 0 || s.doubled >= r - 1) throw std::invalid_argument("embed_tight_tree: doubled part out of range");
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    if (p.lo < 1 || p.hi > host.n() || p.lo > p.hi || (i > 0 && s.parts[i - 1].hi >= p.lo)) {
      throw std::invalid_argument("embed_tight_tree: parts are not increasing intervals inside [n]");
    }
  }
  std::vector<int> count(r - 1);
  for (auto e : host.edges()) {
    std::fill(count.begin(), count.end(), 0);
    for (auto v : e) {
      auto it = std::find_if(s.parts.begin(), s.parts.end(), [v](const Interval& p) { return p.contains(v); });
      if (it == s.parts.end()) {
        throw std::invalid_argument("embed_tight_tree: edge " + to_string(e) + " leaves the parts");
      }
      ++count[it - s.parts.begin()];
    }
    for (int i = 0; i < r - 1; ++i) {
      if (count[i] != (i == s.doubled ? 2 : 1)) {
        throw std::invalid_argument("embed_tight_tree: edge " + to_string(e) + " breaks the part layout");
      }
    }
  }
}

namespace {

// Removes f + x whenever x is among the t smallest or t largest completions
// of the (r-1)-set f.
OrderedHypergraph prune(const OrderedHypergraph& h, int t) {
  const int r = h.r();
  const int bits = std::bit_width(static_cast<unsigned>(h.n()));
  if (r * bits > 64) throw std::invalid_argument("embed_tight_tree: host too large to index");
  const std::size_t m = h.edge_count();
  std::vector<char> removed(m, 0);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keys(m);
  for (int skip = 0; skip < r; ++skip) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto e = h.edge(i);
      std::uint64_t key = 0;
      for (int j = 0; j < r; ++j) {
        if (j != skip) key = (key << bits) | static_cast<std::uint64_t>(e[j]);
      }
      key = (key << bits) | static_cast<std::uint64_t>(e[skip]);
      keys[i] = {key, static_cast<std::uint32_t>(i)};
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t lo = 0; lo < m;) {
      const std::uint64_t group = keys[lo].first >> bits;
      std::size_t hi = lo;
      while (hi < m && (keys[hi].first >> bits) == group) ++hi;
      const std::size_t size = hi - lo;
      for (std::size_t q = lo; q < hi; ++q) {
        const std::size_t rank = q - lo;
        if (rank < static_cast<std::size_t>(t) || rank + t >= size) removed[keys[q].second] = 1;
      }
      lo = hi;
    }
  }
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < m; ++i) {
    if (!removed[i]) {
      const auto e = h.edge(i);
      flat.insert(flat.end(), e.begin(), e.end());
    }
  }
  return OrderedHypergraph::from_flat(h.n(), r, std::move(flat));
}

}  // namespace

std::optional<Embedding> embed_tight_tree(const OrderedHypergraph& host, const StructuredHost& s,
                                          const OrderedHypergraph& tree) {
  if (tree.r() != host.r()) throw std::invalid_argument("embed_tight_tree: uniformity mismatch");
  if (host.r() < 2) throw std::invalid_argument("embed_tight_tree: need r >= 2");
  check_structure(host, s);
  const auto witness = validate_tight_tree(tree);
  if (!witness) throw std::invalid_argument("embed_tight_tree: T is not a tight tree");
  const int r = host.r();
  const auto& steps = witness->script.steps;
  const int t = r + static_cast<int>(steps.size());

  // graphs[s - r] serves trees with s vertices.
  std::vector<OrderedHypergraph> graphs(t - r + 1);
  graphs[t - r] = host;
  for (int sz = t; sz > r; --sz) graphs[sz - r - 1] = prune(graphs[sz - r], sz);

  const auto& base = graphs[0];
  if (base.empty()) return std::nullopt;
  std::vector<Vertex> image(t + 1, 0);  // by script name
  std::vector<int> colour(t + 1, -1);
  std::vector<char> used(host.n() + 1, 0);
  for (int j = 0; j < r; ++j) {
    image[j + 1] = base.edge(0)[j];
    colour[j + 1] = j;
    used[image[j + 1]] = 1;
  }
  std::vector<Vertex> lo_c(r, INT_MAX), hi_c(r, 0);  // colour class spans
  for (int j = 0; j < r; ++j) lo_c[j] = hi_c[j] = image[j + 1];

  Edge cand(r);
  for (int st = 0; st < static_cast<int>(steps.size()); ++st) {
    const int y = r + st + 1;
    const auto& g = graphs[st + 1];
    std::vector<char> has(r, 0);
    for (auto v : steps[st]) has[colour[v]] = 1;
    const int j = static_cast<int>(std::find(has.begin(), has.end(), 0) - has.begin());
    Vertex lo = 0, hi = host.n() + 1;
    for (int c = 0; c < j; ++c) lo = std::max(lo, hi_c[c]);
    for (int c = j + 1; c < r; ++c) hi = std::min(hi, lo_c[c]);
    Vertex pick = 0;
    for (Vertex x = lo + 1; x < hi && !pick; ++x) {
      if (used[x]) continue;
      cand.clear();
      for (auto v : steps[st]) cand.push_back(image[v]);
      cand.push_back(x);
      std::sort(cand.begin(), cand.end());
      if (g.contains_edge(cand)) pick = x;
    }
    if (!pick) return std::nullopt;
    image[y] = pick;
    colour[y] = j;
    used[pick] = 1;
    lo_c[j] = std::min(lo_c[j], pick);
    hi_c[j] = std::max(hi_c[j], pick);
  }

  Embedding emb;
  emb.map.assign(tree.n(), 0);
  for (Vertex v = 1; v <= tree.n(); ++v) {
    if (witness->relabel[v]) emb.map[v - 1] = image[witness->relabel[v]];
  }
  for (auto e : tree.edges()) {
    Edge img;
    for (auto v : e) img.push_back(emb.map[v - 1]);
    std::sort(img.begin(), img.end());
    emb.host_edges.push_back(std::move(img));
  }
  for (int c = 0; c < r; ++c) emb.parts.push_back({lo_c[c], hi_c[c]});
  return emb;
}

StructuredSample random_structured_host(int r, const std::vector<int>& part_sizes, int doubled, double p,
                                        std::uint64_t seed) {
  if (r < 2 || static_cast<int>(part_sizes.size()) != r - 1) {
    throw std::invalid_argument("random_structured_host: need r >= 2 and r - 1 part sizes");
  }
  if (doubled < 0 || doubled >= r - 1) throw std::invalid_argument("random_structured_host: doubled out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_structured_host: p outside [0, 1]");
  StructuredSample out;
  out.structure.doubled = doubled;
  Vertex next = 1;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    const int need = static_cast<int>(i) == doubled ? 2 : 1;
    if (part_sizes[i] < need) throw std::invalid_argument("random_structured_host: part too small");
    out.structure.parts.push_back({next, next + part_sizes[i] - 1});
    next += part_sizes[i];
  }
  const int n = next - 1;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> flat;
  Edge cur;
  // Nested loops in part order emit edges in lexicographic order.
  auto rec = [&](auto&& self, int part) -> void {
    if (part == r - 1) {
      if (coin(rng)) flat.insert(flat.end(), cur.begin(), cur.end());
      return;
    }
    const auto& iv = out.structure.parts[part];
    if (part == doubled) {
      for (Vertex a = iv.lo; a <= iv.hi; ++a) {
        for (Vertex b = a + 1; b <= iv.hi; ++b) {
          cur.push_back(a);
          cur.push_back(b);
          self(self, part + 1);
          cur.resize(cur.size() - 2);
        }
      }
    } else {
      for (Vertex a = iv.lo; a <= iv.hi; ++a) {
        cur.push_back(a);
        self(self, part + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  out.host = OrderedHypergraph::from_flat(n, r, std::move(flat));
  return out;
}

}  // namespace ordsplit
