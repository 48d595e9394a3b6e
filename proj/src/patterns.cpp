#include "ordsplit/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <set>
#include <unordered_set>

namespace ordsplit {

namespace {

// incidence[v] = indices of the edges containing v.
std::vector<std::vector<std::size_t>> incidence(const std::vector<Edge>& edges, Vertex max_vertex) {
  std::vector<std::vector<std::size_t>> inc(max_vertex + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (auto v : edges[i]) inc[v].push_back(i);
  }
  return inc;
}

std::vector<Vertex> support_of(const std::vector<Edge>& edges) {
  std::vector<Vertex> u;
  for (const auto& e : edges) u.insert(u.end(), e.begin(), e.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// Block starts (indices into `u`) -> intervals; gap vertices join the block
// on their left.
std::vector<Interval> blocks_to_intervals(const std::vector<Vertex>& u, const std::vector<std::size_t>& starts) {
  std::vector<Interval> out;
  for (std::size_t b = 0; b < starts.size(); ++b) {
    Vertex lo = u[starts[b]];
    Vertex hi = b + 1 < starts.size() ? u[starts[b + 1]] - 1 : u.back();
    out.push_back({lo, hi});
  }
  return out;
}

}  // namespace

std::optional<std::vector<Interval>> interval_kpartite_witness(const OrderedHypergraph& h, int k) {
  if (k < 2 || k > h.r()) throw std::invalid_argument("interval_kpartite_witness: need 2 <= k <= r");
  if (h.empty()) {
    // Vacuously true; report k singletons when they fit.
    if (h.n() < k) return std::nullopt;
    std::vector<Interval> out;
    for (int i = 1; i <= k; ++i) out.push_back({i, i});
    return out;
  }
  const auto edges = h.edge_list();
  const auto u = support_of(edges);
  const auto inc = incidence(edges, h.n());
  // Greedy: close a block as soon as every edge has been hit. This maximises
  // the number of blocks; a trailing partial block merges into its neighbour.
  std::vector<std::size_t> starts;
  std::vector<int> hit_in(edges.size(), -1);
  std::size_t hits = 0;
  std::size_t block_start = 0;
  int block_id = 0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    for (auto ei : inc[u[t]]) {
      if (hit_in[ei] != block_id) {
        hit_in[ei] = block_id;
        ++hits;
      }
    }
    if (hits == edges.size()) {
      starts.push_back(block_start);
      block_start = t + 1;
      hits = 0;
      ++block_id;
    }
  }
  if (static_cast<int>(starts.size()) < k) return std::nullopt;
  return blocks_to_intervals(u, starts);
}

std::optional<std::vector<Interval>> exact_r_partite_parts(const std::vector<Edge>& edges) {
  if (edges.empty()) return std::nullopt;
  const std::size_t r = edges.front().size();
  for (const auto& e : edges) {
    if (e.size() != r) throw std::invalid_argument("exact_r_partite_parts: mixed edge sizes");
  }
  const auto u = support_of(edges);
  const auto inc = incidence(edges, u.back());
  std::vector<std::size_t> starts;
  std::vector<int> count(edges.size(), 0);
  std::size_t complete = 0;
  std::size_t block_start = 0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    for (auto ei : inc[u[t]]) {
      if (++count[ei] > 1) return std::nullopt;
      ++complete;
    }
    if (complete == edges.size()) {
      starts.push_back(block_start);
      block_start = t + 1;
      complete = 0;
      std::fill(count.begin(), count.end(), 0);
    }
  }
  if (block_start != u.size() || starts.size() != r) return std::nullopt;
  return blocks_to_intervals(u, starts);
}

std::optional<std::vector<Interval>> exact_r_partite_parts(const OrderedHypergraph& h) {
  return exact_r_partite_parts(h.edge_list());
}

OrderTypes ord_order_types(const OrderedHypergraph& f, SearchLimits limits) {
  if (f.empty()) throw std::invalid_argument("ord_order_types: F has no edges");
  const int r = f.r();
  const auto verts = f.support();
  const int p = static_cast<int>(verts.size());
  if (p > limits.max_pattern_vertices) throw PatternTooLarge("ord_order_types: F has too many vertices");
  std::vector<int> index(f.n() + 1, -1);
  for (int i = 0; i < p; ++i) index[verts[i]] = i;
  std::vector<std::vector<int>> edges;
  for (auto e : f.edges()) {
    std::vector<int> local;
    for (auto v : e) local.push_back(index[v]);
    edges.push_back(std::move(local));
  }
  std::vector<std::vector<int>> edges_of(p);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (int v : edges[i]) edges_of[v].push_back(static_cast<int>(i));
  }

  std::set<std::vector<Vertex>> seen;  // canonical flat edge lists
  std::vector<int> color(p, -1);
  OrderTypes out;

  auto emit_orders = [&]() {
    std::vector<std::vector<int>> parts(r);
    for (int v = 0; v < p; ++v) parts[color[v]].push_back(v);
    for (auto& part : parts) std::sort(part.begin(), part.end());
    // Odometer over the permutations of every part.
    while (true) {
      std::vector<Vertex> pos(p);
      int next = 1;
      for (const auto& part : parts) {
        for (int v : part) pos[v] = next++;
      }
      std::vector<Edge> mapped;
      for (const auto& e : edges) {
        Edge m;
        for (int v : e) m.push_back(pos[v]);
        std::sort(m.begin(), m.end());
        mapped.push_back(std::move(m));
      }
      std::sort(mapped.begin(), mapped.end());
      std::vector<Vertex> flat;
      for (const auto& m : mapped) flat.insert(flat.end(), m.begin(), m.end());
      seen.insert(std::move(flat));
      int c = r - 1;
      while (c >= 0 && !std::next_permutation(parts[c].begin(), parts[c].end())) --c;
      if (c < 0) break;
    }
  };

  // Assign colours vertex by vertex; every edge must use distinct colours.
  std::function<void(int)> assign = [&](int v) {
    if (v == p) {
      emit_orders();
      return;
    }
    for (int c = 0; c < r; ++c) {
      bool ok = true;
      for (int ei : edges_of[v]) {
        for (int w : edges[ei]) {
          if (w != v && color[w] == c) ok = false;
        }
      }
      if (!ok) continue;
      color[v] = c;
      assign(v + 1);
      color[v] = -1;
    }
  };
  assign(0);

  out.r_partite = !seen.empty();
  for (const auto& flat : seen) out.patterns.push_back(OrderedHypergraph::from_flat(p, r, flat));
  return out;
}

namespace {

struct PatternIndex {
  int p = 0;
  // For pattern vertex v (0-based): (edge index, position of v in that edge).
  std::vector<std::vector<std::pair<int, int>>> at;
  std::vector<Edge> edges;
};

PatternIndex index_pattern(const OrderedPattern& pattern) {
  PatternIndex ix;
  ix.p = pattern.n();
  ix.edges = pattern.edge_list();
  ix.at.resize(ix.p);
  for (std::size_t i = 0; i < ix.edges.size(); ++i) {
    for (std::size_t j = 0; j < ix.edges[i].size(); ++j) {
      ix.at[ix.edges[i][j] - 1].push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return ix;
}

// Depth-first extension of map[0..v-1]; every pattern edge through v must
// have its mapped prefix present in the host.
bool extend(const OrderedHypergraph& host, const PatternIndex& ix, std::vector<Vertex>& map, int v) {
  if (v == ix.p) return true;
  const Vertex lo = v == 0 ? 1 : map[v - 1] + 1;
  const Vertex hi = host.n() - (ix.p - 1 - v);
  Vertex prefix[64];
  for (Vertex x = lo; x <= hi; ++x) {
    map[v] = x;
    bool ok = true;
    for (auto [ei, pos] : ix.at[v]) {
      const auto& e = ix.edges[ei];
      for (int j = 0; j <= pos; ++j) prefix[j] = map[e[j] - 1];
      if (!host.has_prefix(EdgeView(prefix, pos + 1))) {
        ok = false;
        break;
      }
    }
    if (ok && extend(host, ix, map, v + 1)) return true;
  }
  return false;
}

Embedding make_embedding(const PatternIndex& ix, const std::vector<Vertex>& map) {
  Embedding emb;
  emb.map = map;
  for (const auto& e : ix.edges) {
    Edge img;
    for (auto v : e) img.push_back(map[v - 1]);
    emb.host_edges.push_back(std::move(img));
  }
  return emb;
}

}  // namespace

std::optional<Embedding> contains_ordered_pattern(const OrderedHypergraph& host, const OrderedPattern& pattern,
                                                  Exec exec, SearchLimits limits) {
  if (pattern.r() != host.r()) throw std::invalid_argument("contains_ordered_pattern: uniformity mismatch");
  if (pattern.n() > limits.max_pattern_vertices) {
    throw PatternTooLarge("contains_ordered_pattern: pattern has too many vertices");
  }
  if (pattern.r() > 64) throw std::invalid_argument("contains_ordered_pattern: uniformity above 64");
  if (pattern.n() > host.n()) return std::nullopt;
  const auto ix = index_pattern(pattern);
  const Vertex top = host.n() - ix.p + 1;  // largest admissible image of vertex 1

  auto try_first = [&](Vertex x, std::vector<Vertex>& map) {
    map.assign(ix.p, 0);
    map[0] = x;
    for (auto [ei, pos] : ix.at[0]) {
      (void)ei;
      (void)pos;  // vertex 1 is always at position 0 of its edges
      const Vertex one[1] = {x};
      if (!host.has_prefix(EdgeView(one, 1))) return false;
    }
    return extend(host, ix, map, 1);
  };

  if (exec == Exec::serial || ix.p == 1) {
    std::vector<Vertex> map;
    for (Vertex x = 1; x <= top; ++x) {
      if (try_first(x, map)) return make_embedding(ix, map);
    }
    return std::nullopt;
  }

  // Branches on the image of pattern vertex 1; the least successful branch
  // wins, so the result matches the serial search.
  std::atomic<Vertex> best{INT_MAX};
  std::vector<std::vector<Vertex>> found(top + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (Vertex x = 1; x <= top; ++x) {
    if (x > best.load(std::memory_order_relaxed)) continue;
    std::vector<Vertex> map;
    if (try_first(x, map)) {
      found[x] = map;
      Vertex cur = best.load();
      while (x < cur && !best.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const Vertex b = best.load();
  if (b == INT_MAX) return std::nullopt;
  return make_embedding(ix, found[b]);
}

std::optional<Embedding> contains_ord(const OrderedHypergraph& host, const OrderedHypergraph& f, Exec exec,
                                      SearchLimits limits) {
  const auto types = ord_order_types(f, limits);
  for (const auto& p : types.patterns) {
    if (auto emb = contains_ordered_pattern(host, p, exec, limits)) return emb;
  }
  return std::nullopt;
}

bool is_crossing(EdgeView a, EdgeView b) {
  if (a.size() != b.size() || a.empty()) return false;
  if (b[0] < a[0]) std::swap(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] < b[i])) return false;
    if (i + 1 < a.size() && !(b[i] < a[i + 1])) return false;
  }
  return true;
}

std::optional<EdgePair> find_crossing_pair(const OrderedHypergraph& h) {
  const std::size_t m = h.edge_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto a = h.edge(i), b = h.edge(j);
      if (is_crossing(a, b)) {
        if (b[0] < a[0]) std::swap(a, b);
        return EdgePair{{a.begin(), a.end()}, {b.begin(), b.end()}};
      }
    }
  }
  return std::nullopt;
}

bool is_intersection_member(EdgeView a, EdgeView b, int ell) {
  Edge common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (static_cast<int>(common.size()) != ell) return false;
  return exact_r_partite_parts(std::vector<Edge>{{a.begin(), a.end()}, {b.begin(), b.end()}}).has_value();
}

std::optional<EdgePair> find_intersection_pair(const OrderedHypergraph& h, int ell) {
  if (ell < 0 || ell > h.r() - 1) throw std::invalid_argument("find_intersection_pair: need 0 <= ell <= r - 1");
  const std::size_t m = h.edge_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto a = h.edge(i), b = h.edge(j);
      if (is_intersection_member(a, b, ell)) return EdgePair{{a.begin(), a.end()}, {b.begin(), b.end()}};
    }
  }
  return std::nullopt;
}

namespace {

Edge sorted_copy(const Edge& e) {
  Edge s = e;
  std::sort(s.begin(), s.end());
  return s;
}

Edge intersect_all(const std::vector<Edge>& edges, std::size_t skip) {
  std::optional<Edge> acc;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    if (!acc) {
      acc = edges[i];
      continue;
    }
    Edge next;
    std::set_intersection(acc->begin(), acc->end(), edges[i].begin(), edges[i].end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc.value_or(Edge{});
}

bool meets(const Edge& a, const Edge& b) {
  Edge c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return !c.empty();
}

}  // namespace

bool validate_simplex(const std::vector<Edge>& raw, int d) {
  if (d < 1 || static_cast<int>(raw.size()) != d + 1) {
    throw std::invalid_argument("validate_simplex: need exactly d + 1 edges");
  }
  std::vector<Edge> edges;
  for (const auto& e : raw) edges.push_back(sorted_copy(e));
  if (!intersect_all(edges, edges.size()).empty()) return false;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    if (intersect_all(edges, skip).empty()) return false;
  }
  return true;
}

bool validate_strong_simplex(const std::vector<Edge>& raw, int d) {
  if (d < 1 || static_cast<int>(raw.size()) != d + 2) {
    throw std::invalid_argument("validate_strong_simplex: need exactly d + 2 edges");
  }
  std::vector<Edge> base;
  for (int i = 0; i <= d; ++i) base.push_back(sorted_copy(raw[i]));
  if (!validate_simplex(base, d)) return false;
  const Edge last = sorted_copy(raw.back());
  for (std::size_t skip = 0; skip < base.size(); ++skip) {
    if (!meets(last, intersect_all(base, skip))) return false;
  }
  return true;
}

std::optional<TreeWitness> validate_tight_tree(const OrderedHypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m == 0) return std::nullopt;
  const int r = h.r();
  const auto edges = h.edge_list();

  std::vector<int> vcount(h.n() + 1, 0);
  std::multiset<Edge> shadow_sets;
  std::vector<std::size_t> order;
  std::vector<char> used(m, 0);
  std::unordered_set<std::uint64_t> dead;  // failed used-sets, when m <= 64

  auto sub_without = [&](const Edge& e, int skip) {
    Edge f;
    for (int j = 0; j < r; ++j) {
      if (j != skip) f.push_back(e[j]);
    }
    return f;
  };
  auto add = [&](std::size_t i) {
    used[i] = 1;
    order.push_back(i);
    for (auto v : edges[i]) ++vcount[v];
    for (int s = 0; s < r; ++s) shadow_sets.insert(sub_without(edges[i], s));
  };
  auto remove = [&](std::size_t i) {
    used[i] = 0;
    order.pop_back();
    for (auto v : edges[i]) --vcount[v];
    for (int s = 0; s < r; ++s) shadow_sets.erase(shadow_sets.find(sub_without(edges[i], s)));
  };
  auto mask = [&]() {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) x |= std::uint64_t{1} << i;
    }
    return x;
  };

  std::function<bool()> grow = [&]() {
    if (order.size() == m) return true;
    if (m <= 64 && dead.count(mask())) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      int fresh_pos = -1, fresh = 0;
      for (int j = 0; j < r; ++j) {
        if (vcount[edges[i][j]] == 0) {
          ++fresh;
          fresh_pos = j;
        }
      }
      if (fresh != 1 || !shadow_sets.count(sub_without(edges[i], fresh_pos))) continue;
      add(i);
      if (grow()) return true;
      remove(i);
    }
    if (m <= 64) dead.insert(mask());
    return false;
  };

  for (std::size_t first = 0; first < m; ++first) {
    add(first);
    if (grow()) {
      TreeWitness w;
      w.script.r = r;
      w.edge_order = order;
      w.relabel.assign(h.n() + 1, 0);
      Vertex next = 1;
      for (auto v : edges[order[0]]) w.relabel[v] = next++;
      for (std::size_t t = 1; t < order.size(); ++t) {
        const auto& e = edges[order[t]];
        Edge step;
        for (auto v : e) {
          if (w.relabel[v] != 0) step.push_back(w.relabel[v]);
        }
        for (auto v : e) {
          if (w.relabel[v] == 0) w.relabel[v] = next++;
        }
        std::sort(step.begin(), step.end());
        w.script.steps.push_back(std::move(step));
      }
      return w;
    }
    remove(first);
  }
  return std::nullopt;
}

bool embedding_is_valid(const OrderedHypergraph& host, const OrderedPattern& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.n()) return false;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] < 1 || e.map[i] > host.n()) return false;
    if (i > 0 && e.map[i] <= e.map[i - 1]) return false;
  }
  for (auto pe : pattern.edges()) {
    Edge img;
    for (auto v : pe) img.push_back(e.map[v - 1]);
    if (!host.contains_edge(img)) return false;
  }
  return true;
}

Json to_json(const Embedding& e) {
  Json j;
  Json map = Json::object();
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] != 0) map[std::to_string(i + 1)] = e.map[i];
  }
  j["map"] = std::move(map);
  Json edges = Json::array();
  for (const auto& he : e.host_edges) edges.push_back(he);
  j["host_edges"] = std::move(edges);
  if (!e.parts.empty()) j["parts"] = intervals_to_json(e.parts);
  return j;
}

}  // namespace ordsplit
