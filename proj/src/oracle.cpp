#include "ordsplit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "ordsplit/combinatorics.hpp"

namespace ordsplit {

std::string ForbiddenSpec::name() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::crossing_pair: return "crossing-pair";
    case Kind::two_disjoint_edges: return "two-disjoint-edges";
    case Kind::ord_of: return "ord";
    case Kind::patterns: return "patterns";
  }
  return "?";
}

namespace {

bool disjoint(EdgeView a, EdgeView b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

// Candidate r-sets of [n] in colex order: compare by largest element first.
std::vector<Edge> colex_sets(int n, int r) {
  std::vector<Edge> out;
  for_each_combination(1, n, r, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

struct Search {
  int n = 0, r = 0;
  std::vector<Edge> cands;
  ForbiddenSpec::Kind kind = ForbiddenSpec::Kind::none;
  std::vector<OrderedPattern> patterns;
  SearchLimits limits;

  // `chosen` is free; does adding `next` keep it free?
  bool compatible(const std::vector<int>& chosen, int next) const {
    const auto& e = cands[next];
    switch (kind) {
      case ForbiddenSpec::Kind::none: return true;
      case ForbiddenSpec::Kind::crossing_pair:
        for (int c : chosen) {
          if (is_crossing(cands[c], e)) return false;
        }
        return true;
      case ForbiddenSpec::Kind::two_disjoint_edges:
        for (int c : chosen) {
          if (disjoint(cands[c], e)) return false;
        }
        return true;
      default: {
        std::vector<Edge> edges;
        for (int c : chosen) edges.push_back(cands[c]);
        edges.push_back(e);
        const auto h = OrderedHypergraph::from_edges(n, r, edges);
        for (const auto& p : patterns) {
          if (contains_ordered_pattern(h, p, Exec::serial, limits)) return false;
        }
        return true;
      }
    }
  }

  struct Best {
    int size = -1;
    std::vector<int> family;
  };

  // Include-first DFS from position `pos`; prunes when the subtree cannot beat
  // the local best, or cannot reach the shared bound at all.
  void dfs(std::vector<int>& chosen, int pos, Best& best, const std::atomic<int>* shared) const {
    const int total = static_cast<int>(cands.size());
    const int cur = static_cast<int>(chosen.size());
    if (pos == total) {
      if (cur > best.size) best = {cur, chosen};
      return;
    }
    const int reach = cur + (total - pos);
    if (reach <= best.size) return;
    if (shared && reach < shared->load(std::memory_order_relaxed)) return;
    if (compatible(chosen, pos)) {
      chosen.push_back(pos);
      dfs(chosen, pos + 1, best, shared);
      chosen.pop_back();
    }
    dfs(chosen, pos + 1, best, shared);
  }
};

}  // namespace

ExtremalResult brute_ex_ordered(int n, int r, const ForbiddenSpec& spec, Exec exec, const OracleLimits& limits) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("brute_ex_ordered: need 1 <= r <= n");
  const auto count = binomial(n, r);
  if (count > static_cast<std::uint64_t>(limits.max_candidate_sets)) {
    throw OracleCapExceeded("brute_ex_ordered: C(n, r) = " + std::to_string(count) + " exceeds the cap of " +
                            std::to_string(limits.max_candidate_sets));
  }
  Search s;
  s.n = n;
  s.r = r;
  s.cands = colex_sets(n, r);
  s.kind = spec.kind;
  s.limits = limits.search;
  if (spec.kind == ForbiddenSpec::Kind::ord_of) {
    if (spec.f.r() != r) throw std::invalid_argument("brute_ex_ordered: F has the wrong uniformity");
    s.patterns = ord_order_types(spec.f, limits.search).patterns;
  } else if (spec.kind == ForbiddenSpec::Kind::patterns) {
    for (const auto& p : spec.patterns) {
      if (p.r() != r) throw std::invalid_argument("brute_ex_ordered: pattern has the wrong uniformity");
    }
    s.patterns = spec.patterns;
  }

  Search::Best best;
  const int total = static_cast<int>(s.cands.size());
  if (exec == Exec::serial) {
    std::vector<int> chosen;
    s.dfs(chosen, 0, best, nullptr);
  } else {
    // Enumerate feasible decision prefixes of a fixed depth in DFS order, then
    // search the subtrees independently. The earliest subtree attaining the
    // maximum supplies the witness, exactly as the serial search would.
    const int depth = std::min(total, 8);
    std::vector<std::vector<int>> prefixes;
    std::vector<int> chosen;
    auto enumerate = [&](auto&& self, int pos) -> void {
      if (pos == depth) {
        prefixes.push_back(chosen);
        return;
      }
      if (s.compatible(chosen, pos)) {
        chosen.push_back(pos);
        self(self, pos + 1);
        chosen.pop_back();
      }
      self(self, pos + 1);
    };
    enumerate(enumerate, 0);
    std::vector<Search::Best> results(prefixes.size());
    std::atomic<int> shared{-1};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      std::vector<int> local = prefixes[i];
      s.dfs(local, depth, results[i], &shared);
      int cur = shared.load();
      while (results[i].size > cur && !shared.compare_exchange_weak(cur, results[i].size)) {
      }
    }
    for (auto& res : results) {
      if (res.size > best.size) best = std::move(res);
    }
  }

  std::vector<Edge> edges;
  for (int c : best.family) edges.push_back(s.cands[c]);
  return {static_cast<std::uint64_t>(best.size), OrderedHypergraph::from_edges(n, r, edges)};
}

bool is_free(const OrderedHypergraph& h, const ForbiddenSpec& spec, const SearchLimits& limits) {
  switch (spec.kind) {
    case ForbiddenSpec::Kind::none: return true;
    case ForbiddenSpec::Kind::crossing_pair: return !find_crossing_pair(h).has_value();
    case ForbiddenSpec::Kind::two_disjoint_edges:
      for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
          if (disjoint(h.edge(i), h.edge(j))) return false;
        }
      }
      return true;
    case ForbiddenSpec::Kind::ord_of: return !contains_ord(h, spec.f, Exec::serial, limits).has_value();
    case ForbiddenSpec::Kind::patterns:
      for (const auto& p : spec.patterns) {
        if (contains_ordered_pattern(h, p, Exec::serial, limits)) return false;
      }
      return true;
  }
  return true;
}

int naive_edge_level(EdgeView e, int n, int k) {
  if (n < 1) throw std::invalid_argument("naive_edge_level: n must be positive");
  int g = 0;
  while ((2LL << g) <= n) ++g;
  for (int level = 0; level <= g; ++level) {
    const long long len = 1LL << (g - level);
    std::vector<std::pair<long long, long long>> parts;
    for (long long lo = 1; lo <= n; lo += len) parts.push_back({lo, std::min<long long>(n, lo + len - 1)});
    int met = 0;
    for (const auto& [lo, hi] : parts) {
      bool hit = false;
      for (auto v : e) hit = hit || (lo <= v && v <= hi);
      met += hit;
    }
    if (met >= k) return level;
  }
  throw std::invalid_argument("naive_edge_level: edge never meets k intervals");
}

bool naive_contains(const OrderedHypergraph& host, const OrderedPattern& pattern, const OracleLimits& limits) {
  if (host.n() > limits.max_host_vertices) throw OracleCapExceeded("naive_contains: host too large");
  if (pattern.r() != host.r()) return false;
  if (pattern.n() > host.n()) return false;
  std::set<Edge> edges;
  for (auto e : host.edges()) edges.insert(Edge(e.begin(), e.end()));
  bool found = false;
  for_each_combination(1, host.n(), pattern.n(), [&](const std::vector<int>& img) {
    bool all = true;
    for (auto pe : pattern.edges()) {
      Edge m;
      for (auto v : pe) m.push_back(img[v - 1]);
      if (!edges.count(m)) {
        all = false;
        break;
      }
    }
    found = all;
    return !found;
  });
  return found;
}

DecompositionReport verify_decomposition(const OrderedHypergraph& h, const Decomposition& d) {
  DecompositionReport rep;
  auto report = [&](std::string kind, std::string detail) {
    rep.violations.push_back({std::move(kind), std::move(detail)});
  };

  std::map<Edge, int> seen;
  for (const auto& piece : d.pieces) {
    for (auto e : piece.sub.edges()) ++seen[Edge(e.begin(), e.end())];
  }
  for (auto e : h.edges()) {
    if (!seen.count(Edge(e.begin(), e.end()))) report("cover", "edge " + to_string(e) + " is in no piece");
  }
  for (const auto& [e, c] : seen) {
    if (!h.contains_edge(e)) report("cover", "piece edge " + to_string(e) + " is not in H");
    if (c > 1) report("disjoint", "edge " + to_string(e) + " is in " + std::to_string(c) + " pieces");
  }

  int g = 0;
  while ((2LL << g) <= h.n()) ++g;
  std::vector<std::uint64_t> per_level(g + 1, 0);
  for (std::size_t pi = 0; pi < d.pieces.size(); ++pi) {
    const auto& piece = d.pieces[pi];
    const std::string tag = "piece " + std::to_string(pi);
    if (piece.level < 0 || piece.level > g) {
      report("level", tag + " has level " + std::to_string(piece.level) + " outside [0, g]");
      continue;
    }
    ++per_level[piece.level];
    const auto& iv = piece.intervals;
    if (static_cast<int>(iv.size()) < d.k) report("intersection", tag + " has fewer than k intervals");
    const long long cap = (static_cast<long long>(h.n()) + (1LL << piece.level) - 1) >> piece.level;
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (iv[i].lo > iv[i].hi || (i > 0 && iv[i - 1].hi >= iv[i].lo)) {
        report("containment", tag + " intervals are not increasing and disjoint");
      }
      if (iv[i].hi - iv[i].lo + 1 > cap) report("part-size", tag + " interval exceeds ceil(n / 2^level)");
    }
    for (auto e : piece.sub.edges()) {
      for (auto v : e) {
        bool inside = false;
        for (const auto& I : iv) inside = inside || (I.lo <= v && v <= I.hi);
        if (!inside) report("containment", tag + " edge " + to_string(e) + " leaves the intervals");
      }
      for (const auto& I : iv) {
        bool hit = false;
        for (auto v : e) hit = hit || (I.lo <= v && v <= I.hi);
        if (!hit) report("intersection", tag + " edge " + to_string(e) + " misses an interval");
      }
      if (naive_edge_level(e, h.n(), d.k) != piece.level) {
        report("level", tag + " edge " + to_string(e) + " belongs to another level");
      }
    }
  }
  for (int i = 0; i <= g; ++i) {
    const auto bound = piece_count_bound(i, d.k, h.r());
    if (per_level[i] > bound) {
      report("count", "level " + std::to_string(i) + " has " + std::to_string(per_level[i]) + " pieces, bound " +
                          std::to_string(bound));
    }
    const std::uint64_t claimed = i < static_cast<int>(d.per_level_counts.size()) ? d.per_level_counts[i] : 0;
    if (claimed != per_level[i]) report("count", "level " + std::to_string(i) + " count is misreported");
  }
  return rep;
}

Json to_json(const ExtremalResult& r) {
  Json j;
  j["max"] = r.max;
  j["witness"] = to_json(r.witness);
  return j;
}

Json to_json(const DecompositionReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
  j["violations"] = std::move(v);
  return j;
}

}  // namespace ordsplit
