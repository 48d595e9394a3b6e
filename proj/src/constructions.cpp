#include "ordsplit/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ordsplit/combinatorics.hpp"

namespace ordsplit {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void append(std::vector<Vertex>& flat, const std::vector<Vertex>& e) {
  flat.insert(flat.end(), e.begin(), e.end());
}

}  // namespace

OrderedHypergraph lemma1_graph(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, "lemma1_graph: need n1, n2 >= 1");
  std::vector<Vertex> flat;
  for (int i = 1; i <= n1; ++i) {
    for (int j = n1 + 1; j <= n1 + n2; ++j) {
      if (is_power_of_two(j - i)) append(flat, {i, j});
    }
  }
  return OrderedHypergraph::from_flat(n1 + n2, 2, std::move(flat));
}

OrderedHypergraph construction1(int n, int r, int k) {
  require(2 <= k && k <= r && r <= n, "construction1: need 2 <= k <= r <= n");
  const int constrained = r - k + 1;
  std::vector<Vertex> flat;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self) -> void {
    const int len = static_cast<int>(cur.size());
    if (len == r) {
      append(flat, cur);
      return;
    }
    const int last = len == 0 ? 0 : cur.back();
    // Leave room for the remaining r - len - 1 vertices.
    const int hi = n - (r - len - 1);
    if (len > 0 && len <= constrained) {
      for (int step = 1; last + step <= hi; step *= 2) {
        cur.push_back(last + step);
        self(self);
        cur.pop_back();
      }
    } else {
      for (int v = last + 1; v <= hi; ++v) {
        cur.push_back(v);
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return OrderedHypergraph::from_flat(n, r, std::move(flat));
}

OrderedHypergraph construction2(int n, int r, int k) {
  require(2 <= k && k <= r && n >= 1, "construction2: need 2 <= k <= r and n >= 1");
  const int block = r - k + 2;
  const int free_coords = k - 2;
  std::vector<Vertex> flat;
  std::vector<int> pick(free_coords, 1);  // offsets inside each band, 1..n
  for (int j = 1; j <= n; ++j) {
    std::fill(pick.begin(), pick.end(), 1);
    while (true) {
      std::vector<Vertex> e;
      for (int t = 0; t < block; ++t) e.push_back(block * j - (block - 1) + t);
      for (int c = 0; c < free_coords; ++c) {
        const int band = r - k + 3 + c;  // l
        e.push_back((band - 1) * n + pick[c]);
      }
      append(flat, e);
      int c = free_coords - 1;
      while (c >= 0 && pick[c] == n) pick[c--] = 1;
      if (c < 0) break;
      ++pick[c];
    }
  }
  return OrderedHypergraph::from_flat(r * n, r, std::move(flat));
}

OrderedHypergraph construction3(int n, int r) {
  require(1 <= r && r <= n, "construction3: need 1 <= r <= n");
  std::vector<Vertex> flat;
  for (int i = 1; i + r - 1 <= n; ++i) {
    for (int t = 0; t < r; ++t) flat.push_back(i + t);
  }
  return OrderedHypergraph::from_flat(n, r, std::move(flat));
}

OrderedHypergraph construction4(int n, int r, int ell) {
  require(n >= 1, "construction4: need n >= 1");
  require(ell != 0, "construction4: ell = 0 is the crossing-pair problem, use ekr_extremal_family");
  require(1 <= ell && ell <= r - 1, "construction4: need 1 <= ell <= r - 1");
  const int top = r - ell - 1;
  const int pairs = ell % 2 == 1 ? (ell + 1) / 2 : ell / 2 - 1;
  const bool with_triple = ell % 2 == 0;
  require(pairs >= 0 && top >= 0, "construction4: parameters give a negative block count");

  // Pairs live in [1, 2n], triples in [2n+1, 5n], the top block is (5n, 6n].
  std::vector<Vertex> flat;
  const int triples = with_triple ? n : 1;
  for (int t = 1; t <= triples; ++t) {
    for_each_combination(1, n, pairs, [&](const std::vector<int>& ps) {
      for_each_combination(5 * n + 1, 6 * n, top, [&](const std::vector<int>& ts) {
        std::vector<Vertex> e;
        for (int i : ps) {
          e.push_back(2 * i - 1);
          e.push_back(2 * i);
        }
        if (with_triple) {
          for (int s = 2; s >= 0; --s) e.push_back(2 * n + 3 * t - s);
        }
        e.insert(e.end(), ts.begin(), ts.end());
        append(flat, e);
        return true;
      });
      return true;
    });
  }
  return OrderedHypergraph::from_flat(6 * n, r, std::move(flat));
}

OrderedHypergraph tight_path(int kk, int r) {
  require(kk >= 1 && r >= 1, "tight_path: need kk >= 1 and r >= 1");
  return construction3(kk + r - 1, r);
}

OrderedHypergraph zigzag_path(int kk, int r) {
  require(kk >= 1 && r >= 2, "zigzag_path: need kk >= 1 and r >= 2");
  const int count = kk + r - 1;  // path vertices v_0 .. v_{count-1}
  std::vector<Vertex> label(count);
  int next = 1;
  for (int cls = 0; cls < r; ++cls) {
    std::vector<int> members;
    for (int j = cls; j < count; j += r) members.push_back(j);
    if (cls % 2 == 1) std::reverse(members.begin(), members.end());
    for (int j : members) label[j] = next++;
  }
  std::vector<Vertex> flat;
  for (int i = 0; i < kk; ++i) {
    std::vector<Vertex> e;
    for (int t = 0; t < r; ++t) e.push_back(label[i + t]);
    std::sort(e.begin(), e.end());
    append(flat, e);
  }
  return OrderedHypergraph::from_flat(count, r, std::move(flat));
}

OrderedHypergraph canonical_simplex(int d, int r) {
  require(d >= 1 && r >= d, "canonical_simplex: need r >= d >= 1");
  const int core = d + 1;
  int fresh = core + 1;
  std::vector<Vertex> flat;
  for (int i = 1; i <= core; ++i) {
    std::vector<Vertex> e;
    for (int v = 1; v <= core; ++v) {
      if (v != i) e.push_back(v);
    }
    for (int p = 0; p < r - d; ++p) e.push_back(fresh++);
    append(flat, e);
  }
  return OrderedHypergraph::from_flat(fresh - 1, r, std::move(flat));
}

OrderedHypergraph expansion(const OrderedHypergraph& f) {
  // An empty F on r vertices would leave an (r+1)-graph on r vertices.
  require(!f.empty(), "expansion: F has no edges");
  std::vector<Vertex> flat;
  Vertex fresh = f.n() + 1;
  for (auto e : f.edges()) {
    flat.insert(flat.end(), e.begin(), e.end());
    flat.push_back(fresh++);
  }
  return OrderedHypergraph::from_flat(fresh - 1, f.r() + 1, std::move(flat));
}

OrderedHypergraph tight_tree(const TreeBuildScript& script) {
  const int r = script.r;
  require(r >= 1, "tight_tree: need r >= 1");
  std::vector<Edge> edges;
  Edge first(r);
  for (int i = 0; i < r; ++i) first[i] = i + 1;
  edges.push_back(first);
  std::set<Edge> shadow_sets;
  auto add_shadow = [&](const Edge& e) {
    for (int skip = 0; skip < r; ++skip) {
      Edge f;
      for (int j = 0; j < r; ++j) {
        if (j != skip) f.push_back(e[j]);
      }
      shadow_sets.insert(std::move(f));
    }
  };
  add_shadow(first);
  Vertex fresh = r + 1;
  for (const auto& step : script.steps) {
    Edge f = step;
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) != r - 1 || !shadow_sets.count(f)) {
      throw std::invalid_argument("tight_tree: step " + to_string(step) + " is not in the shadow");
    }
    f.push_back(fresh++);
    edges.push_back(f);
    add_shadow(f);
  }
  return OrderedHypergraph::from_edges(fresh - 1, r, edges);
}

OrderedHypergraph loose_triangle(int r) {
  require(r >= 2, "loose_triangle: need r >= 2");
  const int count = r == 2 ? 3 : 3 * (r - 1);
  std::vector<Vertex> flat;
  for (int t = 0; t < 3; ++t) {
    std::vector<Vertex> e;
    for (int j = 0; j < r; ++j) e.push_back((t * (r - 1) + j) % count + 1);
    std::sort(e.begin(), e.end());
    append(flat, e);
  }
  return OrderedHypergraph::from_flat(count, r, std::move(flat));
}

OrderedHypergraph ekr_extremal_family(int n, int r) {
  require(1 <= r && r <= n, "ekr_extremal_family: need 1 <= r <= n");
  std::vector<Vertex> flat;
  for_each_combination(1, n, r, [&](const std::vector<int>& c) {
    bool keep = c.front() == 1;
    for (int i = 0; i + 1 < r && !keep; ++i) keep = c[i + 1] == c[i] + 1;
    if (keep) append(flat, c);
    return true;
  });
  return OrderedHypergraph::from_flat(n, r, std::move(flat));
}

}  // namespace ordsplit
