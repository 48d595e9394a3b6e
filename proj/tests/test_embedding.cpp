#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ordsplit/combinatorics.hpp"
#include "ordsplit/constructions.hpp"
#include "ordsplit/embedding.hpp"
#include "property.hpp"

using namespace ordsplit;

namespace {

using Edges = std::vector<Edge>;

OrderedHypergraph make(int n, int r, Edges edges) { return OrderedHypergraph::from_edges(n, r, edges); }

// Independent check of an embedding whose parts make the copy interval
// r-partite: injective on the support, every image is a host edge, and every
// image meets each part exactly once.
bool partite_copy(const OrderedHypergraph& host, const OrderedHypergraph& f, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != f.n()) return false;
  if (static_cast<int>(e.parts.size()) != f.r()) return false;
  for (std::size_t i = 1; i < e.parts.size(); ++i) {
    if (e.parts[i - 1].hi >= e.parts[i].lo) return false;
  }
  std::set<Vertex> seen;
  for (auto v : f.support()) {
    const Vertex x = e.map[v - 1];
    if (x < 1 || x > host.n() || !seen.insert(x).second) return false;
  }
  for (auto fe : f.edges()) {
    Edge img;
    for (auto v : fe) img.push_back(e.map[v - 1]);
    std::sort(img.begin(), img.end());
    if (!host.contains_edge(img)) return false;
    for (const auto& p : e.parts) {
      if (std::count_if(img.begin(), img.end(), [&](Vertex v) { return p.contains(v); }) != 1) return false;
    }
  }
  return true;
}

OrderedHypergraph random_forest(prop::Rng& rng, int edges) {
  // Random tree on edges + 1 vertices, then drop edges until a forest with the
  // requested count remains; labels shuffled.
  const int n = edges + 1 + prop::uniform(rng, 0, 2);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  Edges out;
  for (int v = 1; v < n; ++v) {
    const int parent = prop::uniform(rng, 0, v - 1);
    Edge e{label[parent], label[v]};
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  std::shuffle(out.begin(), out.end(), rng);
  out.resize(edges);
  return make(n, 2, out);
}

OrderedHypergraph random_tight_tree(prop::Rng& rng, int r, int steps) {
  TreeBuildScript s{r, {}};
  auto tree = tight_tree(s);
  for (int i = 0; i < steps; ++i) {
    const auto sh = shadow(tree).edge_list();
    s.steps.push_back(sh[prop::uniform(rng, 0, static_cast<int>(sh.size()) - 1)]);
    tree = tight_tree(s);
  }
  return tree;
}

}  // namespace

TEST_CASE("embed_forest_ordered") {
  const auto k8 = random_hypergraph_p(8, 2, 1.0, 1);
  auto e = embed_forest_ordered(k8, make(2, 2, {{1, 2}}));
  REQUIRE(e.has_value());
  CHECK(e->map == std::vector<Vertex>{1, 2});
  CHECK(partite_copy(k8, make(2, 2, {{1, 2}}), *e));

  const auto path = make(3, 2, {{1, 2}, {2, 3}});
  e = embed_forest_ordered(k8, path);
  REQUIRE(e.has_value());
  CHECK(partite_copy(k8, path, *e));

  CHECK_FALSE(embed_forest_ordered(OrderedHypergraph(5, 2), path).has_value());
  CHECK_THROWS_AS(embed_forest_ordered(k8, make(3, 2, {{1, 2}, {1, 3}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(embed_forest_ordered(k8, OrderedHypergraph(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(embed_forest_ordered(make(3, 3, {{1, 2, 3}}), path), std::invalid_argument);

  // Two components: completion to a tree must still give a valid copy.
  const auto two = make(5, 2, {{1, 2}, {4, 5}});
  e = embed_forest_ordered(random_hypergraph_p(20, 2, 1.0, 1), two);
  REQUIRE(e.has_value());
  CHECK(partite_copy(random_hypergraph_p(20, 2, 1.0, 1), two, *e));
}

TEST_CASE("property: dense graphs always receive the forest") {
  prop::for_cases(901, 40, [](prop::Rng& rng) {
    const int k = prop::uniform(rng, 1, 4);
    const int n = 4 * k * k + 2 + prop::uniform(rng, 0, 10);
    const auto need = static_cast<std::uint64_t>(2 * k * k * n) + 1;
    const auto total = binomial(n, 2);
    REQUIRE(need <= total);
    const auto m = std::uniform_int_distribution<std::uint64_t>(need, total)(rng);
    const auto host = random_hypergraph(n, 2, m, rng());
    const auto f = random_forest(rng, k);
    const auto e = embed_forest_ordered(host, f);
    REQUIRE(e.has_value());
    CHECK(partite_copy(host, f, *e));
  });
}

TEST_CASE("property: whatever the forest routine returns is a valid copy") {
  prop::for_cases(902, 100, [](prop::Rng& rng) {
    const int n = prop::uniform(rng, 2, 16);
    const auto host = prop::random_graph(rng, n, 2, 60);
    const auto f = random_forest(rng, prop::uniform(rng, 1, 4));
    const auto e = embed_forest_ordered(host, f);
    if (e) CHECK(partite_copy(host, f, *e));
  });
}

TEST_CASE("check_structure") {
  const auto h = make(5, 3, {{1, 2, 4}, {1, 3, 5}});
  CHECK_NOTHROW(check_structure(h, {{{1, 3}, {4, 5}}, 0}));
  CHECK_THROWS_AS(check_structure(h, {{{1, 3}, {4, 5}}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_structure(h, {{{1, 3}}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_structure(h, {{{1, 4}, {4, 5}}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_structure(make(5, 3, {{1, 4, 5}}), {{{1, 3}, {4, 5}}, 0}), std::invalid_argument);
}

TEST_CASE("random_structured_host") {
  const auto s = random_structured_host(3, {3, 2}, 0, 1.0, 5);
  CHECK(s.host.n() == 5);
  CHECK(s.host.edge_count() == 6);
  CHECK(s.structure.parts == std::vector<Interval>{{1, 3}, {4, 5}});
  CHECK_NOTHROW(check_structure(s.host, s.structure));
  CHECK(random_structured_host(4, {3, 4, 2}, 1, 0.5, 9).host == random_structured_host(4, {3, 4, 2}, 1, 0.5, 9).host);
  CHECK_THROWS_AS(random_structured_host(3, {1, 2}, 0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_structured_host(3, {3}, 0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_structured_host(3, {3, 3}, 0, 1.5, 1), std::invalid_argument);
}

TEST_CASE("embed_tight_tree") {
  const auto s = random_structured_host(3, {20, 12}, 0, 1.0, 1);
  const auto edge = make(3, 3, {{1, 2, 3}});
  auto e = embed_tight_tree(s.host, s.structure, edge);
  REQUIRE(e.has_value());
  CHECK(partite_copy(s.host, edge, *e));

  const auto two = tight_tree({3, {{2, 3}}});
  e = embed_tight_tree(s.host, s.structure, two);
  REQUIRE(e.has_value());
  CHECK(partite_copy(s.host, two, *e));

  // Graph case: one part, doubled; the host is a complete graph.
  const auto g = random_structured_host(2, {40}, 0, 1.0, 1);
  const auto star = make(4, 2, {{1, 2}, {1, 3}, {1, 4}});
  e = embed_tight_tree(g.host, g.structure, star);
  REQUIRE(e.has_value());
  CHECK(partite_copy(g.host, star, *e));

  CHECK_FALSE(embed_tight_tree(random_structured_host(3, {3, 2}, 0, 0.0, 1).host, {{{1, 3}, {4, 5}}, 0}, edge));
  CHECK_THROWS_AS(embed_tight_tree(s.host, s.structure, loose_triangle(3)), std::invalid_argument);
  CHECK_THROWS_AS(embed_tight_tree(s.host, s.structure, make(2, 2, {{1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(embed_tight_tree(s.host, {{{1, 10}}, 0}, edge), std::invalid_argument);
}

TEST_CASE("property: dense structured hosts always receive the tree") {
  // r = 2 keeps the threshold 2 t^2 n within reach of small complete-ish graphs.
  prop::for_cases(903, 20, [](prop::Rng& rng) {
    const int steps = prop::uniform(rng, 0, 3);
    const int t = 2 + steps;
    const int n = 5 * t * t + prop::uniform(rng, 0, 8);
    const auto tree = random_tight_tree(rng, 2, steps);
    StructuredSample s;
    do {
      s = random_structured_host(2, {n}, 0, 0.97, rng());
    } while (s.host.edge_count() <= static_cast<std::uint64_t>(2 * t * t * n));
    const auto e = embed_tight_tree(s.host, s.structure, tree);
    REQUIRE(e.has_value());
    CHECK(partite_copy(s.host, tree, *e));
  });
  // One 3-uniform host above the threshold for a single edge (t = 3).
  const auto s = random_structured_host(3, {45, 90}, 1, 1.0, 7);
  REQUIRE(s.host.edge_count() > 2 * 9 * binomial(135, 2));
  const auto e = embed_tight_tree(s.host, s.structure, make(3, 3, {{1, 2, 3}}));
  REQUIRE(e.has_value());
  CHECK(partite_copy(s.host, make(3, 3, {{1, 2, 3}}), *e));
}

TEST_CASE("property: whatever the tree routine returns is a valid copy") {
  prop::for_cases(904, 60, [](prop::Rng& rng) {
    const int r = prop::uniform(rng, 2, 4);
    std::vector<int> sizes(r - 1);
    const int doubled = prop::uniform(rng, 0, r - 2);
    for (int i = 0; i < r - 1; ++i) sizes[i] = prop::uniform(rng, i == doubled ? 2 : 1, 7);
    const auto s = random_structured_host(r, sizes, doubled, 0.6, rng());
    const auto tree = random_tight_tree(rng, r, prop::uniform(rng, 0, 3));
    const auto e = embed_tight_tree(s.host, s.structure, tree);
    if (e) CHECK(partite_copy(s.host, tree, *e));
  });
}
