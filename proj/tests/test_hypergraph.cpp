#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordsplit/hypergraph.hpp"
#include "ordsplit/json_io.hpp"
#include "property.hpp"

using namespace ordsplit;

namespace {

OrderedHypergraph make(int n, int r, std::vector<Edge> edges) { return OrderedHypergraph::from_edges(n, r, edges); }

bool subset_of(EdgeView small, EdgeView big) { return std::includes(big.begin(), big.end(), small.begin(), small.end()); }

}  // namespace

TEST_CASE("validate reports the first violated invariant") {
  CHECK_FALSE(validate(OrderedHypergraph::unchecked(4, 2, {{1, 2}, {3, 4}})).has_value());

  auto v = validate(OrderedHypergraph::unchecked(4, 2, {{2, 1}}));
  REQUIRE(v.has_value());
  CHECK(v->what == "edge not strictly increasing");
  CHECK(v->edge == Edge{2, 1});

  v = validate(OrderedHypergraph::unchecked(3, 2, {{1, 4}}));
  REQUIRE(v.has_value());
  CHECK(v->what == "vertex out of range");

  v = validate(OrderedHypergraph::unchecked(4, 2, {{1, 2}, {3, 4}, {1, 2}}));
  REQUIRE(v.has_value());
  CHECK(v->what == "duplicate edge");
}

TEST_CASE("constructors reject malformed edge lists instead of repairing them") {
  CHECK_THROWS_AS(make(4, 2, {{1, 2}, {1, 2}}), InvalidHypergraph);
  CHECK_THROWS_AS(make(4, 2, {{3, 3}}), InvalidHypergraph);
  CHECK_THROWS_AS(make(4, 2, {{1, 2, 3}}), InvalidHypergraph);
  CHECK_THROWS_AS(OrderedHypergraph(2, 3), InvalidHypergraph);
  // Outer order is normalised.
  CHECK(make(4, 2, {{3, 4}, {1, 2}}).edge_list() == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("density") {
  auto k4 = make(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto d = density(k4, 2);
  CHECK(d.d == doctest::Approx(0.375));
  REQUIRE(d.exact.has_value());
  CHECK(*d.exact == Rational(3, 8));
  CHECK(density(k4, 1).d == doctest::Approx(1.5));
  CHECK(density(OrderedHypergraph(5, 3), 2.5).d == 0.0);
  CHECK_FALSE(density(k4, 1.5).exact.has_value());
  CHECK_THROWS_AS(density(k4, 0), std::invalid_argument);
  CHECK_THROWS_AS(density(k4, -1), std::invalid_argument);
}

TEST_CASE("link") {
  CHECK(link(make(5, 3, {{1, 2, 3}, {1, 4, 5}}), 1).edge_list() == std::vector<Edge>{{2, 3}, {4, 5}});
  CHECK(link(make(4, 3, {{1, 2, 3}}), 4).empty());
  CHECK(link(make(4, 3, {{1, 2, 3}, {2, 3, 4}}), 3).edge_list() == std::vector<Edge>{{1, 2}, {2, 4}});
  CHECK_THROWS_AS(link(make(3, 1, {{1}}), 1), std::invalid_argument);
}

TEST_CASE("shadow") {
  CHECK(shadow(make(3, 3, {{1, 2, 3}})).edge_list() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(shadow(OrderedHypergraph(4, 3)).empty());
  CHECK(shadow(make(4, 3, {{1, 2, 3}, {2, 3, 4}})).edge_list() ==
        std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(shadow(make(3, 1, {{2}})), std::invalid_argument);
}

TEST_CASE("induced keeps labels") {
  CHECK(induced(make(4, 2, {{1, 2}, {3, 4}}), {1, 2, 3}).edge_list() == std::vector<Edge>{{1, 2}});
  auto h = make(4, 2, {{1, 3}, {2, 4}});
  CHECK(induced(h, {1, 2, 3, 4}) == h);
  CHECK(induced(h, {1, 3, 4}).edge_list() == std::vector<Edge>{{1, 3}});
  CHECK(induced(h, {1, 3, 4}).n() == 4);
}

TEST_CASE("random_hypergraph") {
  CHECK(random_hypergraph(5, 2, 10, 7).edge_count() == 10);
  CHECK(random_hypergraph(5, 2, 0, 7).empty());
  CHECK(random_hypergraph(30, 3, 200, 99) == random_hypergraph(30, 3, 200, 99));
  CHECK_FALSE(random_hypergraph(30, 3, 200, 99) == random_hypergraph(30, 3, 200, 100));
  CHECK_THROWS_AS(random_hypergraph(5, 2, 11, 1), std::invalid_argument);
  // The sampling path for huge C(n, r) must still produce distinct edges.
  auto big = random_hypergraph(2000, 4, 500, 3);
  CHECK(big.edge_count() == 500);
  CHECK_FALSE(validate(big).has_value());
  CHECK(random_hypergraph_p(6, 2, 1.0, 1).edge_count() == 15);
  CHECK(random_hypergraph_p(6, 2, 0.0, 1).empty());
}

TEST_CASE("property: random instances validate; shadow, link and induced laws") {
  prop::for_cases(101, 200, [](prop::Rng& rng) {
    const int n = prop::uniform(rng, 2, 14);
    const int r = prop::uniform(rng, 2, std::min(n, 5));
    const auto h = prop::random_graph(rng, n, r, 300);
    CHECK_FALSE(validate(h).has_value());

    const auto sh = shadow(h);
    CHECK(sh.edge_count() <= static_cast<std::uint64_t>(r) * h.edge_count());
    for (auto f : sh.edges()) {
      bool inside = false;
      for (auto e : h.edges()) inside = inside || subset_of(f, e);
      CHECK(inside);
    }

    const Vertex v = prop::uniform(rng, 1, n);
    CHECK(link(h, v).edge_count() == h.degree(v));

    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    CHECK(induced(h, all) == h);
    std::vector<Vertex> s, t;
    for (int i = 1; i <= n; ++i) {
      const int coin = prop::uniform(rng, 0, 2);
      if (coin == 0) s.push_back(i);
      if (coin <= 1) t.push_back(i);
    }
    const auto hs = induced(h, s), ht = induced(h, t);
    for (auto e : hs.edges()) CHECK(ht.contains_edge(e));
  });
}

TEST_CASE("canonical JSON") {
  auto h = make(4, 2, {{3, 4}, {1, 2}});
  CHECK(dump_canonical(h) == R"({"n":4,"r":2,"edges":[[1,2],[3,4]]})");
  CHECK(parse_hypergraph(R"({"n":4,"r":2,"edges":[[3,4],[1,2]],"meta":{"x":1}})") == h);
  CHECK(dump_canonical(OrderedHypergraph(3, 2)) == R"({"n":3,"r":2,"edges":[]})");
  CHECK_THROWS_AS(parse_hypergraph(R"({"n":4,"r":2,"edges":[[2,1]]})"), InvalidHypergraph);
  CHECK_THROWS_AS(parse_hypergraph(R"({"n":4,"r":2,"edges":[[1,5]]})"), InvalidHypergraph);
  CHECK_THROWS_AS(parse_hypergraph(R"({"n":4,"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph(R"({"n":"4","r":2,"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("not json"), std::invalid_argument);
}

TEST_CASE("property: JSON round trip") {
  prop::for_cases(202, 100, [](prop::Rng& rng) {
    const int n = prop::uniform(rng, 1, 20);
    const int r = prop::uniform(rng, 1, std::min(n, 4));
    const auto h = prop::random_graph(rng, n, r, 100);
    CHECK(parse_hypergraph(dump_canonical(h)) == h);
  });
}

TEST_CASE("has_prefix and contains_edge") {
  auto h = make(6, 3, {{1, 2, 5}, {2, 3, 4}, {2, 4, 6}});
  const Vertex p1[] = {2, 4};
  const Vertex p2[] = {3};
  const Vertex p3[] = {2, 3, 4};
  const Vertex p4[] = {2, 3, 5};
  CHECK(h.has_prefix(p1));
  CHECK_FALSE(h.has_prefix(p2));
  CHECK(h.contains_edge(p3));
  CHECK_FALSE(h.contains_edge(p4));
  CHECK(h.support() == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
  CHECK(h.degree(2) == 3);
}
