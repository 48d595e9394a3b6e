#pragma once

#include <optional>
#include <vector>

#include "ordsplit/hypergraph.hpp"
#include "ordsplit/patterns.hpp"

namespace ordsplit {

// Graph case. F must be a forest (throws otherwise); it is first completed to
// a tree on the same vertices. Marks the k smallest and k largest neighbours
// of every host vertex, embeds F minus a leaf in the unmarked graph, then
// re-attaches the leaf through a marked edge. Always succeeds when
// e(H) > 2 k^2 n with k = e(F).
std::optional<Embedding> embed_forest_ordered(const OrderedHypergraph& host, const OrderedHypergraph& f);

// Interval partition X_1 < ... < X_{r-1} of the host where every edge has two
// vertices in X_doubled and one in each other part. `doubled` is 0-based.
struct StructuredHost {
  std::vector<Interval> parts;
  int doubled = 0;
};

// Throws std::invalid_argument naming the first edge that breaks the layout.
void check_structure(const OrderedHypergraph& host, const StructuredHost& s);

// Uniformity r >= 2. T must be a tight tree (throws otherwise). Prunes, for
// every shadow set f, the edges f + x with x among the t smallest or t largest
// completions, embeds T minus its last leaf in what remains, and extends.
// Always succeeds when e(H) > 2 t^2 C(n, r-1) with t = v(T).
std::optional<Embedding> embed_tight_tree(const OrderedHypergraph& host, const StructuredHost& s,
                                          const OrderedHypergraph& tree);

// Structured host for tests and the CLI: parts of the given sizes, the doubled
// part receives pairs, every admissible edge kept with probability p.
struct StructuredSample {
  OrderedHypergraph host;
  StructuredHost structure;
};
StructuredSample random_structured_host(int r, const std::vector<int>& part_sizes, int doubled, double p,
                                        std::uint64_t seed);

}  // namespace ordsplit
