#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordsplit/constructions.hpp"
#include "ordsplit/exec.hpp"
#include "ordsplit/hypergraph.hpp"
#include "ordsplit/json_io.hpp"

namespace ordsplit {

struct SearchLimits {
  int max_pattern_vertices = 12;
};

class PatternTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// map[p - 1] is the host image of pattern vertex p (0 when p is isolated).
// `parts` is filled by the embedding procedures with the interval colouring
// that certifies ord-membership.
struct Embedding {
  std::vector<Vertex> map;
  std::vector<Edge> host_edges;
  std::vector<Interval> parts;
};

// Intervals I_1 < ... < I_l, l >= k, such that every edge lies in their union
// and meets each of them. Returns the witness with the most intervals; gaps
// between used vertices are absorbed into the interval on their left.
std::optional<std::vector<Interval>> interval_kpartite_witness(const OrderedHypergraph& h, int k);

// r intervals with every edge having exactly one vertex in each. A vertex
// shared by several edges counts once for each of them.
std::optional<std::vector<Interval>> exact_r_partite_parts(const std::vector<Edge>& edges);
std::optional<std::vector<Interval>> exact_r_partite_parts(const OrderedHypergraph& h);

struct OrderTypes {
  bool r_partite = true;
  std::vector<OrderedPattern> patterns;  // canonical, lexicographic order
};

// All interval r-partite orderings of F, up to order-isomorphism. F's
// vertex set is taken to be the union of its edges.
OrderTypes ord_order_types(const OrderedHypergraph& f, SearchLimits limits = {});

// Lexicographically first strictly increasing map from pattern vertices into
// the host carrying every pattern edge onto a host edge.
std::optional<Embedding> contains_ordered_pattern(const OrderedHypergraph& host,
                                                  const OrderedPattern& pattern,
                                                  Exec exec = Exec::parallel,
                                                  SearchLimits limits = {});

// First member of ord(F) (in canonical order) that embeds.
std::optional<Embedding> contains_ord(const OrderedHypergraph& host, const OrderedHypergraph& f,
                                      Exec exec = Exec::parallel, SearchLimits limits = {});

using EdgePair = std::pair<Edge, Edge>;

// Two edges v, w with v1 < w1 < v2 < w2 < ... < vr < wr.
std::optional<EdgePair> find_crossing_pair(const OrderedHypergraph& h);
bool is_crossing(EdgeView a, EdgeView b);

// Two edges sharing exactly ell vertices whose union is interval r-partite.
std::optional<EdgePair> find_intersection_pair(const OrderedHypergraph& h, int ell);
bool is_intersection_member(EdgeView a, EdgeView b, int ell);

// Throws std::invalid_argument when |edges| != d + 1.
bool validate_simplex(const std::vector<Edge>& edges, int d);
// Throws std::invalid_argument when |edges| != d + 2.
bool validate_strong_simplex(const std::vector<Edge>& edges, int d);

struct TreeWitness {
  TreeBuildScript script;            // in the relabelled vertex names
  std::vector<std::size_t> edge_order;  // host edge indices in build order
  std::vector<Vertex> relabel;       // relabel[v] = script name of host vertex v
};

std::optional<TreeWitness> validate_tight_tree(const OrderedHypergraph& h);

// Checks that `e` re-validates against host and pattern: strictly increasing,
// every pattern edge mapped to a host edge.
bool embedding_is_valid(const OrderedHypergraph& host, const OrderedPattern& pattern,
                        const Embedding& e);

Json to_json(const Embedding& e);

}  // namespace ordsplit
