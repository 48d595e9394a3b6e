#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordsplit/exec.hpp"
#include "ordsplit/hypergraph.hpp"
#include "ordsplit/patterns.hpp"
#include "ordsplit/splitting.hpp"

namespace ordsplit {

// What a family must avoid.
struct ForbiddenSpec {
  enum class Kind { none, crossing_pair, two_disjoint_edges, ord_of, patterns };
  Kind kind = Kind::none;
  OrderedHypergraph f;                    // Kind::ord_of
  std::vector<OrderedPattern> patterns;   // Kind::patterns

  static ForbiddenSpec nothing() { return {}; }
  static ForbiddenSpec crossing() { return {Kind::crossing_pair, {}, {}}; }
  static ForbiddenSpec two_disjoint() { return {Kind::two_disjoint_edges, {}, {}}; }
  static ForbiddenSpec ord(OrderedHypergraph f) { return {Kind::ord_of, std::move(f), {}}; }
  static ForbiddenSpec ordered(std::vector<OrderedPattern> ps) { return {Kind::patterns, {}, std::move(ps)}; }

  std::string name() const;
};

struct OracleLimits {
  int max_candidate_sets = 36;   // C(n, r) cap for brute_ex_ordered
  int max_host_vertices = 10;    // cap for naive_contains
  SearchLimits search;
};

class OracleCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExtremalResult {
  std::uint64_t max = 0;
  OrderedHypergraph witness;
};

// Exact maximum number of r-sets of [n] avoiding `spec`. Candidates are the
// r-sets in colex order; the search tries "include" before "exclude", and the
// witness is the first maximiser in that order, whatever the thread count.
ExtremalResult brute_ex_ordered(int n, int r, const ForbiddenSpec& spec, Exec exec = Exec::parallel,
                                const OracleLimits& limits = {});

bool is_free(const OrderedHypergraph& h, const ForbiddenSpec& spec, const SearchLimits& limits = {});

struct DecompositionViolation {
  std::string kind;  // cover, disjoint, containment, intersection, part-size, count, level
  std::string detail;
};

struct DecompositionReport {
  std::vector<DecompositionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Rechecks a decomposition from scratch without the patterns module.
DecompositionReport verify_decomposition(const OrderedHypergraph& h, const Decomposition& d);

// Scans levels 0..g and counts met intervals directly.
int naive_edge_level(EdgeView e, int n, int k);

// Tries every strictly increasing map. Throws OracleCapExceeded when the host
// has more than limits.max_host_vertices vertices.
bool naive_contains(const OrderedHypergraph& host, const OrderedPattern& pattern, const OracleLimits& limits = {});

Json to_json(const ExtremalResult& r);
Json to_json(const DecompositionReport& r);

}  // namespace ordsplit
