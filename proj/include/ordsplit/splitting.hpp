#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordsplit/exec.hpp"
#include "ordsplit/hypergraph.hpp"
#include "ordsplit/json_io.hpp"
#include "ordsplit/rational.hpp"

namespace ordsplit {

// floor(log2 n) for n >= 1.
int floor_log2(std::uint64_t n);

// Level-i partition of [n]: intervals of length 2^(g-i) laid out from vertex 1,
// the last one possibly shorter and containing n.
struct DyadicPartition {
  int n = 0;
  int g = 0;
  int level = 0;
  std::vector<Interval> intervals;
};

DyadicPartition dyadic_partition(int n, int level);

// Minimum level at which e meets at least k intervals of the dyadic partition.
int edge_level(EdgeView e, int n, int k);

// One signature class of a level: every edge meets exactly the intervals in
// `signature` (0-based indices into the level partition) and nothing else.
struct Piece {
  int level = 0;
  std::vector<int> signature;
  std::vector<Interval> intervals;
  OrderedHypergraph sub;

  int max_part() const;
};

struct Decomposition {
  int n = 0;
  int r = 0;
  int k = 0;
  int g = 0;
  std::vector<Piece> pieces;                 // ordered by (level, signature)
  std::vector<std::uint64_t> per_level_counts;  // t_i for i = 0..g
};

// Per-edge levels; the serial and parallel kernels agree exactly.
std::vector<int> edge_levels(const OrderedHypergraph& h, int k, Exec exec = Exec::parallel);

Decomposition decompose(const OrderedHypergraph& h, int k, Exec exec = Exec::parallel);

// ceil( sum_{j=k}^{r} C(2k-2, j) * 2^{i(k-1)} / (k-1)! ).
// Throws std::overflow_error when the value exceeds 63 bits.
std::uint64_t piece_count_bound(int level, int k, int r);

// sum_{j=k}^{r} C(2k-2, j)
std::uint64_t split_constant(int k, int r);

struct Constant {
  double value = 0;
  std::optional<Rational> exact;  // present for integer alpha
};

// (k-1)! (1 - 2^{k-1-alpha}) / sum_{j=k}^{r} C(2k-2, j); requires alpha > k-1.
Constant c_value(double alpha, int k, int r);

enum class Regime { log, poly };

struct DenseWitness {
  Piece piece;
  std::int64_t m = 0;  // 2^(g - level), the part-size cap used by the bound
  double alpha = 0;
  Regime regime = Regime::poly;
  DensityParams density;
  double bound = 0;
  std::optional<Rational> bound_exact;  // poly regime with integer alpha
};

DenseWitness extract_dense(const OrderedHypergraph& h, int k, double alpha,
                           Exec exec = Exec::parallel);

struct PrefixReduction {
  Edge prefix;                 // S, size r - k
  OrderedHypergraph reduced;   // uniformity k, same vertex labels
  std::uint64_t support = 0;   // number of edges with f(e) = S
};

// Keeps, for each edge, all but the last of its vertices in every part; the
// most frequent such set S (ties: lexicographically smallest) is removed from
// the edges that produced it. Requires a piece with exactly k parts.
PrefixReduction reduce_by_prefix(const Piece& piece, int k);

std::string to_string(Regime r);

Json to_json(const Decomposition& d);
Json to_json(const DenseWitness& w);

}  // namespace ordsplit
