#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordsplit/rational.hpp"

namespace ordsplit {

using Vertex = int;
using Edge = std::vector<Vertex>;
using EdgeView = std::span<const Vertex>;

// The consecutive vertices {lo, lo+1, ..., hi}.
struct Interval {
  Vertex lo = 1;
  Vertex hi = 1;

  int length() const { return hi - lo + 1; }
  bool contains(Vertex v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

struct Violation {
  std::string what;
  std::size_t edge_index = 0;
  Edge edge;
};

class InvalidHypergraph : public std::invalid_argument {
 public:
  explicit InvalidHypergraph(const Violation& v);
  Violation violation;
};

// An r-uniform hypergraph on the vertices 1..n in natural order.
//
// Edges live in one flat buffer, r entries per edge. Hypergraphs produced by
// this library are canonical: edges strictly increasing and sorted
// lexicographically. `unchecked` exists so that malformed inputs can be
// represented and reported by `validate`.
class OrderedHypergraph {
 public:
  class EdgeIterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeView;
    using difference_type = std::ptrdiff_t;
    using reference = EdgeView;
    using pointer = void;

    EdgeIterator() = default;
    EdgeIterator(const Vertex* p, int r) : p_(p), r_(r) {}
    EdgeView operator*() const { return {p_, static_cast<std::size_t>(r_)}; }
    EdgeIterator& operator++() { p_ += r_; return *this; }
    EdgeIterator operator++(int) { auto t = *this; p_ += r_; return t; }
    bool operator==(const EdgeIterator& o) const { return p_ == o.p_; }

   private:
    const Vertex* p_ = nullptr;
    int r_ = 1;
  };

  struct EdgeRange {
    EdgeIterator b, e;
    EdgeIterator begin() const { return b; }
    EdgeIterator end() const { return e; }
  };

  OrderedHypergraph() = default;
  OrderedHypergraph(int n, int r);

  // Sorts and validates; throws InvalidHypergraph on any violation.
  static OrderedHypergraph from_edges(int n, int r, const std::vector<Edge>& edges);
  static OrderedHypergraph from_flat(int n, int r, std::vector<Vertex> flat);
  static OrderedHypergraph unchecked(int n, int r, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t edge_count() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  EdgeView edge(std::size_t i) const {
    return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  EdgeRange edges() const {
    return {EdgeIterator(flat_.data(), r_),
            EdgeIterator(flat_.data() + flat_.size(), r_)};
  }
  std::vector<Edge> edge_list() const;
  const std::vector<Vertex>& flat() const { return flat_; }

  // Binary search; requires canonical order.
  bool contains_edge(EdgeView e) const;
  // True when some edge starts with `prefix`; requires canonical order.
  bool has_prefix(EdgeView prefix) const;

  std::uint64_t degree(Vertex v) const;
  // Vertices that lie in at least one edge, ascending.
  std::vector<Vertex> support() const;

  bool operator==(const OrderedHypergraph&) const = default;

 private:
  void sort_edges();

  int n_ = 0;
  int r_ = 0;
  std::vector<Vertex> flat_;
};

using OrderedPattern = OrderedHypergraph;

struct DensityParams {
  double alpha = 0;
  double d = 0;
  // Set when alpha is an integer.
  std::optional<Rational> exact;
};

std::optional<Violation> validate(const OrderedHypergraph& h);

// d = e(H) / n^alpha. Throws std::invalid_argument when alpha <= 0.
DensityParams density(const OrderedHypergraph& h, double alpha);

// Edges {e - v : v in e}; uniformity r-1 on the same vertex set.
OrderedHypergraph link(const OrderedHypergraph& h, Vertex v);

// All (r-1)-sets contained in some edge.
OrderedHypergraph shadow(const OrderedHypergraph& h);

// Edges entirely inside `keep`. Vertices keep their labels.
OrderedHypergraph induced(const OrderedHypergraph& h, const std::vector<Vertex>& keep);

// Uniform model: `edge_count` distinct r-sets drawn without replacement.
OrderedHypergraph random_hypergraph(int n, int r, std::uint64_t edge_count,
                                    std::uint64_t seed);
// Binomial model: each r-set independently with probability p.
OrderedHypergraph random_hypergraph_p(int n, int r, double p, std::uint64_t seed);

std::string to_string(EdgeView e);

}  // namespace ordsplit
