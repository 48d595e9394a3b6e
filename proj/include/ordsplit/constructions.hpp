#pragma once

#include <vector>

#include "ordsplit/hypergraph.hpp"

namespace ordsplit {

// Recipe for a tight tree: the first edge is {1..r}; step t names an
// (r-1)-set from the shadow of the tree built so far, and the new edge is
// that set plus the next fresh vertex.
struct TreeBuildScript {
  int r = 2;
  std::vector<Edge> steps;
};

// Bipartite graph on [n1 + n2] with parts [1, n1] and [n1+1, n1+n2]; ij is an
// edge iff j - i is a power of two (1 included).
OrderedHypergraph lemma1_graph(int n1, int n2);

// Increasing r-tuples whose first r-k+1 consecutive gaps are powers of two.
OrderedHypergraph construction1(int n, int r, int k);

// Vertex set [rn]: blocks of r-k+2 consecutive vertices, each completed by one
// free vertex from every later band ((l-1)n, ln], l = r-k+3..r.
OrderedHypergraph construction2(int n, int r, int k);

// The n-r+1 windows [i, i+r-1].
OrderedHypergraph construction3(int n, int r);

// Matching-based ord(I^r(ell))-free family on [6n]; see the README for the
// exact block layout.
OrderedHypergraph construction4(int n, int r, int ell);

OrderedHypergraph tight_path(int kk, int r);

// Tight path with the vertices renumbered so that the residue classes mod r
// form consecutive intervals, ascending for even classes and descending for
// odd ones.
OrderedHypergraph zigzag_path(int kk, int r);

// Core vertices 1..d+1; edge i is the core minus i, padded with r-d fresh
// vertices of its own.
OrderedHypergraph canonical_simplex(int d, int r);

// Adds a distinct fresh vertex to every edge; fresh vertices follow the
// existing ones, in edge order. Throws when F has no edges.
OrderedHypergraph expansion(const OrderedHypergraph& f);

// Throws std::invalid_argument when a step is not in the current shadow.
OrderedHypergraph tight_tree(const TreeBuildScript& script);

// Three edges on 3(r-1) vertices (3 when r = 2) arranged around a cycle.
OrderedHypergraph loose_triangle(int r);

// r-subsets of [n] that contain vertex 1 or two consecutive integers. The
// complement is the C(n-r, r) sets inside [2, n] without consecutive
// integers, and no two kept sets alternate v1 < w1 < ... < vr < wr.
OrderedHypergraph ekr_extremal_family(int n, int r);
inline bool ekr_in_range(int n, int r) { return n >= 2 * r + 1; }

}  // namespace ordsplit
