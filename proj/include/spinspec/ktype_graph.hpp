#pragma once

#include <vector>

#include "spinspec/rational.hpp"
#include "spinspec/weights.hpp"

namespace spinspec {

// Directed adjacency between two K-types.  The datum x is the half-difference
// of the rough-Laplacian eigenvalues, x = (1/2)(nabla*nabla_dst - nabla*nabla_src),
// and induces the eigenvalue ratio mu_dst / mu_src = (x + r) / (x - r).
struct TransitionEdge {
  KTypeId src;
  KTypeId dst;
  Rational x;
};

bool operator==(const TransitionEdge& a, const TransitionEdge& b);

// The K-type graph of a fixed bundle (n, k), truncated at j <= jmax.
// Edges come in reversed pairs with negated data, so every cycle of
// transition quantities multiplies to 1 for consistent edge data.
//
// Members are deliberately public: fault-injection tests perturb edge data
// directly to confirm that the consistency checks actually bite.
struct KTypeGraph {
  int n = 3;
  int k = 0;
  int jmax = 0;
  std::vector<KTypeId> nodes;        // enumeration order
  std::vector<TransitionEdge> edges; // deterministic emission order
  KTypeId base;                      // normalization node, value 1

  bool has_node(const KTypeId& id) const;
};

// All K-types of the bundle (n,k) with 0 <= j <= jmax, in the fixed order:
// j ascending, then q ascending (k >= 1 only), then eps = +1 before -1.
std::vector<KTypeId> enumerate_ktypes(int n, int k, int jmax);

// The datum x for a pair of adjacent K-types (same n,k; exactly one of
// j +-1, q toggled, or eps flipped).  Throws std::invalid_argument for
// non-adjacent pairs.
Rational edge_datum(const KTypeId& src, const KTypeId& dst);

// Materializes the graph: nodes = enumerate_ktypes(n,k,jmax), every adjacent
// pair inside the truncation connected in both directions, and the base node
// V+(0) (k = 0) or V+(0,1) (k >= 1).
KTypeGraph build_graph(int n, int k, int jmax);

}  // namespace spinspec
