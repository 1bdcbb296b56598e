#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinspec/ktype_graph.hpp"
#include "spinspec/linear_factor_form.hpp"
#include "spinspec/rational.hpp"
#include "spinspec/weights.hpp"

namespace spinspec {

// Eigenvalues mu of the order-2r intertwinor at a fixed rational r, one per
// graph node.  The base node always carries exactly 1.
struct EigenvalueTable {
  Rational r;
  std::map<KTypeId, Rational> values;  // KTypeId order == enumeration order

  const Rational& at(const KTypeId& id) const;
};

// Same, but with mu as an exact rational function of r.
struct SymbolicEigenvalueTable {
  std::map<KTypeId, LinearFactorForm> values;

  const LinearFactorForm& at(const KTypeId& id) const;
  // Plugs a concrete r into every entry; throws PoleError at a pole.
  EigenvalueTable evaluate(const Rational& r) const;
};

// One fundamental cycle and its product of transition quantities.
struct CycleCheck {
  std::vector<KTypeId> cycle;  // closed walk, front() == back()
  Rational product;
  bool ok = false;             // product == 1
};

struct ConsistencyReport {
  Rational r;
  std::vector<CycleCheck> cycles;
  bool passed = false;

  // The first failing cycle, for diagnostics; empty when passed.
  std::string first_failure() const;
};

// Propagates mu_base = 1 across a spanning tree via
// mu_dst = mu_src * (x + r)/(x - r), then cross-checks every edge.
// Throws PoleError when some edge has x == r, InconsistentError when the
// edge data admit no single-valued assignment.
EigenvalueTable solve(const KTypeGraph& graph, const Rational& r);

// Same propagation with LinearFactorForm values; the per-edge cross-check
// becomes an identity of canonical forms, valid for every non-pole r at once.
SymbolicEigenvalueTable solve_symbolic(const KTypeGraph& graph);

// Evaluates the product of transition quantities around one fundamental
// cycle per directed edge (tree path to src, the edge, tree path back).
// Passing means every product is exactly 1.  Throws PoleError if r hits an
// edge datum.
ConsistencyReport check_consistency(const KTypeGraph& graph, const Rational& r);

}  // namespace spinspec
