#include "spinspec/recursion.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "spinspec/errors.hpp"

namespace spinspec {

namespace {

// mu_dst / mu_src at a concrete r.  Callers must have excluded x == r.
Rational quantity(const Rational& x, const Rational& r) {
  return (x + r) / (x - r);
}

void scan_for_poles(const KTypeGraph& graph, const Rational& r) {
  for (const TransitionEdge& e : graph.edges) {
    if (e.x == r) {
      throw PoleError("transition " + e.src.str() + " -> " + e.dst.str() +
                      " is singular at r = " + to_string(r));
    }
  }
}

// Spanning tree rooted at the base node, discovered by BFS over the edge
// list in emission order.  parent[v] is the tree edge leading into v.
struct SpanningTree {
  std::vector<KTypeId> order;                    // discovery order, base first
  std::map<KTypeId, TransitionEdge> parent;      // absent for the base
};

SpanningTree grow_tree(const KTypeGraph& graph) {
  if (!graph.has_node(graph.base)) {
    throw std::logic_error("graph base node is not a graph node");
  }
  std::map<KTypeId, std::vector<const TransitionEdge*>> out;
  for (const TransitionEdge& e : graph.edges) out[e.src].push_back(&e);

  SpanningTree tree;
  std::deque<KTypeId> queue{graph.base};
  std::map<KTypeId, bool> seen{{graph.base, true}};
  while (!queue.empty()) {
    KTypeId node = queue.front();
    queue.pop_front();
    tree.order.push_back(node);
    for (const TransitionEdge* e : out[node]) {
      if (seen[e->dst]) continue;
      seen[e->dst] = true;
      tree.parent.emplace(e->dst, *e);
      queue.push_back(e->dst);
    }
  }
  if (tree.order.size() != graph.nodes.size()) {
    throw std::logic_error("K-type graph is not connected");
  }
  return tree;
}

std::string describe_edge(const TransitionEdge& e) {
  return e.src.str() + " -> " + e.dst.str() + " (x = " + to_string(e.x) + ")";
}

}  // namespace

const Rational& EigenvalueTable::at(const KTypeId& id) const {
  auto it = values.find(id);
  if (it == values.end()) {
    throw std::invalid_argument("no eigenvalue for " + id.str());
  }
  return it->second;
}

const LinearFactorForm& SymbolicEigenvalueTable::at(const KTypeId& id) const {
  auto it = values.find(id);
  if (it == values.end()) {
    throw std::invalid_argument("no eigenvalue for " + id.str());
  }
  return it->second;
}

EigenvalueTable SymbolicEigenvalueTable::evaluate(const Rational& r) const {
  EigenvalueTable table;
  table.r = r;
  for (const auto& [id, form] : values) {
    EvalResult res = form.evaluate(r);
    if (const PoleTag* pole = std::get_if<PoleTag>(&res)) {
      throw PoleError("mu at " + id.str() + " has a pole at r = " +
                      to_string(pole->root));
    }
    if (std::holds_alternative<ZeroTag>(res)) {
      table.values.emplace(id, Rational(0));
    } else {
      table.values.emplace(id, std::get<Rational>(res));
    }
  }
  return table;
}

std::string ConsistencyReport::first_failure() const {
  for (const CycleCheck& c : cycles) {
    if (c.ok) continue;
    std::ostringstream os;
    os << "cycle";
    for (const KTypeId& id : c.cycle) os << " " << id.str();
    os << " has product " << to_string(c.product);
    return os.str();
  }
  return {};
}

EigenvalueTable solve(const KTypeGraph& graph, const Rational& r) {
  scan_for_poles(graph, r);
  SpanningTree tree = grow_tree(graph);

  EigenvalueTable table;
  table.r = r;
  table.values.emplace(graph.base, Rational(1));
  for (const KTypeId& node : tree.order) {
    auto it = tree.parent.find(node);
    if (it == tree.parent.end()) continue;  // base
    const TransitionEdge& e = it->second;
    table.values.emplace(node, table.at(e.src) * quantity(e.x, r));
  }

  // Every edge, tree or not, must agree with the propagated values:
  // mu_dst (x - r) = mu_src (x + r).  A failure means some cycle of
  // transition quantities does not multiply to 1.
  for (const TransitionEdge& e : graph.edges) {
    if (table.at(e.dst) * (e.x - r) != table.at(e.src) * (e.x + r)) {
      throw InconsistentError("edge " + describe_edge(e) +
                              " contradicts the spanning-tree values at r = " +
                              to_string(r));
    }
  }
  return table;
}

SymbolicEigenvalueTable solve_symbolic(const KTypeGraph& graph) {
  SpanningTree tree = grow_tree(graph);

  SymbolicEigenvalueTable table;
  table.values.emplace(graph.base, LinearFactorForm::constant(Rational(1)));
  for (const KTypeId& node : tree.order) {
    auto it = tree.parent.find(node);
    if (it == tree.parent.end()) continue;
    const TransitionEdge& e = it->second;
    table.values.emplace(
        node, table.at(e.src) * LinearFactorForm::transition_quantity(e.x));
  }

  // Canonical forms make the all-r consistency check a plain equality.
  for (const TransitionEdge& e : graph.edges) {
    if (table.at(e.src) * LinearFactorForm::transition_quantity(e.x) !=
        table.at(e.dst)) {
      throw InconsistentError("edge " + describe_edge(e) +
                              " contradicts the spanning-tree forms");
    }
  }
  return table;
}

ConsistencyReport check_consistency(const KTypeGraph& graph,
                                    const Rational& r) {
  scan_for_poles(graph, r);
  SpanningTree tree = grow_tree(graph);

  // Quantity products along tree paths, in both directions.  The downward
  // product uses the tree edges; the upward product re-reads the graph's own
  // reverse edges, so a datum mutated in only one direction is still caught.
  std::map<std::pair<KTypeId, KTypeId>, Rational> datum;
  for (const TransitionEdge& e : graph.edges) {
    datum.emplace(std::make_pair(e.src, e.dst), e.x);
  }

  std::map<KTypeId, Rational> down{{graph.base, Rational(1)}};
  std::map<KTypeId, Rational> up{{graph.base, Rational(1)}};
  bool closure_ok = true;
  for (const KTypeId& node : tree.order) {
    auto it = tree.parent.find(node);
    if (it == tree.parent.end()) continue;
    const TransitionEdge& e = it->second;
    down.emplace(node, down.at(e.src) * quantity(e.x, r));
    auto rev = datum.find(std::make_pair(e.dst, e.src));
    if (rev == datum.end()) {
      closure_ok = false;  // reverse edge missing entirely
      up.emplace(node, Rational(0));
    } else {
      up.emplace(node, quantity(rev->second, r) * up.at(e.src));
    }
  }

  auto tree_path_up = [&](const KTypeId& from) {
    std::vector<KTypeId> path;  // from -> ... -> base, excluding `from`
    KTypeId cur = from;
    for (auto it = tree.parent.find(cur); it != tree.parent.end();
         it = tree.parent.find(cur)) {
      cur = it->second.src;
      path.push_back(cur);
    }
    return path;
  };

  ConsistencyReport report;
  report.r = r;
  report.passed = closure_ok;
  for (const TransitionEdge& e : graph.edges) {
    CycleCheck check;
    std::vector<KTypeId> to_src = tree_path_up(e.src);
    check.cycle.assign(to_src.rbegin(), to_src.rend());
    check.cycle.push_back(e.src);
    check.cycle.push_back(e.dst);
    std::vector<KTypeId> from_dst = tree_path_up(e.dst);
    check.cycle.insert(check.cycle.end(), from_dst.begin(), from_dst.end());
    if (check.cycle.front() != graph.base) {
      check.cycle.insert(check.cycle.begin(), graph.base);  // unreachable guard
    }
    check.product = down.at(e.src) * quantity(e.x, r) * up.at(e.dst);
    check.ok = check.product == Rational(1);
    if (!check.ok) report.passed = false;
    report.cycles.push_back(std::move(check));
  }
  return report;
}

}  // namespace spinspec
