#include "spinspec/serialization.hpp"

#include <sstream>

namespace spinspec {

json ktype_to_json(const KTypeId& id) {
  json node;
  node["n"] = id.n;
  node["k"] = id.k;
  node["j"] = id.j;
  if (id.q) node["q"] = *id.q;
  node["eps"] = id.eps;
  return node;
}

json lff_to_json(const LinearFactorForm& f) {
  json out;
  out["scale"] = to_string(f.scale());
  out["factors"] = json::array();
  for (const auto& [root, mult] : f.factors()) {
    json factor;
    factor["root"] = to_string(root);
    factor["mult"] = mult;
    out["factors"].push_back(std::move(factor));
  }
  return out;
}

json graph_to_json(const KTypeGraph& g) {
  json out;
  out["n"] = g.n;
  out["k"] = g.k;
  out["jmax"] = g.jmax;
  out["base"] = ktype_to_json(g.base);
  out["nodes"] = json::array();
  for (const KTypeId& id : g.nodes) out["nodes"].push_back(ktype_to_json(id));
  out["edges"] = json::array();
  for (const TransitionEdge& e : g.edges) {
    json edge;
    edge["src"] = ktype_to_json(e.src);
    edge["dst"] = ktype_to_json(e.dst);
    edge["x"] = to_string(e.x);
    out["edges"].push_back(std::move(edge));
  }
  return out;
}

json table_to_json(const EigenvalueTable& t) {
  json out;
  out["r"] = to_string(t.r);
  out["rows"] = json::array();
  for (const auto& [id, mu] : t.values) {
    json row;
    row["node"] = ktype_to_json(id);
    row["mu"] = to_string(mu);
    out["rows"].push_back(std::move(row));
  }
  return out;
}

json table_to_json(const SymbolicEigenvalueTable& t) {
  json out;
  out["r"] = "symbolic";
  out["rows"] = json::array();
  for (const auto& [id, form] : t.values) {
    json row;
    row["node"] = ktype_to_json(id);
    row["mu"] = lff_to_json(form);
    out["rows"].push_back(std::move(row));
  }
  return out;
}

json report_to_json(const VerificationReport& r) {
  json out;
  out["params"]["n"] = r.n;
  out["params"]["k"] = r.k;
  out["params"]["l"] = r.l;
  out["params"]["jmax"] = r.jmax;
  out["constant"] = to_string(r.constant);
  out["grid_size"] = r.grid_size;
  out["passed"] = r.passed();
  out["failures"] = json::array();
  for (const VerificationFailure& f : r.failures) {
    json row;
    row["node"] = ktype_to_json(f.node);
    row["ratio"] = to_string(f.ratio);
    out["failures"].push_back(std::move(row));
  }
  return out;
}

std::string table_to_csv(const EigenvalueTable& t) {
  std::ostringstream os;
  os << "n,k,j,q,eps,mu\n";
  for (const auto& [id, mu] : t.values) {
    os << id.n << "," << id.k << "," << id.j << ",";
    if (id.q) os << *id.q;
    os << "," << id.eps << "," << to_string(mu) << "\n";
  }
  return os.str();
}

}  // namespace spinspec
