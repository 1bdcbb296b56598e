#pragma once

#include <string>

#include <json.hpp>

#include "spinspec/ktype_graph.hpp"
#include "spinspec/linear_factor_form.hpp"
#include "spinspec/operators.hpp"
#include "spinspec/recursion.hpp"
#include "spinspec/weights.hpp"

namespace spinspec {

// All serialization uses nlohmann's ordered_json so repeated runs emit
// byte-identical output.  Rationals always cross as "p/q" strings.
using json = nlohmann::ordered_json;

json ktype_to_json(const KTypeId& id);            // {n,k,j[,q],eps}
json lff_to_json(const LinearFactorForm& f);      // {scale, factors:[{root,mult}]}
json graph_to_json(const KTypeGraph& g);          // nodes + edges with "x"
json table_to_json(const EigenvalueTable& t);     // rows {node, mu}
json table_to_json(const SymbolicEigenvalueTable& t);
json report_to_json(const VerificationReport& r); // {params, constant, grid_size, failures}

// CSV with header n,k,j,q,eps,mu; the q column stays empty for k = 0.
std::string table_to_csv(const EigenvalueTable& t);

}  // namespace spinspec
