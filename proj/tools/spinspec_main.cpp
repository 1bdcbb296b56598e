// Command-line surface: branching queries, spectra, and verification with
// table/json/csv output.  Exit codes: 0 success, 1 verification failure,
// 2 invalid input, 3 singular evaluation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinspec/closedform.hpp"
#include "spinspec/errors.hpp"
#include "spinspec/ktype_graph.hpp"
#include "spinspec/operators.hpp"
#include "spinspec/recursion.hpp"
#include "spinspec/serialization.hpp"
#include "spinspec/weights.hpp"

namespace {

using namespace spinspec;

DominantWeight parse_weight(const std::string& text) {
  std::vector<HalfInt> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(HalfInt::parse(item));
  return DominantWeight(std::move(entries));
}

int cmd_branch(int n, const std::string& alpha_text,
               const std::string& lambda_text) {
  DominantWeight alpha = parse_weight(alpha_text);
  DominantWeight lambda = parse_weight(lambda_text);
  std::cout << (branches(alpha, lambda, n) ? "true" : "false") << "\n";
  return 0;
}

struct SpectrumRow {
  KTypeId id;
  Rational value;
  std::optional<Rational> closed;  // engaged for --method both
  bool match = true;
};

int cmd_spectrum(int n, int k, const std::string& r_text, int jmax,
                 const std::string& method, const std::string& format) {
  Rational r = parse_rational(r_text);
  if (method != "recursion" && !exact_order(r)) {
    throw std::invalid_argument(
        "closed-form values need 2r to be an odd positive integer; "
        "--method recursion evaluates any non-singular rational r");
  }

  std::optional<EigenvalueTable> recursion_table;
  if (method != "closedform") {
    recursion_table = solve(build_graph(n, k, jmax), r);
  }

  bool all_match = true;
  std::vector<SpectrumRow> rows;
  for (const KTypeId& id : enumerate_ktypes(n, k, jmax)) {
    SpectrumRow row{id, Rational(0), std::nullopt, true};
    if (method == "closedform") {
      row.value = z_value(id, r);
    } else {
      row.value = recursion_table->at(id);
      if (method == "both") {
        row.closed = z_value(id, r);
        row.match = row.value == *row.closed;
        all_match = all_match && row.match;
      }
    }
    rows.push_back(std::move(row));
  }

  const bool both = method == "both";
  if (format == "json") {
    json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["r"] = to_string(r);
    doc["jmax"] = jmax;
    doc["method"] = method;
    doc["rows"] = json::array();
    for (const SpectrumRow& row : rows) {
      json item;
      item["node"] = ktype_to_json(row.id);
      item["mu"] = to_string(row.value);
      if (both) {
        item["mu_closedform"] = to_string(*row.closed);
        item["match"] = row.match;
      }
      doc["rows"].push_back(std::move(item));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,k,j,q,eps,value" << (both ? ",value_closedform,match" : "")
              << "\n";
    for (const SpectrumRow& row : rows) {
      std::cout << row.id.n << "," << row.id.k << "," << row.id.j << ",";
      if (row.id.q) std::cout << *row.id.q;
      std::cout << "," << row.id.eps << "," << to_string(row.value);
      if (both) {
        std::cout << "," << to_string(*row.closed) << ","
                  << (row.match ? "true" : "false");
      }
      std::cout << "\n";
    }
  } else {
    std::cout << "n=" << n << " k=" << k << " r=" << to_string(r)
              << " jmax=" << jmax << " method=" << method << "\n";
    std::cout << "j q eps value" << (both ? " value_closedform match" : "")
              << "\n";
    for (const SpectrumRow& row : rows) {
      std::cout << row.id.j << " " << (row.id.q ? std::to_string(*row.id.q) : "-")
                << " " << (row.id.eps > 0 ? "+1" : "-1") << " "
                << to_string(row.value);
      if (both) {
        std::cout << " " << to_string(*row.closed) << " "
                  << (row.match ? "yes" : "NO");
      }
      std::cout << "\n";
    }
  }
  return all_match ? 0 : 1;
}

int cmd_verify(int n, int k, int l, int jmax, const std::string& format) {
  VerificationReport report = verify_intertwinor(n, k, l, jmax);
  if (format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,k,l,jmax,constant,grid_size,passed\n"
              << report.n << "," << report.k << "," << report.l << ","
              << report.jmax << "," << to_string(report.constant) << ","
              << report.grid_size << ","
              << (report.passed() ? "true" : "false") << "\n";
  } else {
    std::cout << "n " << report.n << "\nk " << report.k << "\nl " << report.l
              << "\njmax " << report.jmax << "\nconstant "
              << to_string(report.constant) << "\ngrid_size "
              << report.grid_size << "\npassed "
              << (report.passed() ? "true" : "false") << "\n";
    for (const VerificationFailure& f : report.failures) {
      std::cout << "failure " << f.node.str() << " ratio "
                << to_string(f.ratio) << "\n";
    }
  }
  return report.passed() ? 0 : 1;
}

struct SuiteCase {
  VerificationReport report;
  bool recursion_matches = true;

  bool passed() const { return report.passed() && recursion_matches; }
};

int cmd_suite(int nmax, int lmax, int jmax, const std::string& format) {
  if (nmax < 3 || lmax < 0 || jmax < 0) {
    throw std::invalid_argument("suite needs nmax >= 3, lmax >= 0, jmax >= 0");
  }

  std::vector<SuiteCase> cases;
  for (int n = 3; n <= nmax; n += 2) {
    for (int k = 0; k <= (n - 1) / 2; ++k) {
      KTypeGraph graph = build_graph(n, k, jmax);
      for (int l = 0; l <= lmax; ++l) {
        SuiteCase c;
        c.report = verify_intertwinor(n, k, l, jmax);
        // Spectrum-generating recursion against the closed forms, node by
        // node, at the order this l corresponds to.
        Rational r = make_rational(2 * l + 1, 2);
        EigenvalueTable table = solve(graph, r);
        for (const KTypeId& id : graph.nodes) {
          if (table.at(id) != z_value(id, r)) {
            c.recursion_matches = false;
            break;
          }
        }
        cases.push_back(std::move(c));
      }
    }
  }

  bool all = true;
  for (const SuiteCase& c : cases) all = all && c.passed();

  if (format == "json") {
    json doc;
    doc["nmax"] = nmax;
    doc["lmax"] = lmax;
    doc["jmax"] = jmax;
    doc["cases"] = json::array();
    for (const SuiteCase& c : cases) {
      json item = report_to_json(c.report);
      item["recursion_matches"] = c.recursion_matches;
      item["passed"] = c.passed();
      doc["cases"].push_back(std::move(item));
    }
    doc["passed"] = all;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,k,l,constant,grid_size,recursion_matches,passed\n";
    for (const SuiteCase& c : cases) {
      std::cout << c.report.n << "," << c.report.k << "," << c.report.l << ","
                << to_string(c.report.constant) << "," << c.report.grid_size
                << "," << (c.recursion_matches ? "true" : "false") << ","
                << (c.passed() ? "true" : "false") << "\n";
    }
  } else {
    std::cout << "n k l constant grid_size recursion passed\n";
    for (const SuiteCase& c : cases) {
      std::cout << c.report.n << " " << c.report.k << " " << c.report.l << " "
                << to_string(c.report.constant) << " " << c.report.grid_size
                << " " << (c.recursion_matches ? "yes" : "NO") << " "
                << (c.passed() ? "yes" : "NO") << "\n";
    }
    std::cout << "suite " << (all ? "passed" : "FAILED") << " (" << cases.size()
              << " cases)\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinspec: exact eigenvalue spectra of conformally invariant operators "
      "on spinor-k-forms over odd-dimensional spheres"};
  app.require_subcommand(1);

  auto* branch = app.add_subcommand(
      "branch", "Decide whether a Spin(n+1) weight branches to a Spin(n) weight");
  int bn = 3;
  std::string alpha_text, lambda_text;
  branch->add_option("--n", bn, "dimension n of the small group Spin(n)")
      ->required();
  branch->add_option("--alpha", alpha_text,
                     "Spin(n+1) weight, comma-separated half-integers")
      ->required();
  branch->add_option("--lambda", lambda_text, "Spin(n) weight")->required();

  auto* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalue table of the order-2r intertwinor on (n,k)");
  int sn = 3, sk = 0, sjmax = 10;
  std::string sr, smethod = "both", sformat = "table";
  spectrum->add_option("--n", sn, "odd sphere dimension >= 3")->required();
  spectrum->add_option("--k", sk, "form degree, 0 <= k <= (n-1)/2");
  spectrum->add_option("--r", sr, "order parameter as p/q")->required();
  spectrum->add_option("--jmax", sjmax, "largest j in the table");
  spectrum->add_option("--method", smethod, "recursion, closedform, or both")
      ->check(CLI::IsMember({"recursion", "closedform", "both"}));
  spectrum->add_option("--format", sformat, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* verify = app.add_subcommand(
      "verify", "Check the order-(2l+1) operator against the spectral function");
  int vn = 3, vk = 0, vl = 1, vjmax = 20;
  std::string vformat = "table";
  verify->add_option("--n", vn, "odd sphere dimension >= 3")->required();
  verify->add_option("--k", vk, "form degree");
  verify->add_option("--l", vl, "operator order is 2l+1");
  verify->add_option("--jmax", vjmax, "grid depth in j");
  verify->add_option("--format", vformat, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* suite = app.add_subcommand(
      "suite", "Run the whole verification grid over n, k, and l");
  int unmax = 11, ulmax = 5, ujmax = 40;
  std::string uformat = "table";
  suite->add_option("--nmax", unmax, "largest odd n");
  suite->add_option("--lmax", ulmax, "largest l");
  suite->add_option("--jmax", ujmax, "grid depth in j");
  suite->add_option("--format", uformat, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*branch) return cmd_branch(bn, alpha_text, lambda_text);
    if (*spectrum) return cmd_spectrum(sn, sk, sr, sjmax, smethod, sformat);
    if (*verify) return cmd_verify(vn, vk, vl, vjmax, vformat);
    if (*suite) return cmd_suite(unmax, ulmax, ujmax, uformat);
  } catch (const PoleError& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const GammaPoleError& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const NumericDomainError& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return 3;
  } catch (const InconsistentError& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return 1;
  } catch (const InternalMismatchError& e) {
    std::cerr << "internal mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
