#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramiq/chevalley_weil.hpp"
#include "ramiq/corpus.hpp"

namespace {

using namespace ramiq;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> irreducible_names(const Scenario& s) {
  int k = s.character_table().size();
  std::vector<std::string> names;
  names.push_back("trivial");
  for (int i = 1; i < k; ++i)
    names.push_back(k == 2 ? "sign" : "chi_" + std::to_string(i));
  return names;
}

bool uses_symbols(const ClassFunction& f) {
  for (const auto& v : f.class_values())
    if (!v.is_rational()) return true;
  return false;
}

json cyclotomic_to_json(const Cyclotomic& v) {
  if (v.is_rational()) return to_string(v.to_rational());
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_string(c));
  return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

json class_function_to_json(const ClassFunction& f) {
  json out = json::array();
  for (const auto& v : f.class_values()) out.push_back(cyclotomic_to_json(v));
  return out;
}

void print_text_report(const Scenario& s, const Report& r, bool trace) {
  std::cout << "scenario: " << (s.name.empty() ? "(unnamed)" : s.name) << "\n";
  std::cout << "group: order " << s.group->order() << ", " << s.group->num_classes()
            << " conjugacy classes\n";
  std::cout << "chi(X, E) = " << to_string(s.global_euler) << "\n";
  std::cout << "chi_G by conjugacy class (class: representative: trace):\n";
  bool symbols = uses_symbols(r.chi_g);
  for (int c = 0; c < s.group->num_classes(); ++c)
    std::cout << "  " << c << ": g" << s.group->class_rep(c) << ": "
              << r.chi_g.at_class(c).str() << "\n";
  std::cout << "multiplicities:\n";
  std::vector<std::string> names = irreducible_names(s);
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i)
    std::cout << "  " << names[i] << ": " << to_string(r.multiplicities[i]) << "\n";
  std::cout << "integrality: " << (r.integral ? "ok" : "FAILED") << "\n";
  std::cout << "ramification modules:\n";
  for (const auto& [id, gm] : r.per_stratum_gamma) {
    symbols = symbols || uses_symbols(gm);
    std::cout << "  " << id << ":";
    for (const auto& v : gm.class_values()) std::cout << " " << v.str();
    std::cout << "\n";
  }
  if (trace) {
    std::cout << "trace check:\n";
    for (const TraceRow& row : r.trace_table) {
      symbols = symbols || !row.lhs.is_rational() || !row.rhs.is_rational();
      std::cout << "  class " << row.class_index << " (g" << row.representative
                << "): lhs=" << row.lhs.str() << " rhs=" << row.rhs.str() << " "
                << (row.match ? "ok" : "MISMATCH");
      if (!row.note.empty()) std::cout << " [" << row.note << "]";
      std::cout << "\n";
    }
  }
  std::cout << "traces consistent: " << (r.traces_consistent ? "yes" : "NO") << "\n";
  if (symbols) std::cout << "legend: zetaN denotes exp(2*pi*i/N)\n";
}

void print_json_report(const Scenario& s, const Report& r, bool trace) {
  json out;
  out["name"] = s.name;
  out["chi_of_E"] = to_string(s.global_euler);
  out["chi_G"] = class_function_to_json(r.chi_g);
  json mult = json::object();
  std::vector<std::string> names = irreducible_names(s);
  for (std::size_t i = 0; i < r.multiplicities.size(); ++i)
    mult[names[i]] = to_string(r.multiplicities[i]);
  out["multiplicities"] = mult;
  out["integral"] = r.integral;
  json gam = json::object();
  for (const auto& [id, gm] : r.per_stratum_gamma) gam[id] = class_function_to_json(gm);
  out["gamma"] = gam;
  if (trace) {
    json rows = json::array();
    for (const TraceRow& row : r.trace_table) {
      json jr{{"class", row.class_index},
              {"representative", row.representative},
              {"lhs", cyclotomic_to_json(row.lhs)},
              {"rhs", cyclotomic_to_json(row.rhs)},
              {"match", row.match}};
      if (!row.note.empty()) jr["note"] = row.note;
      rows.push_back(jr);
    }
    out["trace"] = rows;
  }
  out["traces_consistent"] = r.traces_consistent;
  std::cout << out.dump(2) << "\n";
}

// Per-stratum closed-form deltas; returns true when every applicable form
// agrees with the engine exactly.
bool closed_form_compare(const Scenario& s) {
  bool all_zero = true;
  auto report = [&](const std::string& id, const char* form, const ClassFunction& engine,
                    const ClassFunction& closed) {
    bool zero = (engine - closed).is_zero();
    all_zero = all_zero && zero;
    std::cout << "closed-form " << form << " on " << id << ": "
              << (zero ? "delta zero" : "DELTA NONZERO") << "\n";
  };
  for (const Stratum& z : s.strata) {
    ClassFunction engine = gamma(z, s.group);
    if (z.dim == StratumDim::point) report(z.id, "gamma_point", engine, gamma_point(z, s.group));
    if (z.dim != StratumDim::ambient && z.stabilizer.is_cyclic())
      report(z.id, "gamma_cyclic", engine, gamma_cyclic(z, s.group));
    if (z.dim == StratumDim::curve) {
      try {
        ClassFunction closed = gamma_curve(z, s.group);
        report(z.id, "gamma_curve", engine, closed);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolation) throw;
      }
    }
  }
  if (s.ambient_dim == 2) {
    try {
      ClassFunction closed = z2n_surface(s);
      Report r = chi_g(s);
      bool zero = (r.chi_g - closed).is_zero();
      all_zero = all_zero && zero;
      std::cout << "closed-form z2n_surface: " << (zero ? "delta zero" : "DELTA NONZERO")
                << "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisViolation) throw;
    }
  }
  return all_zero;
}

int cmd_compute(const std::string& path, const std::string& format, bool trace,
                bool closed_forms) {
  Scenario s = parse_scenario(read_file(path));
  Report r = chi_g(s);
  if (format == "json")
    print_json_report(s, r, trace);
  else
    print_text_report(s, r, trace);
  bool flagged = !r.traces_consistent || !r.integral;
  if (closed_forms) flagged = !closed_form_compare(s) || flagged;
  return flagged ? 2 : 0;
}

int cmd_check(const std::string& path) {
  Scenario s = parse_scenario(read_file(path));
  s.validate();
  std::cout << "ok: " << (s.name.empty() ? path : s.name) << " is a valid scenario\n";
  return 0;
}

int cmd_example(const std::string& name) {
  std::cout << corpus_json(name) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Euler characteristics of group actions on curves and surfaces"};
  app.require_subcommand(1);

  std::string path, format = "text", example_name;
  bool trace = false, closed_forms = false;

  CLI::App* compute = app.add_subcommand("compute", "Run the engine on a scenario file");
  compute->add_option("path", path, "scenario JSON file")->required();
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  compute->add_flag("--trace-check", trace, "print the Lefschetz trace table");
  compute->add_flag("--closed-form-compare", closed_forms,
                    "print per-stratum closed-form vs engine deltas");

  CLI::App* check = app.add_subcommand("check", "Validate a scenario file");
  check->add_option("path", path, "scenario JSON file")->required();

  CLI::App* example = app.add_subcommand("example", "Print a built-in scenario");
  example->add_option("name", example_name, "corpus scenario name")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return cmd_compute(path, format, trace, closed_forms);
    if (check->parsed()) return cmd_check(path);
    return cmd_example(example_name);
  } catch (const ramiq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
