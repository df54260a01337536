// pairwalk CLI: constructs graphs, emits spectra and pair-transfer analyses
// as JSON reports on stdout. All computation goes through the pairwalk C API.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairwalk/pairwalk.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string code;
  std::string message;
};

void throw_on_status(pw_status status) {
  if (status != PW_OK) throw CliError{pw_status_name(status), pw_last_error()};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  pw_string_free(s);
  return out;
}

struct GraphHandle {
  pw_graph* ptr = nullptr;
  ~GraphHandle() { pw_graph_free(ptr); }
};

struct SpectrumHandle {
  pw_spectrum* ptr = nullptr;
  ~SpectrumHandle() { pw_spectrum_free(ptr); }
};

// Shared graph-selection flags.
struct GraphArgs {
  std::string family, params, base, base_params, file;

  void attach(CLI::App* cmd, bool required = true) {
    auto* fam = cmd->add_option("--family", family,
                                "graph family (complete|cycle|circulant|cocktail|hypercube|"
                                "petersen|total)");
    cmd->add_option("--params", params, "family parameters, e.g. \"n=12,s=1:2:3\"");
    cmd->add_option("--base", base, "base family for --family total");
    cmd->add_option("--base-params", base_params, "base family parameters");
    auto* file_opt =
        cmd->add_option("--graph", file, "edge-list file: 'n m' header then 'u v' lines");
    file_opt->excludes(fam);
    if (required) {
      // exactly one of --family / --graph
      cmd->callback([this]() {
        if (family.empty() && file.empty())
          throw CLI::ValidationError("provide either --family or --graph");
      });
    }
  }

  GraphHandle build() const {
    GraphHandle handle;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw CliError{"invalid-parameter", "cannot open graph file '" + file + "'"};
      std::stringstream buffer;
      buffer << in.rdbuf();
      throw_on_status(pw_graph_from_edge_list(buffer.str().c_str(), &handle.ptr));
    } else {
      throw_on_status(pw_graph_build(family.c_str(), params.c_str(),
                                     base.empty() ? nullptr : base.c_str(),
                                     base_params.empty() ? nullptr : base_params.c_str(),
                                     &handle.ptr));
    }
    return handle;
  }

  json arguments() const {
    json j;
    if (!file.empty()) {
      j["graph"] = file;
    } else {
      j["family"] = family;
      if (!params.empty()) j["params"] = params;
      if (!base.empty()) j["base"] = base;
      if (!base_params.empty()) j["base_params"] = base_params;
    }
    return j;
  }
};

std::pair<int32_t, int32_t> parse_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CliError{"invalid-parameter", std::string(flag) + " expects 'a,b'"};
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CliError{"invalid-parameter", std::string(flag) + " expects two integers 'a,b'"};
  }
}

// FNV-1a over the canonical edge list, used as the file-input descriptor hash.
std::string content_hash(const json& edges) {
  std::uint64_t h = 1469598103934665603ull;
  const std::string bytes = edges.dump();
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

double env_tolerance_default() {
  if (const char* env = std::getenv("PAIRWALK_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw CliError{"invalid-parameter", "PAIRWALK_TOL is not a number"};
    }
  }
  return 0.0;  // 0 selects the library defaults
}

json graph_descriptor(const GraphArgs& args, const json& summary) {
  json compact;
  for (const auto& key : {"n", "m", "regular", "bipartite", "family", "params", "base"})
    if (summary.contains(key)) compact[key] = summary[key];
  if (!args.file.empty()) {
    compact["file"] = args.file;
    compact["content_hash"] = content_hash(summary["edges"]);
  }
  return compact;
}

void emit_report(const std::string& command, const json& arguments, const json& graph,
                 const json& tolerances, const json& result,
                 std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  json report;
  report["command"] = command;
  report["arguments"] = arguments;
  if (!graph.is_null()) report["graph"] = graph;
  report["tolerances"] = tolerances;
  report["result"] = result;
  report["tool_version"] = pw_version();
  report["wall_time_ms"] = elapsed;
  std::cout << report.dump() << "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw CliError{"invalid-parameter", "cannot write file '" + path + "'"};
  out << contents;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian pair-state transfer toolkit for total graphs"};
  app.require_subcommand(1);
  int64_t seed = 0;
  app.add_option("--seed", seed,
                 "reserved for future sampling features; accepted and ignored")
      ->group("");

  GraphArgs graph_args;
  std::string pair_text, partner_text, case_id, case_params, csv_path;
  double time_value = 0.0, epsilon = 0.05, tol_flag = 0.0;
  int64_t ell_max = 100000;
  bool refine = false;
  std::string sweep_text;
  int case_n = -1, case_m = -1, case_d = -1;

  auto* build = app.add_subcommand("build", "construct a graph and print its summary");
  graph_args.attach(build);

  auto* spectra = app.add_subcommand("spectra", "Laplacian spectrum with exact labels");
  graph_args.attach(spectra);
  spectra->add_option("--tol", tol_flag, "eigenvalue grouping tolerance");

  auto* support = app.add_subcommand("support", "eigenvalue support of a pair state");
  graph_args.attach(support);
  support->add_option("--pair", pair_text, "pair state 'a,b'")->required();
  support->add_option("--tol", tol_flag, "support tolerance");

  auto* cospectral = app.add_subcommand("cospectral", "strong cospectrality with sign partition");
  graph_args.attach(cospectral);
  cospectral->add_option("--pair", pair_text, "pair state 'a,b'")->required();
  cospectral->add_option("--partner", partner_text, "pair state 'c,d'")->required();
  cospectral->add_option("--tol", tol_flag, "support tolerance");

  auto* amplitude = app.add_subcommand("amplitude", "pair transfer amplitude at a time");
  graph_args.attach(amplitude);
  amplitude->add_option("--pair", pair_text, "pair state 'a,b'")->required();
  amplitude->add_option("--partner", partner_text, "pair state 'c,d'")->required();
  amplitude->add_option("--time", time_value, "evolution time")->required();
  amplitude->add_option("--sweep", sweep_text, "fidelity sweep 't0:t1:steps' written as CSV");
  amplitude->add_option("--csv", csv_path, "CSV output path for --sweep");

  auto* certify = app.add_subcommand("certify-pst", "exact perfect pair transfer certificate");
  graph_args.attach(certify);
  certify->add_option("--pair", pair_text, "pair state 'a,b'")->required();
  certify->add_option("--partner", partner_text, "pair state 'c,d'")->required();
  certify->add_option("--tol", tol_flag, "support tolerance");

  auto* scan = app.add_subcommand("scan-pst", "exhaustive PST scan over pair-state pairs");
  graph_args.attach(scan);
  scan->add_option("--tol", tol_flag, "support tolerance");

  auto* search = app.add_subcommand("search-pgst",
                                    "pretty good transfer search on T(G) over candidate times; "
                                    "the graph flags select the base graph G");
  graph_args.attach(search);
  search->add_option("--pair", pair_text, "base pair state 'a,b'")->required();
  search->add_option("--partner", partner_text, "base pair state 'c,d'")->required();
  search->add_option("--epsilon", epsilon, "early-exit once fidelity >= 1-epsilon");
  search->add_option("--ell-max", ell_max, "candidate-time budget");
  search->add_flag("--refine", refine, "golden-section polish around the best candidate");
  search->add_option("--tol", tol_flag, "support tolerance");
  search->add_option("--trace-csv", csv_path, "write the improvement trace as CSV");

  auto* verify = app.add_subcommand("verify-theorem", "run a registered verification case");
  auto* case_opt = verify->add_option("--case", case_id, "case id (see --list)");
  verify->add_option("--params", case_params, "parameter overrides 'k=v,...'");
  verify->add_option("--n", case_n, "shorthand override for parameter n");
  verify->add_option("--m", case_m, "shorthand override for parameter m");
  verify->add_option("--d", case_d, "shorthand override for parameter d");
  bool list_cases = false;
  verify->add_flag("--list", list_cases, "list registered cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    const double env_tol = env_tolerance_default();
    const double tol = tol_flag > 0.0 ? tol_flag : env_tol;

    if (verify->parsed()) {
      if (list_cases) {
        char* raw = nullptr;
        throw_on_status(pw_theorem_cases_json(&raw));
        emit_report("verify-theorem", json{{"list", true}}, nullptr, json::object(),
                    json::parse(take_string(raw)), started);
        return kExitOk;
      }
      if (case_opt->count() == 0) throw CliError{"invalid-parameter", "--case or --list required"};
      std::string overrides = case_params;
      auto add_override = [&overrides](const char* key, int value) {
        if (value < 0) return;
        if (!overrides.empty()) overrides += ",";
        overrides += std::string(key) + "=" + std::to_string(value);
      };
      add_override("n", case_n);
      add_override("m", case_m);
      add_override("d", case_d);
      char* raw = nullptr;
      throw_on_status(pw_verify_theorem_json(case_id.c_str(), overrides.c_str(), &raw));
      json arguments{{"case", case_id}};
      if (!overrides.empty()) arguments["params"] = overrides;
      emit_report("verify-theorem", arguments, nullptr, json::object(),
                  json::parse(take_string(raw)), started);
      return kExitOk;
    }

    GraphHandle graph = graph_args.build();
    char* raw_summary = nullptr;
    throw_on_status(pw_graph_summary_json(graph.ptr, &raw_summary));
    const json summary = json::parse(take_string(raw_summary));
    const json descriptor = graph_descriptor(graph_args, summary);

    if (build->parsed()) {
      emit_report("build", graph_args.arguments(), descriptor, json::object(), summary, started);
      return kExitOk;
    }

    if (search->parsed()) {
      const auto [a, b] = parse_pair(pair_text, "--pair");
      const auto [c, d] = parse_pair(partner_text, "--partner");
      char* raw = nullptr;
      throw_on_status(pw_search_pgst_json(graph.ptr, a, b, c, d, epsilon, ell_max,
                                          refine ? 1 : 0, tol, &raw));
      const json result = json::parse(take_string(raw));
      if (!csv_path.empty()) {
        std::ostringstream csv;
        csv << "time,fidelity\n";
        csv.precision(17);
        for (const auto& entry : result["trace"])
          csv << entry["time"].get<double>() << "," << entry["fidelity"].get<double>() << "\n";
        write_file(csv_path, csv.str());
      }
      json arguments = graph_args.arguments();
      arguments["pair"] = pair_text;
      arguments["partner"] = partner_text;
      arguments["epsilon"] = epsilon;
      arguments["ell_max"] = ell_max;
      arguments["refine"] = refine;
      emit_report("search-pgst", arguments, descriptor,
                  json{{"support", tol > 0.0 ? json(tol) : json(nullptr)}}, result, started);
      return kExitOk;
    }

    SpectrumHandle spectrum;
    throw_on_status(pw_spectrum_compute(graph.ptr, tol, &spectrum.ptr));
    json tolerances{{"grouping", tol > 0.0 ? json(tol) : json(nullptr)},
                    {"support", tol > 0.0 ? json(tol) : json(nullptr)}};

    if (spectra->parsed()) {
      char* raw = nullptr;
      throw_on_status(pw_spectrum_json(spectrum.ptr, &raw));
      emit_report("spectra", graph_args.arguments(), descriptor, tolerances,
                  json::parse(take_string(raw)), started);
      return kExitOk;
    }

    if (support->parsed()) {
      const auto [a, b] = parse_pair(pair_text, "--pair");
      char* raw = nullptr;
      throw_on_status(pw_support_json(spectrum.ptr, a, b, tol, &raw));
      json arguments = graph_args.arguments();
      arguments["pair"] = pair_text;
      emit_report("support", arguments, descriptor, tolerances, json::parse(take_string(raw)),
                  started);
      return kExitOk;
    }

    if (cospectral->parsed()) {
      const auto [a, b] = parse_pair(pair_text, "--pair");
      const auto [c, d] = parse_pair(partner_text, "--partner");
      char* raw = nullptr;
      throw_on_status(pw_cospectral_json(spectrum.ptr, a, b, c, d, tol, &raw));
      json arguments = graph_args.arguments();
      arguments["pair"] = pair_text;
      arguments["partner"] = partner_text;
      emit_report("cospectral", arguments, descriptor, tolerances,
                  json::parse(take_string(raw)), started);
      return kExitOk;
    }

    if (amplitude->parsed()) {
      const auto [a, b] = parse_pair(pair_text, "--pair");
      const auto [c, d] = parse_pair(partner_text, "--partner");
      if (!sweep_text.empty()) {
        double t0 = 0.0, t1 = 0.0;
        int steps = 0;
        char sep1 = 0, sep2 = 0;
        std::istringstream in(sweep_text);
        if (!(in >> t0 >> sep1 >> t1 >> sep2 >> steps) || sep1 != ':' || sep2 != ':')
          throw CliError{"invalid-parameter", "--sweep expects 't0:t1:steps'"};
        if (csv_path.empty())
          throw CliError{"invalid-parameter", "--sweep needs --csv PATH"};
        char* raw_csv = nullptr;
        throw_on_status(
            pw_amplitude_sweep_csv(spectrum.ptr, a, b, c, d, t0, t1, steps, &raw_csv));
        write_file(csv_path, take_string(raw_csv));
      }
      char* raw = nullptr;
      throw_on_status(pw_amplitude_json(spectrum.ptr, a, b, c, d, time_value, &raw));
      json arguments = graph_args.arguments();
      arguments["pair"] = pair_text;
      arguments["partner"] = partner_text;
      arguments["time"] = time_value;
      if (!sweep_text.empty()) arguments["sweep"] = sweep_text;
      emit_report("amplitude", arguments, descriptor, tolerances, json::parse(take_string(raw)),
                  started);
      return kExitOk;
    }

    if (certify->parsed()) {
      const auto [a, b] = parse_pair(pair_text, "--pair");
      const auto [c, d] = parse_pair(partner_text, "--partner");
      char* raw = nullptr;
      throw_on_status(pw_certify_pst_json(spectrum.ptr, a, b, c, d, tol, &raw));
      json arguments = graph_args.arguments();
      arguments["pair"] = pair_text;
      arguments["partner"] = partner_text;
      emit_report("certify-pst", arguments, descriptor, tolerances,
                  json::parse(take_string(raw)), started);
      return kExitOk;
    }

    if (scan->parsed()) {
      char* raw = nullptr;
      throw_on_status(pw_scan_pst_json(spectrum.ptr, tol, &raw));
      emit_report("scan-pst", graph_args.arguments(), descriptor, tolerances,
                  json::parse(take_string(raw)), started);
      return kExitOk;
    }

    throw CliError{"internal", "unhandled subcommand"};
  } catch (const CliError& e) {
    json error;
    error["error"] = json{{"code", e.code}, {"message", e.message}};
    error["tool_version"] = pw_version();
    std::cout << error.dump() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    json error;
    error["error"] = json{{"code", "internal"}, {"message", e.what()}};
    error["tool_version"] = pw_version();
    std::cout << error.dump() << "\n";
    return kExitDomainError;
  }
}
