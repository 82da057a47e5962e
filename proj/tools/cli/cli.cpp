// Copyright 2026 The ehcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "ehcube/error.hpp"
#include "ehcube/metric.hpp"
#include "ehcube/pathgen.hpp"

namespace ehcube::cli {

namespace {

using Json = nlohmann::ordered_json;

Json vertex_list(const EnhancedHypercube& g, const std::vector<Vertex>& vertices) {
  Json out = Json::array();
  for (Vertex x : vertices) out.push_back(g.format(x));
  return out;
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

void emit(const Json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

}  // namespace

int cmd_info(const RunConfig& config, std::ostream& out) {
  const EnhancedHypercube g(config.n, config.k);
  std::vector<int> predicted;
  for (int omega = 1; omega <= g.n() + 1; ++omega) {
    predicted.push_back(predicted_robust_diameter(g, omega));
  }
  if (config.format == OutputFormat::kJson) {
    Json doc;
    doc["n"] = g.n();
    doc["k"] = g.k();
    doc["command"] = "info";
    doc["vertices"] = g.vertex_count();
    doc["degree"] = g.degree();
    doc["diameter"] = diameter(g);
    doc["connectivity"] = g.n() + 1;
    doc["breakpoint"] = robustness_breakpoint(g);
    doc["predicted"] = predicted;
    emit(doc, out);
  } else {
    out << "Q_{" << g.n() << "," << g.k() << "}\n"
        << "  vertices      " << g.vertex_count() << "\n"
        << "  degree        " << g.degree() << "\n"
        << "  diameter      " << diameter(g) << "\n"
        << "  connectivity  " << g.n() + 1 << "\n"
        << "  breakpoint    omega = " << robustness_breakpoint(g) << "\n"
        << "  fault/wide diameter for omega = 1.." << g.n() + 1 << ": "
        << join(predicted, " ") << "\n";
  }
  return kExitOk;
}

int cmd_route(const RunConfig& config, std::ostream& out) {
  const EnhancedHypercube g(config.n, config.k);
  const Vertex source = g.parse(config.source);
  const Vertex target = g.parse(config.target);
  if (source == target) throw DomainError("degenerate pair: source and target are both " + config.source);
  const int count = config.omega.value_or(g.n() + 1);
  const PathSet paths = disjoint_paths(g, source, target, count);
  const Certificate cert = verify_path_set(g, paths);

  if (config.format == OutputFormat::kJson) {
    Json doc;
    doc["n"] = g.n();
    doc["k"] = g.k();
    doc["command"] = "route";
    doc["source"] = g.format(source);
    doc["target"] = g.format(target);
    doc["omega"] = count;
    doc["paths"] = Json::array();
    for (const Route& route : paths.routes) {
      doc["paths"].push_back(
          {{"vertices", vertex_list(g, route.vertices)}, {"dims", route.dims}, {"length", route.length()}});
    }
    doc["guarantee"] = {{"count_short", paths.guarantee.count_short},
                        {"bound_short", paths.guarantee.bound_short},
                        {"bound_all", paths.guarantee.bound_all}};
    Json violations = Json::array();
    for (const Violation& v : cert.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"paths", {v.first, v.second}}, {"message", v.message}});
    }
    doc["certificate"] = {{"ok", cert.ok}, {"violations", violations}, {"summary", cert.summary}};
    emit(doc, out);
  } else {
    out << paths.routes.size() << " disjoint paths " << g.format(source) << " -> " << g.format(target)
        << " in Q_{" << g.n() << "," << g.k() << "}\n";
    for (const Route& route : paths.routes) {
      out << "  [" << route.length() << "] " << g.format(route.vertices.front());
      for (std::size_t i = 0; i < route.dims.size(); ++i) {
        out << " -" << route.dims[i] << "-> " << g.format(route.vertices[i + 1]);
      }
      out << "\n";
    }
    out << "guarantee: all <= " << paths.guarantee.bound_all << ", " << paths.guarantee.count_short
        << " of length <= " << paths.guarantee.bound_short << "\n"
        << "certificate: " << (cert.ok ? "ok" : "FAILED") << " (" << cert.summary << ")\n";
  }
  return cert.ok ? kExitOk : kExitMismatch;
}

int cmd_certify(const RunConfig& config, std::ostream& out) {
  const EnhancedHypercube g(config.n, config.k);
  OracleConfig oracle = OracleConfig::from_environment();
  if (config.cap) oracle.cap = *config.cap;
  oracle.workers = config.workers;
  oracle.require_within_cap(g, "certify");

  std::vector<int> omegas;
  if (config.omega && !config.all) {
    predicted_robust_diameter(g, *config.omega);  // range check
    omegas.push_back(*config.omega);
  } else {
    for (int omega = 1; omega <= g.n() + 1; ++omega) omegas.push_back(omega);
  }

  bool all_match = true;
  Json results = Json::array();
  for (int omega : omegas) {
    const int predicted = predicted_robust_diameter(g, omega);
    const FaultDiameterReport fault = fault_diameter_exact(g, omega, config.faults, oracle);
    const WideDiameterReport wide = g.vertex_count() <= kWideExactMaxVertices
                                        ? wide_diameter_search(g, omega)
                                        : wide_diameter_sandwich(g, omega, fault.worst_value);
    const bool match = fault.disconnected_sets == 0 &&
                       fault.worst_value == static_cast<unsigned>(predicted) && wide.exact &&
                       wide.value == static_cast<unsigned>(predicted);
    all_match = all_match && match;

    Json witness = Json::array();
    if (config.faults == FaultKind::kVertex) {
      witness = vertex_list(g, fault.witness_vertices);
    } else {
      for (const Edge& e : fault.witness_edges) witness.push_back({g.format(e.a), g.format(e.b)});
    }
    Json entry;
    entry["omega"] = omega;
    entry["predicted"] = predicted;
    entry["fault_diameter"] = {
        {"value", fault.worst_value},
        {"sets_examined", fault.sets_examined},
        {"disconnected_sets", fault.disconnected_sets},
        {"witness_faults", witness},
        {"witness_pair", {g.format(fault.witness_u), g.format(fault.witness_v)}}};
    entry["wide_diameter"] = {{"value", wide.value},
                              {"method", to_string(wide.method)},
                              {"lower", wide.lower},
                              {"upper", wide.upper},
                              {"exact", wide.exact}};
    entry["match"] = match;
    results.push_back(std::move(entry));
  }

  if (config.format == OutputFormat::kJson) {
    Json doc;
    doc["n"] = g.n();
    doc["k"] = g.k();
    doc["command"] = "certify";
    doc["faults"] = to_string(config.faults);
    doc["diameter"] = diameter(g);
    doc["breakpoint"] = robustness_breakpoint(g);
    doc["results"] = results;
    doc["ok"] = all_match;
    emit(doc, out);
  } else {
    out << "certify Q_{" << g.n() << "," << g.k() << "} with " << to_string(config.faults)
        << " faults (diameter " << diameter(g) << ", breakpoint " << robustness_breakpoint(g) << ")\n";
    for (const Json& entry : results) {
      out << "  omega=" << entry["omega"].get<int>() << "  predicted " << entry["predicted"].get<int>()
          << "  fault " << entry["fault_diameter"]["value"].get<unsigned>() << "  wide "
          << entry["wide_diameter"]["value"].get<unsigned>() << " ("
          << entry["wide_diameter"]["method"].get<std::string>() << ")  "
          << (entry["match"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
    out << (all_match ? "all values match" : "mismatch found") << "\n";
  }
  return all_match ? kExitOk : kExitMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint routing and robustness certification for enhanced hypercubes Q_{n,k}", "ehcube"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string faults = "vertex";
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::kText},
                                                    {"json", OutputFormat::kJson}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("n", config.n, "dimension (n >= 3)")->required();
    sub->add_option("k", config.k, "complemented low positions (2 <= k <= n)")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* info = app.add_subcommand("info", "topology summary and predicted robust diameters");
  add_common(info);

  CLI::App* route = app.add_subcommand("route", "n+1 disjoint paths between two vertices");
  add_common(route);
  route->add_option("source", config.source, "vertex as x_n...x_1")->required();
  route->add_option("target", config.target, "vertex as x_n...x_1")->required();
  route->add_option("--paths", config.omega, "number of paths to emit (default n+1)");

  CLI::App* certify = app.add_subcommand("certify", "exhaustive fault and wide diameter check");
  add_common(certify);
  auto* omega_opt = certify->add_option("--omega", config.omega, "single omega to check");
  certify->add_flag("--all", config.all, "check every omega in 1..n+1 (default)")->excludes(omega_opt);
  certify->add_option("--faults", faults, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
  certify->add_option("--cap", config.cap, "largest n for exhaustive search (max 6)");
  certify->add_option("--workers", config.workers, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  config.format = formats.at(format);
  config.faults = faults == "edge" ? FaultKind::kEdge : FaultKind::kVertex;
  try {
    if (info->parsed()) {
      config.command = "info";
      return cmd_info(config, out);
    }
    if (route->parsed()) {
      config.command = "route";
      return cmd_route(config, out);
    }
    config.command = "certify";
    return cmd_certify(config, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ehcube::cli
