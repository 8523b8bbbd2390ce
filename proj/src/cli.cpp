#include "eccbounds/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "eccbounds/bounds.hpp"
#include "eccbounds/constructions.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/graph6.hpp"
#include "eccbounds/invariants.hpp"
#include "eccbounds/metrics.hpp"
#include "eccbounds/report.hpp"
#include "eccbounds/scan.hpp"
#include "eccbounds/verify.hpp"

namespace ecc {

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, std::int64_t>> parse_params(const std::string& text) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("bad parameter '" + part + "', expected key=value");
    try {
      out.emplace_back(part.substr(0, eq), std::stoll(part.substr(eq + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in parameter '" + part + "'");
    }
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dash = part.find('-');
    if (dash == std::string::npos || dash == 0)
      throw std::invalid_argument("bad edge '" + part + "', expected u-v");
    int u = 0, v = 0;
    try {
      u = std::stoi(part.substr(0, dash));
      v = std::stoi(part.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex number in edge '" + part + "'");
    }
    if (u < 0 || v < 0 || u == v) throw std::invalid_argument("bad edge '" + part + "'");
    n = std::max({n, u + 1, v + 1});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::invalid_argument("empty edge list");
  return from_edge_list(n, edges);
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    constexpr const char* header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(std::string(header).size());
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string opt_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}
std::string opt_cell64(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}
std::string opt_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

std::string point_cell(const std::map<std::string, std::int64_t>& point) {
  std::string s;
  for (const auto& [k, v] : point) {
    if (!s.empty()) s += ';';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          const json& payload, const std::vector<std::vector<std::string>>& csv_rows,
          const std::string& text) {
  if (format == "json")
    out << make_report(command, payload).dump(2) << "\n";
  else if (format == "csv")
    out << to_csv(csv_rows);
  else
    out << text;
}

int cmd_compute(const std::vector<std::string>& g6_lines, const std::string& format,
                std::ostream& out) {
  json payload = json::array();
  std::vector<std::vector<std::string>> csv = {
      {"graph6", "n", "m", "ecc_sum", "sigma0_num", "sigma0_den", "sigma0_decimal",
       "sigma1", "sigma2", "chromatic", "clique", "matching", "dominating"}};
  std::string text;
  for (const auto& line : g6_lines) {
    Graph g = graph6_decode(line);
    IndexReport rep = indices(g);
    InvariantSet inv = invariant_set(g);
    payload.push_back(
        {{"graph6", line}, {"n", g.n}, {"m", g.edge_count()}, {"indices", rep},
         {"invariants", inv}});
    csv.push_back({line, std::to_string(g.n), std::to_string(g.edge_count()),
                   std::to_string(rep.ecc_sum), std::to_string(rep.sigma0.num),
                   std::to_string(rep.sigma0.den), rep.sigma0.to_decimal_string(),
                   std::to_string(rep.sigma1), std::to_string(rep.sigma2),
                   opt_cell(inv.chromatic), opt_cell(inv.clique), opt_cell(inv.matching),
                   std::to_string(inv.dominating)});
    text += line + " n=" + std::to_string(g.n) + " m=" + std::to_string(g.edge_count()) +
            " sigma0=" + rep.sigma0.to_string() + " (" + rep.sigma0.to_decimal_string() +
            ") sigma1=" + std::to_string(rep.sigma1) + " sigma2=" + std::to_string(rep.sigma2) +
            " chromatic=" + opt_text(inv.chromatic) + " clique=" + opt_text(inv.clique) +
            " matching=" + opt_text(inv.matching) +
            " dominating=" + std::to_string(inv.dominating) + "\n";
  }
  emit(out, format, "compute", payload, csv, text);
  return 0;
}

int cmd_generate(const std::string& family, const std::string& format, std::ostream& out) {
  FamilyInstance inst = make_family(FamilySpec::parse(family));
  json payload = inst;
  const Predicted& p = inst.predicted;
  std::vector<std::vector<std::string>> csv = {
      {"spec", "n", "graph6", "ecc_sum", "sigma1", "sigma2", "edges", "diameter", "radius",
       "chromatic", "clique", "matching", "dominating", "note"},
      {inst.spec.to_string(), std::to_string(inst.graph.n), graph6_encode(inst.graph),
       opt_cell64(p.ecc_sum), opt_cell64(p.sigma1), opt_cell64(p.sigma2), opt_cell64(p.edges),
       opt_cell(p.diameter), opt_cell(p.radius), opt_cell(p.chromatic), opt_cell(p.clique),
       opt_cell(p.matching), opt_cell(p.dominating), inst.note}};
  std::string text = inst.spec.to_string() + " -> " + graph6_encode(inst.graph) + "\n";
  auto put64 = [&](const char* name, const std::optional<std::int64_t>& v) {
    if (v) text += "  " + std::string(name) + " = " + std::to_string(*v) + "\n";
  };
  auto put = [&](const char* name, const std::optional<int>& v) {
    if (v) text += "  " + std::string(name) + " = " + std::to_string(*v) + "\n";
  };
  put64("ecc_sum", p.ecc_sum);
  put64("sigma1", p.sigma1);
  put64("sigma2", p.sigma2);
  put64("edges", p.edges);
  put("diameter", p.diameter);
  put("radius", p.radius);
  put("chromatic", p.chromatic);
  put("clique", p.clique);
  put("matching", p.matching);
  put("dominating", p.dominating);
  if (!inst.note.empty()) text += "  note: " + inst.note + "\n";
  emit(out, format, "generate", payload, csv, text);
  return 0;
}

int cmd_bound(const std::string& id, const std::string& params, const std::string& format,
              std::ostream& out) {
  std::vector<BoundReport> reports = bound_by_id(id, parse_params(params));
  json payload = reports;
  std::vector<std::vector<std::string>> csv = {
      {"bound_id", "index", "direction", "applicable", "value_num", "value_den",
       "value_decimal", "exceptional", "reason", "extremal"}};
  std::string text;
  for (const auto& r : reports) {
    std::string ext;
    for (const auto& spec : r.extremal) {
      if (!ext.empty()) ext += ' ';
      ext += spec.to_string();
    }
    if (r.applicable) {
      csv.push_back({r.bound_id, std::to_string(r.index), r.direction, "true",
                     std::to_string(r.value.num), std::to_string(r.value.den),
                     r.value.to_decimal_string(), r.exceptional ? "true" : "false", "", ext});
      text += r.bound_id + (r.index >= 0 ? " i=" + std::to_string(r.index) : "") + " " +
              r.direction + " value=" + r.value.to_string() + " (" +
              r.value.to_decimal_string() + ")" + (r.exceptional ? " [exceptional]" : "");
      if (!ext.empty()) text += " extremal: " + ext;
      text += "\n";
    } else {
      csv.push_back({r.bound_id, std::to_string(r.index), r.direction, "false", "", "", "",
                     "false", r.reason, ""});
      text += r.bound_id + (r.index >= 0 ? " i=" + std::to_string(r.index) : "") +
              " not applicable: " + r.reason + "\n";
    }
  }
  emit(out, format, "bound", payload, csv, text);
  return 0;
}

int cmd_verify(const std::string& id, int nmax, const VerifyOptions& opts,
               const std::string& format, std::ostream& out) {
  VerificationRun run = verify_bound(id, nmax, opts);
  json payload = run;
  std::vector<std::vector<std::string>> csv = {
      {"bound_id", "n_min", "n_max", "graphs_checked", "violation_count", "sharp_count",
       "uniqueness_checked", "uniqueness_ok", "attainment_checked", "attained_ok",
       "wall_time_ms"},
      {run.bound_id, std::to_string(run.n_min), std::to_string(run.n_max),
       std::to_string(run.graphs_checked), std::to_string(run.violation_count),
       std::to_string(run.sharp_count), run.uniqueness_checked ? "true" : "false",
       run.uniqueness_ok ? "true" : "false", run.attainment_checked ? "true" : "false",
       run.attained_ok ? "true" : "false", std::to_string(run.wall_time_ms)}};
  std::string text = run.bound_id + " n=" + std::to_string(run.n_min) + ".." +
                     std::to_string(run.n_max) + ": " + std::to_string(run.graphs_checked) +
                     " graphs, " + std::to_string(run.violation_count) + " violations, " +
                     std::to_string(run.sharp_count) + " sharp\n";
  for (const auto& v : run.violations)
    text += "  VIOLATION " + v.slice + " " + v.graph6 + " observed=" + v.observed +
            " bound=" + v.bound + "\n";
  if (run.uniqueness_checked) {
    text += std::string("  uniqueness: ") + (run.uniqueness_ok ? "ok" : "MISMATCH") + "\n";
    for (const auto& m : run.uniqueness_mismatches) text += "    " + m + "\n";
  }
  if (run.attainment_checked) {
    text += std::string("  attainment: ") + (run.attained_ok ? "ok" : "MISSING") + "\n";
    for (const auto& m : run.unattained) text += "    unattained " + m + "\n";
  }
  emit(out, format, "verify", payload, csv, text);
  return run.violation_count > 0 ? 1 : 0;
}

int cmd_scan(const std::vector<ScanRow>& rows, const std::string& format, std::ostream& out) {
  json payload = rows;
  std::vector<std::vector<std::string>> csv = {
      {"experiment", "point", "best_value_num", "best_value_den", "best_value_decimal",
       "argmax_class", "witness_graph6", "note"}};
  std::string text;
  for (const auto& r : rows) {
    csv.push_back({r.experiment, point_cell(r.point), std::to_string(r.best_value.num),
                   std::to_string(r.best_value.den), r.best_value.to_decimal_string(),
                   r.argmax_class, r.witness_graph6, r.note});
    text += r.experiment + " " + point_cell(r.point) + " best=" + r.best_value.to_string() +
            " (" + r.best_value.to_decimal_string() + ") class=" + r.argmax_class;
    if (!r.witness_graph6.empty()) text += " witness=" + r.witness_graph6;
    if (!r.note.empty()) text += " | " + r.note;
    text += "\n";
  }
  emit(out, format, "scan", payload, csv, text);
  return 0;
}

int cmd_formats(const std::string& format, std::ostream& out) {
  json payload = {{"families", known_families()},
                  {"verifications", known_verifications()},
                  {"formats", {"json", "csv", "text"}}};
  json bounds_json = json::array();
  std::vector<std::vector<std::string>> csv = {{"kind", "name", "details"}};
  std::string text = "families:\n";
  for (const auto& f : known_families()) {
    csv.push_back({"family", f, ""});
    text += "  " + f + "\n";
  }
  text += "bounds:\n";
  for (const auto& [id, params] : known_bounds()) {
    bounds_json.push_back({{"id", id}, {"params", params}});
    csv.push_back({"bound", id, params});
    text += "  " + id + " (" + params + ")\n";
  }
  payload["bounds"] = bounds_json;
  text += "verifications:\n";
  for (const auto& v : known_verifications()) {
    csv.push_back({"verification", v, ""});
    text += "  " + v + "\n";
  }
  text += "formats: json csv text (graph6 in, graph6 out)\n";
  for (const auto& f : {"json", "csv", "text"}) csv.push_back({"format", f, ""});
  emit(out, format, "formats", payload, csv, text);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eccentricity-index bounds toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.fallthrough();

  auto* compute = app.add_subcommand("compute", "indices and invariants of input graphs");
  std::string file, edges;
  compute->add_option("--file", file, "file of graph6 lines");
  compute->add_option("--edges", edges, "inline edge list, e.g. 0-1,1-2");

  auto* generate = app.add_subcommand("generate", "build a parameterized family member");
  std::string family;
  generate->add_option("--family", family, "family spec, e.g. kite:n=5,d=3")->required();

  auto* bound = app.add_subcommand("bound", "evaluate a bound oracle");
  std::string bound_id, params;
  bound->add_option("--id", bound_id, "bound identifier")->required();
  bound->add_option("--params", params, "parameters, e.g. n=7,d=4");

  auto* verify = app.add_subcommand("verify", "exhaustively check a bound");
  std::string verify_id;
  int nmax = 0, jobs = 1, nmin = -1;
  bool iso_reduce = false;
  verify->add_option("--id", verify_id, "bound identifier")->required();
  verify->add_option("--nmax", nmax, "largest n to enumerate")->required();
  verify->add_option("--nmin", nmin, "smallest n (default per bound)");
  verify->add_option("--jobs", jobs, "parallel chunks");
  verify->add_flag("--iso-reduce", iso_reduce, "one graph per isomorphism class");

  auto* scan = app.add_subcommand("scan", "extremal-value experiments");
  std::string experiment;
  int scan_n = 0, scan_jobs = 1;
  bool construction = false;
  std::vector<int> n_list;
  scan->add_option("--experiment", experiment, "dn | cycletail | sigma2max")
      ->required()
      ->check(CLI::IsMember({"dn", "cycletail", "sigma2max"}));
  scan->add_option("--n", scan_n, "order for dn / sigma2max");
  scan->add_option("--n-list", n_list, "orders for cycletail")->delimiter(',');
  scan->add_flag("--construction", construction, "formula mode for sigma2max");
  scan->add_option("--jobs", scan_jobs, "parallel chunks");

  app.add_subcommand("formats", "list families, bounds, verifications, formats");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      std::vector<std::string> lines;
      if (!edges.empty()) {
        lines.push_back(graph6_encode(parse_edge_list(edges)));
      } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open '" + file + "'");
        lines = read_graph6_lines(in);
      } else {
        lines = read_graph6_lines(std::cin);
      }
      return cmd_compute(lines, format, out);
    }
    if (generate->parsed()) return cmd_generate(family, format, out);
    if (bound->parsed()) return cmd_bound(bound_id, params, format, out);
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.iso_reduce = iso_reduce;
      if (nmin >= 0) opts.n_min = nmin;
      return cmd_verify(verify_id, nmax, opts, format, out);
    }
    if (scan->parsed()) {
      std::vector<ScanRow> rows;
      if (experiment == "dn") {
        if (scan_n == 0) throw std::invalid_argument("scan dn needs --n");
        rows = scan_threshold_dn(scan_n, scan_jobs);
      } else if (experiment == "cycletail") {
        if (n_list.empty()) throw std::invalid_argument("scan cycletail needs --n-list");
        rows = compare_tree_vs_cycletail(n_list);
      } else {
        if (scan_n == 0) throw std::invalid_argument("scan sigma2max needs --n");
        if (!construction && scan_n > kEnumGraphBudget)
          throw std::invalid_argument(
              "scan sigma2max beyond the exhaustive budget needs --construction");
        rows = {scan_sigma2_max(scan_n, !construction, scan_jobs)};
      }
      return cmd_scan(rows, format, out);
    }
    return cmd_formats(format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ecc
