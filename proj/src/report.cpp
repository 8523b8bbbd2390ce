#include "eccbounds/report.hpp"

#include <ctime>

#include "eccbounds/graph6.hpp"

namespace ecc {

using nlohmann::json;

void to_json(json& j, const Rational& r) {
  j = json{{"num", r.num}, {"den", r.den}, {"decimal", r.to_decimal_string()}};
}

void from_json(const json& j, Rational& r) {
  r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const IndexReport& x) {
  j = json{{"ecc_sum", x.ecc_sum}, {"sigma0", x.sigma0}, {"sigma1", x.sigma1},
           {"sigma2", x.sigma2}};
}

namespace {
template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
}  // namespace

void to_json(json& j, const InvariantSet& x) {
  j = json{{"chromatic", opt(x.chromatic)},
           {"clique", opt(x.clique)},
           {"matching", opt(x.matching)},
           {"dominating", x.dominating}};
}

void to_json(json& j, const FamilySpec& x) {
  j = json{{"family", x.family}, {"spec", x.to_string()}};
  json params = json::object();
  for (const auto& [k, v] : x.params) params[k] = v;
  j["params"] = params;
}

void to_json(json& j, const Predicted& x) {
  j = json{{"ecc_sum", opt(x.ecc_sum)},   {"sigma1", opt(x.sigma1)},
           {"sigma2", opt(x.sigma2)},     {"edges", opt(x.edges)},
           {"diameter", opt(x.diameter)}, {"radius", opt(x.radius)},
           {"chromatic", opt(x.chromatic)}, {"clique", opt(x.clique)},
           {"matching", opt(x.matching)}, {"dominating", opt(x.dominating)}};
}

void to_json(json& j, const FamilyInstance& x) {
  j = json{{"spec", x.spec},
           {"n", x.graph.n},
           {"graph6", graph6_encode(x.graph)},
           {"predicted", x.predicted}};
  if (!x.note.empty()) j["note"] = x.note;
}

void to_json(json& j, const BoundReport& x) {
  j = json{{"bound_id", x.bound_id},     {"index", x.index},
           {"direction", x.direction},   {"applicable", x.applicable},
           {"exceptional", x.exceptional}};
  if (x.applicable)
    j["value"] = x.value;
  else
    j["reason"] = x.reason;
  json ext = json::array();
  for (const auto& spec : x.extremal) ext.push_back(spec.to_string());
  j["extremal"] = ext;
}

void to_json(json& j, const Violation& x) {
  j = json{{"slice", x.slice}, {"graph6", x.graph6}, {"observed", x.observed},
           {"bound", x.bound}};
}

void to_json(json& j, const VerificationRun& x) {
  j = json{{"bound_id", x.bound_id},
           {"n_min", x.n_min},
           {"n_max", x.n_max},
           {"graphs_checked", x.graphs_checked},
           {"violation_count", x.violation_count},
           {"violations", x.violations},
           {"sharp_count", x.sharp_count},
           {"sharp_witnesses", x.sharp_witnesses},
           {"uniqueness_checked", x.uniqueness_checked},
           {"uniqueness_ok", x.uniqueness_ok},
           {"uniqueness_mismatches", x.uniqueness_mismatches},
           {"attainment_checked", x.attainment_checked},
           {"attained_ok", x.attained_ok},
           {"unattained", x.unattained},
           {"wall_time_ms", x.wall_time_ms}};
}

void to_json(json& j, const ScanRow& x) {
  j = json{{"experiment", x.experiment},
           {"point", x.point},
           {"best_value", x.best_value},
           {"argmax_class", x.argmax_class},
           {"witness_graph6", x.witness_graph6},
           {"note", x.note}};
}

json make_report(const std::string& command, json payload) {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return json{{"schema_version", 1},
              {"command", command},
              {"generated_at", buf},
              {"payload", std::move(payload)}};
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const std::string& cell = row[i];
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        out += '"';
        for (char c : cell) {
          if (c == '"') out += '"';
          out += c;
        }
        out += '"';
      } else {
        out += cell;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace ecc
