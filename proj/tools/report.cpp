#include "report.hpp"

#include <cstdio>

#include "hypercop/io.hpp"
#include "hypercop/version.hpp"

namespace hypercop::cli {

void Report::set_input(const std::string& path, std::string_view bytes) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  input_ = nlohmann::ordered_json::object();
  input_["path"] = path;
  input_["fnv1a"] = hex;
}

void Report::set_graph(const Graph& g, const DistanceMatrix& dm) {
  graph_ = nlohmann::ordered_json::object();
  graph_["n"] = g.size();
  graph_["m"] = g.edge_count();
  graph_["diameter"] = dm.diameter();
}

nlohmann::ordered_json& Report::add(const std::string& op) {
  nlohmann::ordered_json r;
  r["op"] = op;
  results_.push_back(std::move(r));
  return results_.back();
}

void Report::add_timing(const std::string& op, double millis) { timings_[op] = millis; }

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["tool"] = "hypercop";
  j["version"] = kVersion;
  if (!input_.is_null()) j["input"] = input_;
  if (!graph_.is_null()) j["graph"] = graph_;
  j["results"] = results_;
  if (timings_enabled_) j["timings_ms"] = timings_;
  return j.dump(2) + "\n";
}

namespace {

std::string scalar(const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string Report::to_text() const {
  std::string out;
  if (!graph_.is_null()) {
    out += "graph: n=" + scalar(graph_["n"]) + " m=" + scalar(graph_["m"]) + " diameter=" + scalar(graph_["diameter"]) +
           "\n";
  }
  for (const auto& r : results_) {
    out += scalar(r["op"]) + "\n";
    for (const auto& [key, value] : r.items()) {
      if (key == "op") continue;
      out += "  " + key + ": " + scalar(value) + "\n";
    }
  }
  if (timings_enabled_) {
    for (const auto& [key, value] : timings_.items()) out += "time " + key + ": " + value.dump() + " ms\n";
  }
  return out;
}

}  // namespace hypercop::cli
