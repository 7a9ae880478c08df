#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hypercop/graph.hpp"
#include "hypercop/half_int.hpp"

namespace hypercop::cli {

/// Analysis report. Field order is insertion order, so identical inputs give
/// identical bytes; timings only appear when requested.
class Report {
 public:
  void set_input(const std::string& path, std::string_view bytes);
  void set_graph(const Graph& g, const DistanceMatrix& dm);

  /// New result object, pre-tagged with "op".
  nlohmann::ordered_json& add(const std::string& op);
  void add_timing(const std::string& op, double millis);
  void enable_timings() { timings_enabled_ = true; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  nlohmann::ordered_json input_;
  nlohmann::ordered_json graph_;
  nlohmann::ordered_json results_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json timings_ = nlohmann::ordered_json::object();
  bool timings_enabled_ = false;
};

inline std::string json_half(HalfInt h) { return h.to_string(); }

}  // namespace hypercop::cli
