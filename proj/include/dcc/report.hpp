#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "json.hpp"

#include "dcc/graph.hpp"
#include "dcc/metrics.hpp"
#include "dcc/partition.hpp"

namespace dcc {

// Column order of the metric fields in every CSV this toolkit writes.
inline constexpr std::array<const char*, 6> kMetricNames = {"ngm",       "md",  "zm",
                                                            "cut_ratio", "nmi", "ari"};

// All metric values for one (dataset, algorithm, seed) run. A metric missing
// from `values` was undefined for the input (or not requested) and serializes
// as an empty CSV field / absent JSON key.
struct EvalReport {
  std::string dataset;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t communities = 0;
  std::map<std::string, double> values;
};

// 6 significant digits, '.' decimal separator.
inline std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string csv_header() {
  std::string header = "dataset,algorithm,seed,communities";
  for (const char* name : kMetricNames) {
    header += ',';
    header += name;
  }
  return header;
}

inline std::string csv_row(const EvalReport& r) {
  std::string row = r.dataset + ',' + r.algorithm + ',' + std::to_string(r.seed) + ',' +
                    std::to_string(r.communities);
  for (const char* name : kMetricNames) {
    row += ',';
    if (auto it = r.values.find(name); it != r.values.end()) row += format_value(it->second);
  }
  return row;
}

inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json doc;
  doc["dataset"] = r.dataset;
  doc["algorithm"] = r.algorithm;
  doc["seed"] = r.seed;
  doc["communities"] = r.communities;
  auto& metrics = doc["metrics"] = nlohmann::ordered_json::object();
  for (const char* name : kMetricNames)
    if (auto it = r.values.find(name); it != r.values.end()) metrics[name] = it->second;
  return doc;
}

// Computes the requested metrics (all of them when `which` is empty),
// recording defined values and silently omitting undefined ones. Accuracy
// metrics need a reference partition and are skipped without one.
inline EvalReport evaluate(const Graph& g, const Partition& p, const Partition* truth,
                           std::string dataset, std::string algorithm, std::uint64_t seed,
                           const std::set<std::string>& which = {}) {
  EvalReport r;
  r.dataset = std::move(dataset);
  r.algorithm = std::move(algorithm);
  r.seed = seed;
  r.communities = p.community_count();
  auto put = [&](const char* name, auto&& fn) {
    if (!which.empty() && !which.count(name)) return;
    try {
      r.values[name] = fn();
    } catch (const UndefinedMetricError&) {
    }
  };
  put("ngm", [&] { return ngm(g, p); });
  put("md", [&] { return modularity_density(g, p); });
  put("zm", [&] { return z_modularity(g, p); });
  put("cut_ratio", [&] { return cut_ratio(g, p); });
  if (truth) {
    put("nmi", [&] { return nmi(p, *truth); });
    put("ari", [&] { return ari(p, *truth); });
  }
  return r;
}

}  // namespace dcc
