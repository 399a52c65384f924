#pragma once

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "dcc/cascades.hpp"
#include "dcc/graph.hpp"
#include "dcc/lpa.hpp"
#include "dcc/report.hpp"
#include "dcc/version.hpp"

namespace dcc {

struct ManifestEntry {
  std::string name;
  std::filesystem::path edges;
  std::optional<std::filesystem::path> labels;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Flat dataset registry:
//
//   [name]
//   edges = path/to/file.edges
//   labels = path/to/file.labels   # optional
//
// '#' starts a comment; paths resolve relative to `base_dir`. Names must be
// unique, `edges` is mandatory, and every referenced file must exist.
inline DatasetManifest load_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  DatasetManifest manifest;
  std::string line;
  std::size_t line_no = 0;
  ManifestEntry* current = nullptr;

  auto finish_entry = [&](std::size_t at_line) {
    if (current && current->edges.empty())
      throw ParseError("dataset '" + current->name + "' has no edges file", at_line);
  };
  auto resolve = [&](std::string_view value, std::size_t at_line) {
    std::filesystem::path path = base_dir / std::string(value);
    if (!std::filesystem::exists(path))
      throw ParseError("referenced file does not exist: " + path.string(), at_line);
    return path;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;

    if (view.front() == '[') {
      if (view.back() != ']') throw ParseError("unterminated section header", line_no);
      auto name = detail::trim(view.substr(1, view.size() - 2));
      if (name.empty()) throw ParseError("empty dataset name", line_no);
      if (name.find(',') != std::string_view::npos)
        throw ParseError("dataset name must not contain ','", line_no);
      for (const auto& entry : manifest.entries)
        if (entry.name == name)
          throw ParseError("duplicate dataset name '" + std::string(name) + "'", line_no);
      finish_entry(line_no);
      manifest.entries.push_back({std::string(name), {}, std::nullopt});
      current = &manifest.entries.back();
      continue;
    }

    auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
    if (!current) throw ParseError("key outside of any [dataset] section", line_no);
    auto key = detail::trim(view.substr(0, eq));
    auto value = detail::trim(view.substr(eq + 1));
    if (value.empty()) throw ParseError("empty value for key '" + std::string(key) + "'", line_no);
    if (key == "edges") {
      current->edges = resolve(value, line_no);
    } else if (key == "labels") {
      current->labels = resolve(value, line_no);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  finish_entry(line_no);
  return manifest;
}

inline DatasetManifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open manifest " + file.string());
  return load_manifest(in, file.parent_path());
}

inline Partition run_algorithm(const Graph& g, const std::string& name, std::uint64_t seed) {
  if (name == "dcc") return run_dcc(g, RunConfig{.seed = seed});
  if (name == "lpa") return run_lpa(g, LpaConfig{.seed = seed});
  throw DomainError("unknown algorithm '" + name + "'");
}

struct BenchOptions {
  std::vector<std::string> algorithms;
  std::vector<std::uint64_t> seeds;
};

struct BenchFailure {
  std::string dataset;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string message;
};

// One report (or one failure) per requested (dataset, algorithm, seed)
// triple, both lists sorted by that key so assembly order never shows.
struct BenchResult {
  std::vector<EvalReport> reports;
  std::vector<BenchFailure> failures;
};

inline BenchResult run_bench(const DatasetManifest& manifest, const BenchOptions& opt) {
  BenchResult result;
  for (const auto& entry : manifest.entries) {
    Graph g;
    std::optional<Partition> truth;
    std::string load_error;
    try {
      std::ifstream in(entry.edges);
      if (!in) throw ParseError("cannot open " + entry.edges.string());
      g = load_edge_list(in).graph;
      if (entry.labels) {
        std::ifstream labels_in(*entry.labels);
        if (!labels_in) throw ParseError("cannot open " + entry.labels->string());
        truth = ground_truth_partition(g, load_labels(labels_in));
      }
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (const auto& algorithm : opt.algorithms) {
      for (std::uint64_t seed : opt.seeds) {
        if (!load_error.empty()) {
          result.failures.push_back({entry.name, algorithm, seed, load_error});
          continue;
        }
        try {
          Partition p = run_algorithm(g, algorithm, seed);
          result.reports.push_back(
              evaluate(g, p, truth ? &*truth : nullptr, entry.name, algorithm, seed));
        } catch (const std::exception& e) {
          result.failures.push_back({entry.name, algorithm, seed, e.what()});
        }
      }
    }
  }
  auto report_key = [](const EvalReport& r) { return std::tie(r.dataset, r.algorithm, r.seed); };
  std::sort(result.reports.begin(), result.reports.end(),
            [&](const auto& a, const auto& b) { return report_key(a) < report_key(b); });
  auto failure_key = [](const BenchFailure& f) { return std::tie(f.dataset, f.algorithm, f.seed); };
  std::sort(result.failures.begin(), result.failures.end(),
            [&](const auto& a, const auto& b) { return failure_key(a) < failure_key(b); });
  return result;
}

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Writes results.csv ('# generated <utc>' header line, then one row per
// report), results.json (versioned, timestamp-free), and per-metric pivot
// tables pivot_<metric>.csv with datasets as rows (manifest order),
// algorithms as columns, and the per-seed median as the cell value.
inline void write_bench_outputs(const BenchResult& result, const DatasetManifest& manifest,
                                const BenchOptions& opt, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  {
    std::ofstream out(out_dir / "results.csv");
    out << "# generated " << utc_timestamp() << '\n';
    out << csv_header() << '\n';
    for (const auto& r : result.reports) out << csv_row(r) << '\n';
  }

  {
    nlohmann::ordered_json doc;
    doc["toolkit_version"] = kToolkitVersion;
    doc["conventions_version"] = kConventionsVersion;
    auto& reports = doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r));
    if (!result.failures.empty()) {
      auto& failures = doc["failures"] = nlohmann::ordered_json::array();
      for (const auto& f : result.failures) {
        nlohmann::ordered_json one;
        one["dataset"] = f.dataset;
        one["algorithm"] = f.algorithm;
        one["seed"] = f.seed;
        one["message"] = f.message;
        failures.push_back(std::move(one));
      }
    }
    std::ofstream out(out_dir / "results.json");
    out << doc.dump(2) << '\n';
  }

  for (const char* metric : kMetricNames) {
    std::ofstream out(out_dir / ("pivot_" + std::string(metric) + ".csv"));
    out << "dataset";
    for (const auto& algorithm : opt.algorithms) out << ',' << algorithm;
    out << '\n';
    for (const auto& entry : manifest.entries) {
      out << entry.name;
      for (const auto& algorithm : opt.algorithms) {
        std::vector<double> values;
        for (const auto& r : result.reports) {
          if (r.dataset != entry.name || r.algorithm != algorithm) continue;
          if (auto it = r.values.find(metric); it != r.values.end()) values.push_back(it->second);
        }
        out << ',';
        if (!values.empty()) out << format_value(median(std::move(values)));
      }
      out << '\n';
    }
  }
}

}  // namespace dcc
