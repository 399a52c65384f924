// Command-line front end. Exit codes: 0 success, 1 partial benchmark failure,
// 2 usage or input-format problems, 3 node-set mismatches between inputs.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dcc/bench.hpp"
#include "dcc/cascades.hpp"
#include "dcc/graph.hpp"
#include "dcc/io.hpp"
#include "dcc/lpa.hpp"
#include "dcc/report.hpp"
#include "dcc/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;

dcc::Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dcc::ParseError("cannot open " + path);
  return dcc::load_edge_list(in).graph;
}

dcc::Partition load_truth_file(const dcc::Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dcc::ParseError("cannot open " + path);
  return dcc::ground_truth_partition(g, dcc::load_labels(in));
}

// Output sink: '-' means stdout.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw dcc::ParseError("cannot open " + path + " for writing");
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw dcc::ParseError("malformed number '" + token + "'");
  return value;
}

// "0,3,7" and "0..9" (inclusive) both work, also mixed: "0..3,10".
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (const auto& token : split_list(text)) {
    if (auto dots = token.find(".."); dots != std::string::npos) {
      std::uint64_t lo = parse_u64(token.substr(0, dots));
      std::uint64_t hi = parse_u64(token.substr(dots + 2));
      if (hi < lo) throw dcc::ParseError("empty seed range '" + token + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(parse_u64(token));
    }
  }
  return seeds;
}

bool known_algorithm(const std::string& name) { return name == "dcc" || name == "lpa"; }

struct DetectArgs {
  std::string input;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "json";
};

int run_detect(const DetectArgs& args) {
  if (!known_algorithm(args.algorithm)) {
    std::cerr << "error: unknown algorithm '" << args.algorithm << "'\n";
    return kUsage;
  }
  dcc::Graph g = load_graph_file(args.input);
  dcc::Partition p = dcc::run_algorithm(g, args.algorithm, args.seed);
  Sink sink(args.output);
  if (args.format == "tsv")
    dcc::write_partition_tsv(sink.stream(), g, p);
  else
    dcc::write_partition_json(sink.stream(), g, p, args.seed, args.algorithm);
  return kOk;
}

struct EvalArgs {
  std::string input;
  std::string partition;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string ground_truth;
  std::string metrics;
  std::string output = "-";
  std::string format = "json";
};

int run_eval(const EvalArgs& args) {
  dcc::Graph g = load_graph_file(args.input);

  std::string algorithm_name;
  dcc::Partition p;
  if (!args.partition.empty()) {
    std::ifstream in(args.partition);
    if (!in) throw dcc::ParseError("cannot open " + args.partition);
    bool json = std::filesystem::path(args.partition).extension() == ".json";
    p = json ? dcc::read_partition_json(in, g) : dcc::read_partition_tsv(in, g);
    algorithm_name = "imported";
  } else if (!args.algorithm.empty()) {
    if (!known_algorithm(args.algorithm)) {
      std::cerr << "error: unknown algorithm '" << args.algorithm << "'\n";
      return kUsage;
    }
    p = dcc::run_algorithm(g, args.algorithm, args.seed);
    algorithm_name = args.algorithm;
  } else {
    std::cerr << "error: provide --partition or --algorithm\n";
    return kUsage;
  }

  std::optional<dcc::Partition> truth;
  if (!args.ground_truth.empty()) truth = load_truth_file(g, args.ground_truth);

  std::set<std::string> which;
  for (const auto& name : split_list(args.metrics)) {
    if (std::find_if(dcc::kMetricNames.begin(), dcc::kMetricNames.end(),
                     [&](const char* m) { return name == m; }) == dcc::kMetricNames.end()) {
      std::cerr << "error: unknown metric '" << name << "'\n";
      return kUsage;
    }
    which.insert(name);
  }

  std::string dataset = std::filesystem::path(args.input).stem().string();
  dcc::EvalReport report = dcc::evaluate(g, p, truth ? &*truth : nullptr, dataset,
                                         algorithm_name, args.seed, which);
  Sink sink(args.output);
  if (args.format == "csv")
    sink.stream() << dcc::csv_header() << '\n' << dcc::csv_row(report) << '\n';
  else
    sink.stream() << dcc::to_json(report).dump(2) << '\n';
  return kOk;
}

struct ImportArgs {
  std::string input;
  std::string partition;
  std::string output = "-";
  std::string format = "tsv";
};

int run_import(const ImportArgs& args) {
  dcc::Graph g = load_graph_file(args.input);
  std::ifstream in(args.partition);
  if (!in) throw dcc::ParseError("cannot open " + args.partition);
  dcc::Partition p = dcc::read_partition_tsv(in, g);
  Sink sink(args.output);
  if (args.format == "json")
    dcc::write_partition_json(sink.stream(), g, p, 0, "imported");
  else
    dcc::write_partition_tsv(sink.stream(), g, p);
  return kOk;
}

struct BenchArgs {
  std::string manifest;
  std::string algorithms = "dcc,lpa";
  std::string seeds = "0..9";
  std::string out = "bench-out";
};

int run_bench_cmd(const BenchArgs& args) {
  dcc::BenchOptions opt;
  opt.algorithms = split_list(args.algorithms);
  if (opt.algorithms.empty()) {
    std::cerr << "error: empty algorithm list\n";
    return kUsage;
  }
  for (const auto& name : opt.algorithms) {
    if (!known_algorithm(name)) {
      std::cerr << "error: unknown algorithm '" << name << "'\n";
      return kUsage;
    }
  }
  opt.seeds = parse_seed_list(args.seeds);
  if (opt.seeds.empty()) {
    std::cerr << "error: empty seed list\n";
    return kUsage;
  }

  dcc::DatasetManifest manifest = dcc::load_manifest(args.manifest);
  if (manifest.entries.empty()) {
    std::cerr << "error: manifest lists no datasets\n";
    return kUsage;
  }

  dcc::BenchResult result = dcc::run_bench(manifest, opt);
  dcc::write_bench_outputs(result, manifest, opt, args.out);
  for (const auto& f : result.failures)
    std::cerr << "failed: " << f.dataset << '/' << f.algorithm << "/seed " << f.seed << ": "
              << f.message << '\n';
  std::cerr << "wrote " << result.reports.size() << " reports to " << args.out << '\n';
  return result.failures.empty() ? kOk : kPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection via tie-strength cascades, with an LPA baseline,\n"
               "partition quality/accuracy metrics, and a benchmark harness."};
  app.set_version_flag("--version", dcc::kToolkitVersion);
  app.require_subcommand(1);

  DetectArgs detect_args;
  auto* detect = app.add_subcommand("detect", "Run a detection algorithm on an edge list");
  detect->add_option("--input", detect_args.input, "edge-list file")->required();
  detect->add_option("--algorithm", detect_args.algorithm, "dcc or lpa")->required();
  detect->add_option("--seed", detect_args.seed, "RNG seed (default 0)");
  detect->add_option("--output", detect_args.output, "output file, '-' for stdout");
  detect->add_option("--format", detect_args.format, "tsv or json (default json)")
      ->check(CLI::IsMember({"tsv", "json"}));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Score a partition against metrics");
  eval->add_option("--input", eval_args.input, "edge-list file")->required();
  eval->add_option("--partition", eval_args.partition, "partition file (.tsv or .json)");
  eval->add_option("--algorithm", eval_args.algorithm, "compute the partition instead: dcc or lpa");
  eval->add_option("--seed", eval_args.seed, "RNG seed for --algorithm (default 0)");
  eval->add_option("--ground-truth", eval_args.ground_truth, "label file enabling nmi/ari");
  eval->add_option("--metrics", eval_args.metrics,
                   "comma list from ngm,md,zm,cut_ratio,nmi,ari (default: all applicable)");
  eval->add_option("--output", eval_args.output, "output file, '-' for stdout");
  eval->add_option("--format", eval_args.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  ImportArgs import_args;
  auto* import = app.add_subcommand("import-partition",
                                    "Validate an external partition against a graph");
  import->add_option("--input", import_args.input, "edge-list file")->required();
  import->add_option("--partition", import_args.partition, "partition TSV file")->required();
  import->add_option("--output", import_args.output, "output file, '-' for stdout");
  import->add_option("--format", import_args.format, "tsv or json (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a full dataset/algorithm/seed matrix");
  bench->add_option("--manifest", bench_args.manifest, "dataset manifest file")->required();
  bench->add_option("--algorithms", bench_args.algorithms, "comma list (default dcc,lpa)");
  bench->add_option("--seeds", bench_args.seeds, "comma list, ranges like 0..9 (default 0..9)");
  bench->add_option("--out", bench_args.out, "output directory (default bench-out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (detect->parsed()) return run_detect(detect_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (import->parsed()) return run_import(import_args);
    if (bench->parsed()) return run_bench_cmd(bench_args);
  } catch (const dcc::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
