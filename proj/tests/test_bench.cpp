#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dcc/bench.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = DCC_DATA_DIR;

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dcc-bench-" + std::to_string(Catch::rngSeed()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int value = 0;
    return value;
  }
  fs::path file(const std::string& name, const std::string& contents) const {
    fs::path p = path / name;
    std::ofstream(p) << contents;
    return p;
  }
};

dcc::DatasetManifest parse(const std::string& text, const fs::path& base) {
  std::istringstream in(text);
  return dcc::load_manifest(in, base);
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("manifest parsing resolves paths and optional labels") {
  TempDir tmp;
  tmp.file("a.edges", "x y\n");
  tmp.file("a.labels", "x 1\ny 1\n");
  tmp.file("b.edges", "p q\n");

  auto manifest = parse(
      "# registry\n"
      "[first]\n"
      "edges = a.edges   # trailing comment\n"
      "labels = a.labels\n"
      "\n"
      "[second]\n"
      "edges=b.edges\n",
      tmp.path);

  REQUIRE(manifest.entries.size() == 2);
  CHECK(manifest.entries[0].name == "first");
  CHECK(manifest.entries[0].edges == tmp.path / "a.edges");
  REQUIRE(manifest.entries[0].labels.has_value());
  CHECK(*manifest.entries[0].labels == tmp.path / "a.labels");
  CHECK(manifest.entries[1].name == "second");
  CHECK_FALSE(manifest.entries[1].labels.has_value());
}

TEST_CASE("manifest parsing rejects malformed input") {
  TempDir tmp;
  tmp.file("ok.edges", "x y\n");

  CHECK(parse("", tmp.path).entries.empty());
  CHECK(parse("# only comments\n\n", tmp.path).entries.empty());

  CHECK_THROWS_AS(parse("[broken\nedges = ok.edges\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[]\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a,b]\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\nedges = ok.edges\n[a]\nedges = ok.edges\n", tmp.path),
                  dcc::ParseError);
  CHECK_THROWS_AS(parse("edges = ok.edges\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\nedges ok.edges\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\nedges =\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\ncolor = blue\nedges = ok.edges\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\nedges = missing.edges\n", tmp.path), dcc::ParseError);
  // A section with no edges key, whether followed by another or at EOF.
  CHECK_THROWS_AS(parse("[a]\n[b]\nedges = ok.edges\n", tmp.path), dcc::ParseError);
  CHECK_THROWS_AS(parse("[a]\nlabels = ok.edges\n", tmp.path), dcc::ParseError);

  try {
    parse("[a]\nedges = ok.edges\nbogus line\n", tmp.path);
    FAIL("expected ParseError");
  } catch (const dcc::ParseError& e) {
    CHECK(e.line() == 3);
  }

  CHECK_THROWS_AS(dcc::load_manifest(tmp.path / "no-such.manifest"), dcc::ParseError);
}

TEST_CASE("bench produces one report per dataset/algorithm/seed triple") {
  auto manifest = dcc::load_manifest(kDataDir / "karate.manifest");
  REQUIRE(manifest.entries.size() == 1);

  dcc::BenchOptions opt{{"dcc", "lpa"}, {0, 1, 2, 3, 4}};
  auto result = dcc::run_bench(manifest, opt);
  CHECK(result.failures.empty());
  REQUIRE(result.reports.size() == 10);

  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    CHECK(r.dataset == "karate");
    CHECK(r.algorithm == (i < 5 ? "dcc" : "lpa"));
    CHECK(r.seed == i % 5);
    CHECK(r.communities >= 1);
    // Karate is connected with labels, so everything except single-community
    // z-modularity (degenerate denominator) is defined.
    for (const char* metric : dcc::kMetricNames) {
      if (std::string(metric) == "zm")
        CHECK(r.values.count(metric) == (r.communities >= 2 ? 1 : 0));
      else
        CHECK(r.values.count(metric) == 1);
    }
  }
}

TEST_CASE("bench records failures instead of aborting the sweep") {
  auto manifest = dcc::load_manifest(kDataDir / "karate.manifest");
  manifest.entries.push_back({"ghost", "/nonexistent/ghost.edges", std::nullopt});

  dcc::BenchOptions opt{{"dcc", "mystery"}, {0, 1}};
  auto result = dcc::run_bench(manifest, opt);

  // ghost fails to load (2 algorithms x 2 seeds) and the unknown algorithm
  // fails on karate (2 seeds); karate/dcc still succeeds.
  REQUIRE(result.reports.size() == 2);
  CHECK(result.reports[0].algorithm == "dcc");
  REQUIRE(result.failures.size() == 6);
  for (const auto& f : result.failures) {
    if (f.dataset == "ghost")
      CHECK(f.message.find("cannot open") != std::string::npos);
    else
      CHECK(f.message.find("unknown algorithm") != std::string::npos);
  }
  // Sorted by (dataset, algorithm, seed).
  CHECK(result.failures.front().dataset == "ghost");
  CHECK(result.failures.back().algorithm == "mystery");
}

TEST_CASE("median of an even count averages the middle pair") {
  CHECK(dcc::median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(dcc::median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK(dcc::median({7.0}) == 7.0);
}

TEST_CASE("bench output files have the documented shape") {
  auto manifest = dcc::load_manifest(kDataDir / "karate.manifest");
  dcc::BenchOptions opt{{"dcc", "lpa"}, {0, 1, 2}};
  auto result = dcc::run_bench(manifest, opt);

  TempDir tmp;
  fs::path out_dir = tmp.path / "bench-out";
  dcc::write_bench_outputs(result, manifest, opt, out_dir);

  auto csv = read_lines(out_dir / "results.csv");
  REQUIRE(csv.size() == 2 + result.reports.size());
  CHECK(csv[0].rfind("# generated ", 0) == 0);
  CHECK(csv[1] == dcc::csv_header());
  CHECK(csv[2] == dcc::csv_row(result.reports[0]));
  for (std::size_t i = 1; i < csv.size(); ++i)
    CHECK(std::count(csv[i].begin(), csv[i].end(), ',') == 9);

  std::ifstream json_in(out_dir / "results.json");
  auto doc = nlohmann::json::parse(json_in);
  CHECK(doc.at("toolkit_version") == dcc::kToolkitVersion);
  CHECK(doc.at("conventions_version") == dcc::kConventionsVersion);
  CHECK(doc.at("reports").size() == result.reports.size());
  CHECK_FALSE(doc.contains("failures"));
  CHECK_FALSE(doc.contains("generated"));
  CHECK(doc["reports"][0].at("dataset") == "karate");
  CHECK(doc["reports"][0].at("metrics").contains("ngm"));

  for (const char* metric : dcc::kMetricNames) {
    auto pivot = read_lines(out_dir / ("pivot_" + std::string(metric) + ".csv"));
    REQUIRE(pivot.size() == 2);
    CHECK(pivot[0] == "dataset,dcc,lpa");
    CHECK(pivot[1].rfind("karate,", 0) == 0);
  }

  // The ngm pivot cell is the median over the three per-seed values.
  std::vector<double> dcc_ngm;
  for (const auto& r : result.reports)
    if (r.algorithm == "dcc") dcc_ngm.push_back(r.values.at("ngm"));
  auto pivot = read_lines(out_dir / "pivot_ngm.csv");
  std::string expected = "karate," + dcc::format_value(dcc::median(dcc_ngm));
  CHECK(pivot[1].rfind(expected, 0) == 0);
}
