#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "dcc/cascades.hpp"
#include "dcc/datasets.hpp"
#include "dcc/tie_strength.hpp"
#include "oracles.hpp"

using dcc::NodeId;
using dcc::Partition;
using dcc::Ratio;
using dcc::RunConfig;

namespace {

// Two K4 cliques; add_bridge joins them with the weak 3-4 edge.
std::vector<oracle::Edge> two_k4(bool add_bridge) {
  std::vector<oracle::Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  if (add_bridge) edges.push_back({3, 4});
  return edges;
}

// Neighborhood fixture for the documented membership computation: node 10
// has six neighbors, its neighbor 13 has five, and the common-neighbor
// overlaps along 13's other neighbors sum to 10, giving 10/(6*5) = 1/3.
dcc::Graph membership_example() {
  return dcc::load_edge_list(
             "10 11\n10 13\n10 14\n10 15\n10 16\n10 17\n"
             "11 12\n11 13\n11 15\n12 13\n12 14\n13 14\n13 15\n14 2\n14 15\n")
      .graph;
}

void check_cascade_shape(const dcc::Graph& g, const dcc::Cascade& cascade) {
  REQUIRE(cascade.steps.size() > 1);
  std::set<NodeId> seen;
  std::optional<Ratio> prev;
  for (std::size_t i = 0; i < cascade.steps.size(); ++i) {
    const auto& step = cascade.steps[i];
    CHECK(step.time == i);
    CHECK(seen.insert(step.node).second);  // no repeats
    if (i + 1 < cascade.steps.size()) {
      REQUIRE(step.chosen_next);
      CHECK(*step.chosen_next == cascade.steps[i + 1].node);
      CHECK(g.has_edge(step.node, cascade.steps[i + 1].node));
      Ratio strength = dcc::ns(g, step.node, cascade.steps[i + 1].node);
      CHECK(!strength.is_zero());
      if (prev) CHECK(*prev <= strength);  // non-decreasing along the walk
      prev = strength;
    } else {
      CHECK_FALSE(step.chosen_next);
    }
  }
}

}  // namespace

TEST_CASE("edgeless graphs produce no cascades") {
  dcc::GraphBuilder builder;
  builder.intern("a");
  builder.intern("b");
  builder.intern("c");
  auto g = builder.build();
  auto gen = dcc::generate_cascades(g, {});
  CHECK(gen.cascades.empty());
  CHECK(gen.unassigned == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("cascades are monotone, repeat-free, and node-disjoint") {
  auto karate = dcc::builtin_karate().graph;
  std::mt19937 meta(5);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto gen = dcc::generate_cascades(karate, RunConfig{.seed = seed});
    std::set<NodeId> all_members;
    for (const auto& cascade : gen.cascades) {
      check_cascade_shape(karate, cascade);
      for (const auto& step : cascade.steps) CHECK(all_members.insert(step.node).second);
    }
    for (NodeId v : gen.unassigned) CHECK(all_members.insert(v).second);
    CHECK(all_members.size() == karate.node_count());
  }
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(meta() % 16);
    auto g = oracle::make_graph(n, oracle::random_graph_np(meta, n, 0.35));
    auto gen = dcc::generate_cascades(g, RunConfig{.seed = meta()});
    for (const auto& cascade : gen.cascades) check_cascade_shape(g, cascade);
  }
}

TEST_CASE("weak bridges confine cascades to their clique") {
  auto g = oracle::make_graph(8, two_k4(true));
  CHECK(dcc::ns(g, 3, 4).is_zero());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto gen = dcc::generate_cascades(g, RunConfig{.seed = seed});
    for (const auto& cascade : gen.cascades) {
      bool low = false, high = false;
      for (const auto& step : cascade.steps) (step.node <= 3 ? low : high) = true;
      CHECK((low ^ high));  // never both sides
    }
  }
}

TEST_CASE("membership score reproduces the documented 1/3") {
  auto g = membership_example();
  NodeId p = *g.find("10");
  REQUIRE(g.degree(p) == 6);
  REQUIRE(g.degree(*g.find("13")) == 5);
  std::vector<NodeId> community{*g.find("12"), *g.find("13")};
  std::sort(community.begin(), community.end());
  Ratio score = dcc::preferential_membership(g, p, community);
  CHECK(score == Ratio(1, 3));
  CHECK(score.value() == Catch::Approx(0.333).margin(0.0005));
  // Against the brute-force oracle as well.
  auto adj = oracle::Adjacency{};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    adj[static_cast<int>(v)];
    for (NodeId u : g.neighbors(v)) adj[static_cast<int>(v)].insert(static_cast<int>(u));
  }
  long double reference =
      oracle::pm(adj, static_cast<int>(p), {static_cast<int>(community[0]),
                                            static_cast<int>(community[1])});
  CHECK(score.value() == Catch::Approx(static_cast<double>(reference)).epsilon(1e-12));
}

TEST_CASE("membership score is zero without neighbors inside the community") {
  auto g = oracle::make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});  // triangle + pendant 3
  std::vector<NodeId> community{1, 2};
  CHECK(dcc::preferential_membership(g, 3, community).is_zero());
  // Degree-0 node: empty sum as well.
  dcc::GraphBuilder builder;
  builder.intern("isolated");
  builder.intern("x");
  builder.intern("y");
  builder.add_edge("x", "y");
  auto with_isolated = builder.build();
  std::vector<NodeId> xy{1, 2};
  CHECK(dcc::preferential_membership(with_isolated, 0, xy).is_zero());
}

TEST_CASE("membership scores match the oracle on random graphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    auto edges = oracle::random_graph_np(rng, n, 0.45);
    auto g = oracle::make_graph(n, edges);
    auto adj = oracle::make_adjacency(n, edges);
    int p = static_cast<int>(rng() % n);
    std::set<int> community;
    std::vector<NodeId> community_sorted;
    for (int v = 0; v < n; ++v) {
      if (v == p || rng() % 2) continue;
      community.insert(v);
      community_sorted.push_back(static_cast<NodeId>(v));
    }
    Ratio lib = dcc::preferential_membership(g, static_cast<NodeId>(p), community_sorted);
    long double reference = oracle::pm(adj, p, community);
    CHECK(lib.value() == Catch::Approx(static_cast<double>(reference)).margin(1e-9));
  }
}

TEST_CASE("merge_overlapping folds transitive overlaps") {
  using Communities = std::vector<std::vector<NodeId>>;
  CHECK(dcc::merge_overlapping({{1, 2}, {2, 3}, {4}}) == Communities{{1, 2, 3}, {4}});
  CHECK(dcc::merge_overlapping({{0, 1}, {1, 2}, {2, 3}}) == Communities{{0, 1, 2, 3}});
  Communities disjoint{{0, 1}, {2, 3}, {4}};
  CHECK(dcc::merge_overlapping(disjoint) == disjoint);
  CHECK(dcc::merge_overlapping({}).empty());
  // Output order: ascending smallest member.
  CHECK(dcc::merge_overlapping({{7, 8}, {0, 9}, {3}}) == Communities{{0, 9}, {3}, {7, 8}});
}

TEST_CASE("merge_overlapping is idempotent on random families") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<NodeId>> family;
    int sets = 1 + static_cast<int>(rng() % 8);
    for (int s = 0; s < sets; ++s) {
      std::set<NodeId> members;
      int size = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < size; ++i) members.insert(static_cast<NodeId>(rng() % 20));
      family.emplace_back(members.begin(), members.end());
    }
    auto once = dcc::merge_overlapping(family);
    auto twice = dcc::merge_overlapping(once);
    CHECK(once == twice);
    std::set<NodeId> seen;
    for (const auto& merged : once)
      for (NodeId v : merged) CHECK(seen.insert(v).second);  // pairwise disjoint
  }
}

TEST_CASE("assignment rounds leave completed partitions unchanged") {
  auto g = oracle::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto p = Partition::from_communities(3, {{0, 1, 2}});
  CHECK(dcc::assign_unlabeled(g, p, {}) == p);
}

TEST_CASE("unlabeled node joins its only labeled-neighbor community") {
  auto g = membership_example();
  NodeId n10 = *g.find("10"), n11 = *g.find("11"), n12 = *g.find("12"), n13 = *g.find("13");
  std::vector<NodeId> cascade_members{n11, n12, n13};
  std::sort(cascade_members.begin(), cascade_members.end());
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (v != n11 && v != n12 && v != n13) rest.push_back(v);
  auto seeded = Partition::from_communities(g.node_count(), {cascade_members}, rest);
  auto assigned = dcc::assign_unlabeled(g, seeded, {});
  CHECK(assigned.fully_assigned());
  CHECK(*assigned.community_of(n10) == *assigned.community_of(n13));
}

TEST_CASE("nodes with no labeled reach become singletons") {
  dcc::GraphBuilder builder;
  builder.intern("a");
  builder.intern("b");
  builder.intern("c");  // isolated
  builder.add_edge("a", "b");
  auto g = builder.build();
  auto seeded = Partition::from_communities(3, {{0, 1}}, {2});
  auto assigned = dcc::assign_unlabeled(g, seeded, {});
  REQUIRE(assigned.community_count() == 2);
  CHECK(assigned.community(1) == std::vector<NodeId>{2});
}

TEST_CASE("full pipeline splits disjoint cliques exactly") {
  auto g = oracle::make_graph(8, two_k4(false));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto p = dcc::run_dcc(g, RunConfig{.seed = seed});
    REQUIRE(p.community_count() == 2);
    CHECK(p.community(0) == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(p.community(1) == std::vector<NodeId>{4, 5, 6, 7});
  }
}

TEST_CASE("pipeline output is a disjoint cover on arbitrary graphs") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 24);
    auto edges = oracle::random_graph_np(rng, n, 0.15);  // often disconnected
    auto g = oracle::make_graph(n, edges);
    auto p = dcc::run_dcc(g, RunConfig{.seed = rng()});
    CHECK(p.node_count() == g.node_count());
    CHECK(p.fully_assigned());
    // No community spans two components.
    auto comp = oracle::components(n, edges);
    for (const auto& community : p.communities()) {
      for (NodeId v : community) CHECK(comp[v] == comp[community.front()]);
    }
  }
}

TEST_CASE("empty graph yields an empty partition") {
  dcc::Graph g;
  auto p = dcc::run_dcc(g, {});
  CHECK(p.node_count() == 0);
  CHECK(p.community_count() == 0);
}

TEST_CASE("identical configuration reproduces identical partitions") {
  auto karate = dcc::builtin_karate().graph;
  auto reference = dcc::run_dcc(karate, RunConfig{.seed = 3});
  for (int run = 0; run < 20; ++run) CHECK(dcc::run_dcc(karate, RunConfig{.seed = 3}) == reference);
  auto other = dcc::run_dcc(karate, RunConfig{.seed = 4});
  CHECK(other.fully_assigned());  // different seeds still produce valid covers
}

TEST_CASE("the positive-strength gate is configurable") {
  // Path a-b-c-d: every edge has zero strength, so the gate blocks all walks.
  auto g = oracle::make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto gated = dcc::generate_cascades(g, RunConfig{.seed = 0});
  CHECK(gated.cascades.empty());
  CHECK(gated.unassigned.size() == 4);
  // Without it, 0 <= 0 chains are admissible and walks extend.
  auto open = dcc::generate_cascades(g, RunConfig{.seed = 0, .require_positive_ns = false});
  CHECK_FALSE(open.cascades.empty());
}
