#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/partition.hpp"
#include "dcc/rng.hpp"

namespace dcc {

struct LpaConfig {
  std::uint64_t seed = 0;
  std::size_t max_iterations = 100;
};

// Asynchronous label propagation: every node starts with its own label, nodes
// are visited in a fresh random permutation each sweep, and each adopts the
// most frequent label among its neighbors (ties to the smallest label).
// Stops after a sweep with no change, or at the iteration cap.
inline Partition run_lpa(const Graph& g, const LpaConfig& cfg = {}) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> labels(n);
  std::iota(labels.begin(), labels.end(), NodeId{0});
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(cfg.seed);

  std::vector<NodeId> around;
  for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
    shuffle(order, rng);
    bool changed = false;
    for (NodeId v : order) {
      auto nbrs = g.neighbors(v);
      if (nbrs.empty()) continue;
      around.clear();
      for (NodeId u : nbrs) around.push_back(labels[u]);
      std::sort(around.begin(), around.end());
      NodeId best = around[0];
      std::size_t best_count = 0;
      for (std::size_t i = 0; i < around.size();) {
        std::size_t j = i;
        while (j < around.size() && around[j] == around[i]) ++j;
        if (j - i > best_count) {  // strict, so equal counts keep the smaller label
          best_count = j - i;
          best = around[i];
        }
        i = j;
      }
      if (labels[v] != best) {
        labels[v] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<std::vector<NodeId>> comms;
  std::vector<std::int64_t> index_of(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    NodeId l = labels[v];
    if (index_of[l] < 0) {
      index_of[l] = static_cast<std::int64_t>(comms.size());
      comms.emplace_back();
    }
    comms[static_cast<std::size_t>(index_of[l])].push_back(v);
  }
  return Partition::from_communities(n, std::move(comms)).canonical();
}

}  // namespace dcc
