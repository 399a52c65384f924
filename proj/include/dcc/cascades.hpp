#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/partition.hpp"
#include "dcc/rational.hpp"
#include "dcc/rng.hpp"
#include "dcc/tie_strength.hpp"

namespace dcc {

struct RunConfig {
  std::uint64_t seed = 0;
  // Extend cascades only across edges with strictly positive tie strength.
  // Without the gate, chains of all-zero strengths would satisfy the
  // non-decreasing acceptance test and crawl through unrelated nodes.
  bool require_positive_ns = true;
  // PM assignment round cap; 0 means the node count.
  std::size_t max_pm_rounds = 0;
};

struct CascadeStep {
  NodeId node;
  std::optional<NodeId> chosen_next;  // accepted successor; empty on the last step
  std::size_t time = 0;               // step index; recorded, not consumed
};

// A diffusion walk: consecutive nodes are adjacent, no node repeats, and the
// tie strengths along consecutive edges are non-decreasing.
struct Cascade {
  std::vector<CascadeStep> steps;

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.node);
    return out;
  }
};

struct CascadeGenResult {
  std::vector<Cascade> cascades;
  std::vector<NodeId> unassigned;  // walk starts that could not extend
};

// First phase: repeatedly seed a walk at a random unprocessed node and extend
// it greedily along maximum-tie-strength edges while the strengths do not
// decrease. Walks of length one leave their start node processed but
// unassigned. Every node is consumed exactly once, so this terminates.
inline CascadeGenResult generate_cascades(const Graph& g, const RunConfig& cfg,
                                          NSCache* cache = nullptr) {
  const std::size_t n = g.node_count();
  CascadeGenResult result;
  std::vector<char> unprocessed(n, 1);
  std::size_t remaining = n;
  Rng rng(cfg.seed);
  std::vector<NodeId> candidates;

  while (remaining > 0) {
    // k-th unprocessed node, uniformly
    std::size_t k = pick_index(rng, remaining);
    NodeId start = 0;
    for (NodeId v = 0;; ++v) {
      if (unprocessed[v] && k-- == 0) {
        start = v;
        break;
      }
    }
    unprocessed[start] = 0;
    --remaining;

    std::vector<NodeId> walk{start};
    std::optional<TieStrength> prev;
    NodeId cur = start;
    while (true) {
      candidates.clear();
      for (NodeId u : g.neighbors(cur))
        if (unprocessed[u]) candidates.push_back(u);
      auto best = find_maxts(g, cur, candidates, cache);
      if (!best) break;
      auto [next, strength] = *best;
      if (cfg.require_positive_ns && strength.is_zero()) break;
      if (prev && *prev > strength) break;  // acceptance: prev ≤ next strength
      walk.push_back(next);
      unprocessed[next] = 0;
      --remaining;
      prev = strength;
      cur = next;
    }

    if (walk.size() > 1) {
      Cascade cascade;
      cascade.steps.reserve(walk.size());
      for (std::size_t t = 0; t < walk.size(); ++t) {
        CascadeStep step;
        step.node = walk[t];
        if (t + 1 < walk.size()) step.chosen_next = walk[t + 1];
        step.time = t;
        cascade.steps.push_back(step);
      }
      result.cascades.push_back(std::move(cascade));
    } else {
      result.unassigned.push_back(start);
    }
  }
  std::sort(result.unassigned.begin(), result.unassigned.end());
  return result;
}

// Membership score of node p against a community (sorted node list, p not a
// member):
//
//   PM(p,c) = Σ_{q ∈ Γ(p) ∩ c}  [ Σ_{x ∈ Γ(q), x ≠ p} |Γ(p) ∩ Γ(x)| ]
//                                / ( |Γ(p)| · |Γ(q)| )
//
// Zero when p has no neighbor inside the community (including degree 0).
inline Ratio preferential_membership(const Graph& g, NodeId p,
                                     std::span<const NodeId> community) {
  Ratio score;
  auto np = g.neighbors(p);
  for (NodeId q : np) {
    if (!std::binary_search(community.begin(), community.end(), q)) continue;
    std::int64_t overlap = 0;
    for (NodeId x : g.neighbors(q)) {
      if (x == p) continue;
      overlap += detail::intersection_size(np, g.neighbors(x));
    }
    score = score + Ratio(overlap, static_cast<std::int64_t>(np.size() * g.neighbors(q).size()));
  }
  return score;
}

// Transitive closure of the share-a-node relation. Output sets are sorted,
// pairwise disjoint, ordered by smallest contained node; idempotent.
inline std::vector<std::vector<NodeId>> merge_overlapping(
    const std::vector<std::vector<NodeId>>& communities) {
  std::unordered_map<NodeId, NodeId> parent;
  auto find_root = [&](NodeId v) {
    NodeId root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) {
      NodeId next = parent[v];
      parent[v] = root;
      v = next;
    }
    return root;
  };
  for (const auto& members : communities) {
    for (NodeId v : members) parent.try_emplace(v, v);
    for (std::size_t i = 1; i < members.size(); ++i) {
      NodeId a = find_root(members[0]), b = find_root(members[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<NodeId, std::set<NodeId>> groups;
  for (const auto& members : communities)
    for (NodeId v : members) groups[find_root(v)].insert(v);
  std::vector<std::vector<NodeId>> merged;
  merged.reserve(groups.size());
  for (auto& [root, nodes] : groups) merged.emplace_back(nodes.begin(), nodes.end());
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return merged;
}

// Second phase: attach unassigned nodes to communities by membership score.
// Rounds are synchronous (all scores read the partition as it stood at round
// start); a node is eligible once some community contains one of its
// neighbors, and ties break to the smallest community index. Nodes that no
// round can reach become singleton communities.
inline Partition assign_unlabeled(const Graph& g, const Partition& p, const RunConfig& cfg) {
  std::vector<std::vector<NodeId>> comms = p.communities();
  std::vector<NodeId> unassigned = p.unassigned();
  std::vector<std::int64_t> assignment(g.node_count(), -1);
  for (std::size_t c = 0; c < comms.size(); ++c)
    for (NodeId v : comms[c]) assignment[v] = static_cast<std::int64_t>(c);

  std::size_t max_rounds = cfg.max_pm_rounds ? cfg.max_pm_rounds : g.node_count();
  for (std::size_t round = 0; round < max_rounds && !unassigned.empty(); ++round) {
    std::vector<std::pair<NodeId, std::size_t>> moves;
    for (NodeId u : unassigned) {
      std::set<std::size_t> adjacent_comms;
      for (NodeId q : g.neighbors(u))
        if (assignment[q] >= 0) adjacent_comms.insert(static_cast<std::size_t>(assignment[q]));
      if (adjacent_comms.empty()) continue;
      std::optional<std::size_t> best;
      Ratio best_score;
      for (std::size_t c : adjacent_comms) {  // ascending, so ties keep the smallest index
        Ratio score = preferential_membership(g, u, comms[c]);
        if (!best || score > best_score) {
          best = c;
          best_score = score;
        }
      }
      moves.emplace_back(u, *best);
    }
    if (moves.empty()) break;
    for (auto [u, c] : moves) {
      auto& members = comms[c];
      members.insert(std::upper_bound(members.begin(), members.end(), u), u);
      assignment[u] = static_cast<std::int64_t>(c);
    }
    std::erase_if(unassigned, [&](NodeId u) { return assignment[u] >= 0; });
  }

  for (NodeId u : unassigned) comms.push_back({u});
  return Partition::from_communities(g.node_count(), std::move(comms));
}

// Full pipeline: cascades become communities, overlaps merge, remaining nodes
// attach by membership score, and a final merge re-establishes the canonical
// order. The result is a disjoint cover of all nodes.
inline Partition run_dcc(const Graph& g, const RunConfig& cfg = {}) {
  NSCache cache;
  CascadeGenResult gen = generate_cascades(g, cfg, &cache);
  std::vector<std::vector<NodeId>> comms;
  comms.reserve(gen.cascades.size());
  for (const Cascade& c : gen.cascades) {
    auto members = c.nodes();
    std::sort(members.begin(), members.end());
    comms.push_back(std::move(members));
  }
  comms = merge_overlapping(comms);
  Partition labeled = Partition::from_communities(g.node_count(), std::move(comms), gen.unassigned);
  Partition assigned = assign_unlabeled(g, labeled, cfg);
  return Partition::from_communities(g.node_count(), merge_overlapping(assigned.communities()));
}

}  // namespace dcc
