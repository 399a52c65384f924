#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcc/error.hpp"
#include "dcc/graph.hpp"

namespace dcc {

// A disjoint assignment of nodes to communities, plus an explicit set of
// nodes not (yet) assigned. Community members and the unassigned set are kept
// sorted; validation happens at construction, after which the value is
// immutable.
class Partition {
public:
  Partition() = default;

  static Partition from_communities(std::size_t node_count,
                                    std::vector<std::vector<NodeId>> communities,
                                    std::vector<NodeId> unassigned = {}) {
    Partition p;
    p.node_count_ = node_count;
    p.communities_ = std::move(communities);
    p.unassigned_ = std::move(unassigned);
    p.assignment_.assign(node_count, kNone);
    for (std::size_t c = 0; c < p.communities_.size(); ++c) {
      auto& members = p.communities_[c];
      if (members.empty()) throw DomainError("empty community");
      std::sort(members.begin(), members.end());
      for (NodeId v : members) {
        if (v >= node_count) throw DomainError("community member out of range");
        if (p.assignment_[v] != kNone) throw DomainError("node " + std::to_string(v) + " assigned twice");
        p.assignment_[v] = static_cast<std::int64_t>(c);
      }
    }
    std::sort(p.unassigned_.begin(), p.unassigned_.end());
    std::size_t covered = 0;
    for (NodeId v : p.unassigned_) {
      if (v >= node_count) throw DomainError("unassigned node out of range");
      if (p.assignment_[v] != kNone) throw DomainError("node both assigned and unassigned");
    }
    for (std::size_t v = 0; v < node_count; ++v)
      if (p.assignment_[v] != kNone) ++covered;
    if (covered + p.unassigned_.size() != node_count)
      throw DomainError("communities plus unassigned set do not cover the node set");
    return p;
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t community_count() const { return communities_.size(); }
  const std::vector<std::vector<NodeId>>& communities() const { return communities_; }
  const std::vector<NodeId>& community(std::size_t idx) const { return communities_.at(idx); }
  const std::vector<NodeId>& unassigned() const { return unassigned_; }
  bool fully_assigned() const { return unassigned_.empty(); }

  std::optional<std::size_t> community_of(NodeId v) const {
    if (v >= node_count_ || assignment_[v] == kNone) return std::nullopt;
    return static_cast<std::size_t>(assignment_[v]);
  }

  // Canonical community order: ascending smallest member.
  Partition canonical() const {
    std::vector<std::vector<NodeId>> comms = communities_;
    std::sort(comms.begin(), comms.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return from_communities(node_count_, std::move(comms), unassigned_);
  }

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  static constexpr std::int64_t kNone = -1;

  std::size_t node_count_ = 0;
  std::vector<std::vector<NodeId>> communities_;
  std::vector<NodeId> unassigned_;
  std::vector<std::int64_t> assignment_;
};

// Binds reference labels to a graph. Every graph node must be labeled and
// every labeled node must exist, otherwise the node sets mismatch.
inline Partition ground_truth_partition(const Graph& g, const GroundTruth& gt) {
  for (const auto& [token, label] : gt.labels) {
    if (!g.find(token)) throw DomainError("ground-truth node '" + token + "' not in graph");
  }
  std::vector<std::vector<NodeId>> comms;
  std::unordered_map<std::string, std::size_t, detail::StringHash, std::equal_to<>> index_of;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto it = gt.labels.find(g.label(v));
    if (it == gt.labels.end())
      throw DomainError("node '" + g.label(v) + "' has no ground-truth label");
    auto [slot, inserted] = index_of.try_emplace(it->second, comms.size());
    if (inserted) comms.emplace_back();
    comms[slot->second].push_back(v);
  }
  return Partition::from_communities(g.node_count(), std::move(comms));
}

}  // namespace dcc
