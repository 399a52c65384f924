#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/rational.hpp"

namespace dcc {

namespace detail {

// |a ∩ b| for sorted ranges.
inline std::int64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

inline std::vector<NodeId> intersection(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::vector<NodeId> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { out.push_back(a[i]); ++i; ++j; }
  }
  return out;
}

inline void require_edge(const Graph& g, NodeId p, NodeId q) {
  if (!g.has_edge(p, q))
    throw DomainError("(" + std::to_string(p) + "," + std::to_string(q) + ") is not an edge");
}

}  // namespace detail

// Common-neighborhood mass of an edge (p,q). With Z = Γ(p) ∩ Γ(q):
//
//   rho = |Z|
//       + Σ_{z ∈ Z} ( |Γ(p) ∩ Γ(z)| + |Γ(q) ∩ Γ(z)| )
//       + #{edges inside Z}
//       + Σ_{ {w,z} ⊆ Z, w≠z, (w,z) ∈ E } |Γ(w) ∩ Γ(z)|
//
// Grows with how densely the shared neighborhood is wired together.
inline std::int64_t common_neighborhood(const Graph& g, NodeId p, NodeId q) {
  detail::require_edge(g, p, q);
  auto np = g.neighbors(p);
  auto nq = g.neighbors(q);
  std::vector<NodeId> common = detail::intersection(np, nq);

  std::int64_t rho = static_cast<std::int64_t>(common.size());
  for (NodeId z : common) {
    auto nz = g.neighbors(z);
    rho += detail::intersection_size(np, nz);
    rho += detail::intersection_size(nq, nz);
  }
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (!g.has_edge(common[i], common[j])) continue;
      rho += 1;  // sigma: one edge inside the common neighborhood
      rho += detail::intersection_size(g.neighbors(common[i]), g.neighbors(common[j]));
    }
  }
  return rho;
}

// Size of the joint neighborhood |(Γ(p) ∪ Γ(q)) \ {p,q}|.
inline std::int64_t chi(const Graph& g, NodeId p, NodeId q) {
  detail::require_edge(g, p, q);
  auto np = g.neighbors(p);
  auto nq = g.neighbors(q);
  std::int64_t union_size = static_cast<std::int64_t>(np.size() + nq.size()) -
                            detail::intersection_size(np, nq);
  // p ∈ Γ(q) and q ∈ Γ(p) always hold for an edge, so both get excluded.
  return union_size - 2;
}

// Memo for tie-strength lookups, symmetric in the node pair. Confine one
// cache to one run; concurrent runs take separate caches.
class NSCache {
public:
  const TieStrength* find(NodeId p, NodeId q) const {
    auto it = memo_.find(key(p, q));
    return it == memo_.end() ? nullptr : &it->second;
  }

  void insert(NodeId p, NodeId q, TieStrength value) { memo_.emplace(key(p, q), value); }

  std::size_t size() const { return memo_.size(); }

private:
  static std::uint64_t key(NodeId p, NodeId q) {
    auto lo = std::min(p, q), hi = std::max(p, q);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  std::unordered_map<std::uint64_t, TieStrength> memo_;
};

// Neighborhood-similarity tie strength of an edge: rho/chi, forced to zero
// when either endpoint is a leaf or the joint neighborhood is empty.
inline TieStrength ns(const Graph& g, NodeId p, NodeId q, NSCache* cache = nullptr) {
  if (cache) {
    if (const TieStrength* hit = cache->find(p, q)) {
      detail::require_edge(g, p, q);
      return *hit;
    }
  }
  detail::require_edge(g, p, q);
  TieStrength result;
  if (g.degree(p) != 1 && g.degree(q) != 1) {
    std::int64_t denom = chi(g, p, q);
    if (denom != 0) result = TieStrength(common_neighborhood(g, p, q), denom);
  }
  if (cache) cache->insert(p, q, result);
  return result;
}

// Candidate neighbor of p with the greatest tie strength; ties break to the
// smallest node id. Candidates must be neighbors of p (callers typically pass
// the unprocessed ones). Empty candidate set means no neighbor.
inline std::optional<std::pair<NodeId, TieStrength>> find_maxts(
    const Graph& g, NodeId p, std::span<const NodeId> candidates, NSCache* cache = nullptr) {
  std::optional<std::pair<NodeId, TieStrength>> best;
  for (NodeId q : candidates) {
    TieStrength s = ns(g, p, q, cache);
    if (!best || s > best->second || (s == best->second && q < best->first)) {
      best = {q, s};
    }
  }
  return best;
}

}  // namespace dcc
