#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcc/error.hpp"
#include "dcc/graph.hpp"
#include "dcc/partition.hpp"

namespace dcc {

namespace detail {

inline void require_cover(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count() || !p.fully_assigned())
    throw DomainError("partition does not cover the graph's node set");
}

// Internal degree endpoints (2x internal edges), cut degree, and total degree
// per community.
struct CommunityDegrees {
  std::int64_t internal2 = 0;
  std::int64_t cut = 0;
  std::int64_t total = 0;
};

inline std::vector<CommunityDegrees> community_degrees(const Graph& g, const Partition& p) {
  std::vector<CommunityDegrees> out(p.community_count());
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    for (NodeId v : p.community(c)) {
      for (NodeId u : g.neighbors(v)) {
        if (*p.community_of(u) == c) ++out[c].internal2;
        else ++out[c].cut;
      }
      out[c].total += static_cast<std::int64_t>(g.degree(v));
    }
  }
  return out;
}

}  // namespace detail

// Newman-Girvan modularity: Q = Σ_c ( e_c/m − (d_c/2m)² ).
inline double ngm(const Graph& g, const Partition& p) {
  detail::require_cover(g, p);
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0) throw UndefinedMetricError("modularity undefined for empty edge set");
  double q = 0.0;
  for (const auto& cd : detail::community_degrees(g, p)) {
    double frac = static_cast<double>(cd.internal2) / (2.0 * m);
    double expected = static_cast<double>(cd.total) / (2.0 * m);
    q += frac - expected * expected;
  }
  return q;
}

// Modularity density: D = Σ_c ( in_c − out_c ) / |c|, with in_c the internal
// degree sum and out_c the cut degree sum of community c.
inline double modularity_density(const Graph& g, const Partition& p) {
  detail::require_cover(g, p);
  double d = 0.0;
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    const auto& members = p.community(c);
    if (members.empty()) throw DomainError("empty community");
    std::int64_t in2 = 0, out = 0;
    for (NodeId v : members) {
      for (NodeId u : g.neighbors(v)) {
        if (*p.community_of(u) == c) ++in2;
        else ++out;
      }
    }
    d += static_cast<double>(in2 - out) / static_cast<double>(members.size());
  }
  return d;
}

// Z-modularity: modularity standardized by its null-model deviation,
//   Z = ( Σ_c e_c/m − Σ_c (d_c/2m)² ) / sqrt( D2 (1 − D2) ),  D2 = Σ_c (d_c/2m)².
// Undefined when the denominator degenerates (e.g. one community holding
// every edge endpoint).
inline double z_modularity(const Graph& g, const Partition& p) {
  detail::require_cover(g, p);
  if (g.edge_count() == 0) throw UndefinedMetricError("z-modularity undefined for empty edge set");
  const double m2 = 2.0 * static_cast<double>(g.edge_count());
  double internal_frac = 0.0, d2 = 0.0;
  for (const auto& cd : detail::community_degrees(g, p)) {
    internal_frac += static_cast<double>(cd.internal2) / m2;
    double share = static_cast<double>(cd.total) / m2;
    d2 += share * share;
  }
  double variance = d2 * (1.0 - d2);
  if (variance <= 0.0) throw UndefinedMetricError("z-modularity denominator is zero");
  return (internal_frac - d2) / std::sqrt(variance);
}

// Mean over communities of cut(c) / (|c| (n − |c|)). A community equal to the
// whole node set contributes 0.
inline double cut_ratio(const Graph& g, const Partition& p) {
  detail::require_cover(g, p);
  const std::size_t n = g.node_count();
  if (n < 2) throw UndefinedMetricError("cut ratio needs at least 2 nodes");
  double sum = 0.0;
  const auto degrees = detail::community_degrees(g, p);
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    std::size_t size = p.community(c).size();
    if (size == n) continue;  // denominator would vanish; counts as 0
    sum += static_cast<double>(degrees[c].cut) /
           (static_cast<double>(size) * static_cast<double>(n - size));
  }
  return sum / static_cast<double>(p.community_count());
}

namespace detail {

inline void require_same_node_set(const Partition& a, const Partition& b) {
  if (a.node_count() != b.node_count() || !a.fully_assigned() || !b.fully_assigned())
    throw DomainError("partitions do not cover the same node set");
}

inline std::map<std::pair<std::size_t, std::size_t>, std::int64_t> contingency(
    const Partition& a, const Partition& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> table;
  for (NodeId v = 0; v < a.node_count(); ++v) ++table[{*a.community_of(v), *b.community_of(v)}];
  return table;
}

}  // namespace detail

// Normalized mutual information with arithmetic-mean normalization:
// 2 I(X;Y) / (H(X) + H(Y)). Two identical single-cluster partitions score 1;
// if exactly one side has zero entropy the score is 0.
inline double nmi(const Partition& a, const Partition& b) {
  detail::require_same_node_set(a, b);
  const double n = static_cast<double>(a.node_count());
  if (a.node_count() == 0) throw UndefinedMetricError("nmi undefined for empty node set");

  auto entropy = [n](const Partition& p) {
    double h = 0.0;
    for (const auto& c : p.communities()) {
      double q = static_cast<double>(c.size()) / n;
      h -= q * std::log(q);
    }
    return h;
  };
  double ha = entropy(a), hb = entropy(b);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;

  double info = 0.0;
  for (const auto& [cell, count] : detail::contingency(a, b)) {
    double pij = static_cast<double>(count) / n;
    double pi = static_cast<double>(a.community(cell.first).size()) / n;
    double pj = static_cast<double>(b.community(cell.second).size()) / n;
    info += pij * std::log(pij / (pi * pj));
  }
  double value = 2.0 * info / (ha + hb);
  return std::clamp(value, 0.0, 1.0);
}

// Adjusted Rand index via the contingency table. 1 iff the partitions are
// identical up to label names; 0 expected under independence.
inline double ari(const Partition& a, const Partition& b) {
  detail::require_same_node_set(a, b);
  const std::size_t n = a.node_count();
  if (n < 2) throw UndefinedMetricError("ari needs at least 2 nodes");

  auto choose2 = [](std::int64_t k) { return k * (k - 1) / 2; };
  std::int64_t s = 0;
  for (const auto& [cell, count] : detail::contingency(a, b)) s += choose2(count);
  std::int64_t sum_a = 0, sum_b = 0;
  for (const auto& c : a.communities()) sum_a += choose2(static_cast<std::int64_t>(c.size()));
  for (const auto& c : b.communities()) sum_b += choose2(static_cast<std::int64_t>(c.size()));
  double total = static_cast<double>(choose2(static_cast<std::int64_t>(n)));
  double expected = static_cast<double>(sum_a) * static_cast<double>(sum_b) / total;
  double maximum = 0.5 * static_cast<double>(sum_a + sum_b);
  if (maximum == expected) return 1.0;  // both trivial, necessarily identical
  return (static_cast<double>(s) - expected) / (maximum - expected);
}

}  // namespace dcc
