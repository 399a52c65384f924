#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcc/error.hpp"

namespace dcc {

// Node handle. Tokens from input files are interned to dense ids in
// first-appearance order; all tie-breaks in the toolkit use this order.
using NodeId = std::uint32_t;

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Splits a line into whitespace-separated tokens; '#' starts a comment.
inline std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Undirected simple graph with sorted adjacency lists. Immutable after
// construction; concurrent reads are safe.
class Graph {
public:
  Graph() = default;

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return adj_[v];
  }

  std::size_t degree(NodeId v) const {
    check_node(v);
    return adj_[v].size();
  }

  bool has_edge(NodeId u, NodeId v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    NodeId needle = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(smaller.begin(), smaller.end(), needle);
  }

  const std::string& label(NodeId v) const {
    check_node(v);
    return labels_[v];
  }

  std::optional<NodeId> find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

private:
  friend class GraphBuilder;

  void check_node(NodeId v) const {
    if (v >= adj_.size())
      throw std::out_of_range("unknown node id " + std::to_string(v));
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId, detail::StringHash, std::equal_to<>> index_;
  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

// Accumulates edges, collapsing duplicates and dropping self-loops.
class GraphBuilder {
public:
  NodeId intern(std::string_view token) {
    auto it = g_.index_.find(token);
    if (it != g_.index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(g_.labels_.size());
    g_.labels_.emplace_back(token);
    g_.index_.emplace(g_.labels_.back(), id);
    g_.adj_.emplace_back();
    return id;
  }

  void add_edge(std::string_view a, std::string_view b) {
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) {
      ++self_loops_dropped_;
      return;
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::size_t self_loops_dropped() const { return self_loops_dropped_; }
  std::size_t duplicates_collapsed() const { return duplicates_collapsed_; }

  Graph build() {
    std::sort(edges_.begin(), edges_.end());
    std::size_t unique_count = 0;
    std::pair<NodeId, NodeId> prev{0, 0};
    bool first = true;
    for (const auto& e : edges_) {
      if (!first && e == prev) {
        ++duplicates_collapsed_;
        continue;
      }
      first = false;
      prev = e;
      ++unique_count;
      g_.adj_[e.first].push_back(e.second);
      g_.adj_[e.second].push_back(e.first);
    }
    for (auto& nbrs : g_.adj_) std::sort(nbrs.begin(), nbrs.end());
    g_.edge_count_ = unique_count;
    return std::move(g_);
  }

private:
  Graph g_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::size_t self_loops_dropped_ = 0;
  std::size_t duplicates_collapsed_ = 0;
};

struct EdgeListResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

// One edge per line, two whitespace-separated tokens, '#' comments.
inline EdgeListResult load_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("expected 2 tokens, got " + std::to_string(tokens.size()), line_no);
    builder.add_edge(tokens[0], tokens[1]);
  }
  EdgeListResult result;
  result.graph = builder.build();
  result.self_loops_dropped = builder.self_loops_dropped();
  result.duplicates_collapsed = builder.duplicates_collapsed();
  return result;
}

inline EdgeListResult load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

// Canonical form: one edge per line, endpoints in id order, edges sorted.
// Reloading the output reproduces the same labeled graph.
// Canonical form: each edge as "smaller-label larger-label", lines sorted.
// The bytes depend only on the labeled graph, never on interning order, so
// serializing a reloaded file reproduces it exactly.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<std::pair<std::string_view, std::string_view>> lines;
  lines.reserve(g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u >= v) continue;
      std::string_view a = g.label(u), b = g.label(v);
      if (b < a) std::swap(a, b);
      lines.push_back({a, b});
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

// Reference community labels, keyed by node token. Bound to a concrete graph
// via to_partition (declared in partition.hpp helpers).
struct GroundTruth {
  std::unordered_map<std::string, std::string, detail::StringHash, std::equal_to<>> labels;
  std::size_t override_count = 0;
};

// "node label" per line, same comment rules as edge lists. Later duplicates
// override earlier ones.
inline GroundTruth load_labels(std::istream& in) {
  GroundTruth gt;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("expected 2 tokens, got " + std::to_string(tokens.size()), line_no);
    auto [it, inserted] = gt.labels.insert_or_assign(std::string(tokens[0]), std::string(tokens[1]));
    if (!inserted) ++gt.override_count;
  }
  return gt;
}

inline GroundTruth load_labels(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_labels(in);
}

}  // namespace dcc
