#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dcc/error.hpp"
#include "dcc/graph.hpp"
#include "dcc/partition.hpp"

namespace dcc {

// One "node<TAB>community_index" line per node, in interning order. Requires
// a full cover; community indices follow the partition's own order.
inline void write_partition_tsv(std::ostream& out, const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count() || !p.fully_assigned())
    throw DomainError("partition does not cover the graph's node set");
  for (NodeId v = 0; v < g.node_count(); ++v)
    out << g.label(v) << '\t' << *p.community_of(v) << '\n';
}

// Inverse of write_partition_tsv, tolerant of arbitrary non-negative index
// values. Every graph node must appear exactly once. The result is
// renumbered into canonical order (ascending smallest member).
inline Partition read_partition_tsv(std::istream& in, const Graph& g) {
  std::map<long long, std::vector<NodeId>> groups;
  std::vector<char> seen(g.node_count(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("expected 2 tokens, got " + std::to_string(tokens.size()), line_no);
    auto id = g.find(tokens[0]);
    if (!id) throw DomainError("partition node '" + std::string(tokens[0]) + "' not in graph");
    long long index = 0;
    auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), index);
    if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || index < 0)
      throw ParseError("malformed community index '" + std::string(tokens[1]) + "'", line_no);
    if (seen[*id]) throw DomainError("node '" + std::string(tokens[0]) + "' assigned twice");
    seen[*id] = 1;
    groups[index].push_back(*id);
  }
  std::vector<std::vector<NodeId>> comms;
  comms.reserve(groups.size());
  for (auto& [index, members] : groups) comms.push_back(std::move(members));
  return Partition::from_communities(g.node_count(), std::move(comms)).canonical();
}

// {"communities": [[node,...],...], "seed": n, "algorithm": "..."} with node
// tokens as strings, communities in partition order, members ascending.
inline void write_partition_json(std::ostream& out, const Graph& g, const Partition& p,
                                 std::uint64_t seed, std::string_view algorithm) {
  if (p.node_count() != g.node_count() || !p.fully_assigned())
    throw DomainError("partition does not cover the graph's node set");
  nlohmann::ordered_json doc;
  auto& comms = doc["communities"] = nlohmann::ordered_json::array();
  for (const auto& members : p.communities()) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (NodeId v : members) one.push_back(g.label(v));
    comms.push_back(std::move(one));
  }
  doc["seed"] = seed;
  doc["algorithm"] = std::string(algorithm);
  out << doc.dump(2) << '\n';
}

inline Partition read_partition_json(std::istream& in, const Graph& g) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("communities") || !doc["communities"].is_array())
    throw ParseError("expected an object with a \"communities\" array");
  std::vector<std::vector<NodeId>> comms;
  for (const auto& members : doc["communities"]) {
    if (!members.is_array()) throw ParseError("each community must be an array of node tokens");
    std::vector<NodeId> one;
    for (const auto& token : members) {
      std::string text = token.is_string() ? token.get<std::string>() : token.dump();
      auto id = g.find(text);
      if (!id) throw DomainError("partition node '" + text + "' not in graph");
      one.push_back(*id);
    }
    comms.push_back(std::move(one));
  }
  return Partition::from_communities(g.node_count(), std::move(comms)).canonical();
}

}  // namespace dcc
