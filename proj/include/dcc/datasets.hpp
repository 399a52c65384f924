#pragma once

#include <string_view>

#include "dcc/graph.hpp"

namespace dcc {

// Zachary's karate club: 34 nodes, 78 edges, 1-based ids.
inline constexpr std::string_view kKarateEdgeList =
    "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n1 18\n1 20\n1 22\n1 32\n"
    "2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n"
    "3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33\n"
    "4 8\n4 13\n4 14\n"
    "5 7\n5 11\n"
    "6 7\n6 11\n6 17\n"
    "7 17\n"
    "9 31\n9 33\n9 34\n"
    "10 34\n"
    "14 34\n"
    "15 33\n15 34\n"
    "16 33\n16 34\n"
    "19 33\n19 34\n"
    "20 34\n"
    "21 33\n21 34\n"
    "23 33\n23 34\n"
    "24 26\n24 28\n24 30\n24 33\n24 34\n"
    "25 26\n25 28\n25 32\n"
    "26 32\n"
    "27 30\n27 34\n"
    "28 34\n"
    "29 32\n29 34\n"
    "30 33\n30 34\n"
    "31 33\n31 34\n"
    "32 33\n32 34\n"
    "33 34\n";

// The standard two-faction split of the club.
inline constexpr std::string_view kKarateLabels =
    "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n7 1\n8 1\n9 1\n10 2\n"
    "11 1\n12 1\n13 1\n14 1\n15 2\n16 2\n17 1\n18 1\n19 2\n20 1\n"
    "21 2\n22 1\n23 2\n24 2\n25 2\n26 2\n27 2\n28 2\n29 2\n30 2\n"
    "31 2\n32 2\n33 2\n34 2\n";

struct Dataset {
  Graph graph;
  GroundTruth truth;
};

inline Dataset builtin_karate() {
  Dataset ds;
  ds.graph = load_edge_list(kKarateEdgeList).graph;
  ds.truth = load_labels(kKarateLabels);
  return ds;
}

}  // namespace dcc
