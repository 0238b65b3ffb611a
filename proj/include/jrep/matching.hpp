#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace jrep {

/// Bipartite graph with a capacity on every node. Nodes are 1-based on each
/// side; caps are indexed by node - 1.
struct BipartiteCapGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> left_caps;
  std::vector<std::int64_t> right_caps;
};

/// Throws InvalidArgument on out-of-range endpoints, duplicate edges,
/// non-positive capacities or size mismatches.
void validate(const BipartiteCapGraph& graph);

struct MatchedEdge {
  int left;
  int right;
  std::int64_t count;

  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

/// A b-matching as a multiset of edges: each edge may be used several times,
/// bounded only by the two endpoint capacities.
struct BMatching {
  std::int64_t size = 0;
  std::vector<MatchedEdge> edges;  // ascending (left, right), count > 0
};

/// Maximum-cardinality b-matching via max flow
/// source -> left (left cap) -> right (unbounded) -> sink (right cap).
/// Edges are added in ascending (left, right) order for reproducible output.
BMatching max_bmatching(const BipartiteCapGraph& graph);

}  // namespace jrep
