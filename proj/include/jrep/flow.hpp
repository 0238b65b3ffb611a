#pragma once

#include <cstdint>
#include <vector>

namespace jrep {

/// Directed network with integer capacities, solved by shortest augmenting
/// paths (Edmonds-Karp). Arcs are scanned in insertion order, so the flow
/// found for a given construction sequence is always the same.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes = 0);

  int add_node();
  /// Returns an arc id usable with flow().
  int add_edge(int from, int to, std::int64_t capacity);

  /// Augments from the current flow until no augmenting path remains and
  /// returns the total flow out of `source`.
  std::int64_t max_flow(int source, int sink);

  std::int64_t flow(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }
  std::int64_t capacity(int arc) const { return arcs_[static_cast<std::size_t>(arc)].capacity; }
  int num_nodes() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
    std::int64_t flow;
  };

  std::vector<Arc> arcs_;  // arc i and i ^ 1 are a forward/residual pair
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace jrep
