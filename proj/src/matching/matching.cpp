#include "jrep/matching.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jrep/error.hpp"
#include "jrep/flow.hpp"

namespace jrep {

void validate(const BipartiteCapGraph& graph) {
  if (graph.left_count < 1 || graph.right_count < 1) {
    throw InvalidArgument("bipartite graph sides must be non-empty");
  }
  if (graph.left_caps.size() != static_cast<std::size_t>(graph.left_count) ||
      graph.right_caps.size() != static_cast<std::size_t>(graph.right_count)) {
    throw InvalidArgument("capacity vector size does not match node count");
  }
  for (auto cap : graph.left_caps) {
    if (cap < 1) throw InvalidArgument("node capacities must be at least 1");
  }
  for (auto cap : graph.right_caps) {
    if (cap < 1) throw InvalidArgument("node capacities must be at least 1");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [left, right] : graph.edges) {
    if (left < 1 || left > graph.left_count || right < 1 || right > graph.right_count) {
      throw InvalidArgument("edge (" + std::to_string(left) + ", " + std::to_string(right) +
                            ") out of range");
    }
    if (!seen.emplace(left, right).second) throw InvalidArgument("duplicate edge");
  }
}

BMatching max_bmatching(const BipartiteCapGraph& graph) {
  validate(graph);
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());

  // Node layout: 0 source, 1 sink, then left nodes, then right nodes.
  FlowNetwork network(2 + graph.left_count + graph.right_count);
  const auto left_node = [](int left) { return 1 + left; };
  const auto right_node = [&](int right) { return 1 + graph.left_count + right; };
  for (int l = 1; l <= graph.left_count; ++l) {
    network.add_edge(0, left_node(l), graph.left_caps[static_cast<std::size_t>(l - 1)]);
  }
  std::vector<int> arc_of_edge;
  arc_of_edge.reserve(edges.size());
  for (const auto& [left, right] : edges) {
    const auto cap = std::min(graph.left_caps[static_cast<std::size_t>(left - 1)],
                              graph.right_caps[static_cast<std::size_t>(right - 1)]);
    arc_of_edge.push_back(network.add_edge(left_node(left), right_node(right), cap));
  }
  for (int r = 1; r <= graph.right_count; ++r) {
    network.add_edge(right_node(r), 1, graph.right_caps[static_cast<std::size_t>(r - 1)]);
  }

  BMatching result;
  result.size = network.max_flow(0, 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto units = network.flow(arc_of_edge[i]);
    if (units > 0) result.edges.push_back({edges[i].first, edges[i].second, units});
  }
  return result;
}

}  // namespace jrep
