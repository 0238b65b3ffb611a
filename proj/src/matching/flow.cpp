#include "jrep/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "jrep/error.hpp"

namespace jrep {

FlowNetwork::FlowNetwork(int num_nodes) : adjacency_(static_cast<std::size_t>(num_nodes)) {}

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return num_nodes() - 1;
}

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= num_nodes() || to >= num_nodes()) {
    throw InvalidArgument("flow arc endpoint out of range");
  }
  if (capacity < 0) throw InvalidArgument("negative arc capacity");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  adjacency_[static_cast<std::size_t>(from)].push_back(id);
  adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  for (int arc : adjacency_[static_cast<std::size_t>(source)]) total += arcs_[static_cast<std::size_t>(arc)].flow;
  if (source == sink) return total;

  std::vector<int> parent_arc(adjacency_.size());
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::deque<int> queue{source};
    parent_arc[static_cast<std::size_t>(source)] = -2;
    while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
      const int node = queue.front();
      queue.pop_front();
      for (int arc : adjacency_[static_cast<std::size_t>(node)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(arc)];
        if (a.capacity - a.flow > 0 && parent_arc[static_cast<std::size_t>(a.to)] == -1) {
          parent_arc[static_cast<std::size_t>(a.to)] = arc;
          queue.push_back(a.to);
        }
      }
    }
    if (parent_arc[static_cast<std::size_t>(sink)] == -1) return total;

    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (int node = sink; node != source;) {
      const Arc& a = arcs_[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(node)])];
      bottleneck = std::min(bottleneck, a.capacity - a.flow);
      node = arcs_[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(node)] ^ 1)].to;
    }
    for (int node = sink; node != source;) {
      const int arc = parent_arc[static_cast<std::size_t>(node)];
      arcs_[static_cast<std::size_t>(arc)].flow += bottleneck;
      arcs_[static_cast<std::size_t>(arc ^ 1)].flow -= bottleneck;
      node = arcs_[static_cast<std::size_t>(arc ^ 1)].to;
    }
    total += bottleneck;
  }
}

}  // namespace jrep
