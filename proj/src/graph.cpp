#include "ccx/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ccx/error.hpp"

namespace ccx {

SimpleGraph::SimpleGraph(std::size_t num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::BadParams, "self-loop at node " + std::to_string(u));
    if (u >= num_nodes || v >= num_nodes) {
      throw Error(ErrorCode::OutOfRangeNode,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

void SimpleGraph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorCode::BadParams, "self-loop at node " + std::to_string(u));
  if (u >= num_nodes_ || v >= num_nodes_) {
    throw Error(ErrorCode::OutOfRangeNode,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool SimpleGraph::has_edge(NodeId u, NodeId v) const {
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<NodeId>> SimpleGraph::adjacency() const {
  std::vector<std::vector<NodeId>> adj(num_nodes_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

SimpleGraph SimpleGraph::induced(const std::vector<NodeId>& nodes) const {
  std::vector<std::int64_t> position(num_nodes_, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) position[nodes[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0) {
      kept.emplace_back(static_cast<NodeId>(position[u]), static_cast<NodeId>(position[v]));
    }
  }
  return SimpleGraph(nodes.size(), std::move(kept));
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::BadParams, "cycle needs at least 3 nodes");
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(std::size_t n) {
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2) {
  const std::size_t n2 = g2.num_nodes();
  auto id = [n2](std::size_t a, std::size_t b) { return static_cast<NodeId>(a * n2 + b); };
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t a = 0; a < g1.num_nodes(); ++a) {
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(id(a, u), id(a, v));
  }
  for (const auto& [u, v] : g1.edges()) {
    for (std::size_t b = 0; b < n2; ++b) edges.emplace_back(id(u, b), id(v, b));
  }
  return SimpleGraph(g1.num_nodes() * n2, std::move(edges));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  auto shift = static_cast<NodeId>(a.num_nodes());
  std::vector<SimpleGraph::Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return SimpleGraph(a.num_nodes() + b.num_nodes(), std::move(edges));
}

std::vector<std::size_t> component_labels(const SimpleGraph& g) {
  const auto adj = g.adjacency();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.num_nodes(), kNone);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.num_nodes(); ++s) {
    if (label[s] != kNone) continue;
    std::deque<NodeId> queue{static_cast<NodeId>(s)};
    label[s] = next;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        if (label[v] == kNone) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::uint32_t> bfs_distances(const std::vector<std::vector<NodeId>>& adjacency,
                                         NodeId source) {
  std::vector<std::uint32_t> dist(adjacency.size(), kUnreachable);
  std::vector<NodeId> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    NodeId u = frontier[head];
    for (NodeId v : adjacency[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace ccx
