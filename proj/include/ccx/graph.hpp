#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ccx {

using NodeId = std::uint32_t;

// Undirected simple graph. Edges are stored as (u, v) with u < v, sorted and unique.
class SimpleGraph {
 public:
  using Edge = std::pair<NodeId, NodeId>;

  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t num_nodes) : num_nodes_(num_nodes) {}
  // Throws BadParams on self-loops or out-of-range endpoints; duplicates are merged.
  SimpleGraph(std::size_t num_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;

  // Sorted neighbor lists.
  std::vector<std::vector<NodeId>> adjacency() const;

  // Subgraph induced by `nodes` (kept in the given order, relabeled 0..k-1).
  SimpleGraph induced(const std::vector<NodeId>& nodes) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
};

SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);

// Node (u1, u2) is numbered u1 * |V2| + u2.
SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Connected component label per node; labels are 0..k-1 in order of first appearance.
std::vector<std::size_t> component_labels(const SimpleGraph& g);

// Hop distances from `source`; unreachable nodes get kUnreachable.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;
std::vector<std::uint32_t> bfs_distances(const std::vector<std::vector<NodeId>>& adjacency,
                                         NodeId source);

}  // namespace ccx
