#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccx/error.hpp"
#include "ccx/graph.hpp"

namespace ccx {

using Rank = int;
using CellIndex = std::uint32_t;

// A cell in canonical form: strictly increasing, non-empty vertex list plus its rank.
struct Cell {
  std::vector<NodeId> vertices;
  Rank rank = 0;

  auto operator<=>(const Cell&) const = default;
};

// Position of a cell: its rank and its index inside that rank's skeleton.
struct CellRef {
  Rank rank = 0;
  CellIndex index = 0;

  auto operator<=>(const CellRef&) const = default;
};

// Input cell for build(); vertices may be unsorted.
struct RawCell {
  std::vector<NodeId> vertices;
  Rank rank = 0;
};

// Immutable ranked cell set over nodes 0..n0-1.
//
// Cells are keyed by (vertex set, rank); two cells may share a vertex set when their
// ranks differ. Within a skeleton cells are ordered lexicographically by vertex list,
// and every index into a skeleton derives from that order.
//
// Cells also have a global id: the concatenation of all skeletons in rank order.
// Containment between cells (vertex-set inclusion, any ranks) is precomputed.
class CombinatorialComplex {
 public:
  // Validating constructor. Inserts missing rank-0 singletons.
  // Throws RankViolation, DuplicateCell, EmptyCell, OutOfRangeNode.
  static CombinatorialComplex build(const std::vector<RawCell>& cells, std::size_t num_nodes);

  CombinatorialComplex();

  int dimension() const { return static_cast<int>(skeletons_.size()) - 1; }
  std::size_t num_nodes() const { return skeletons_.empty() ? 0 : skeletons_[0].size(); }

  // 0 for ranks outside 0..dimension().
  std::size_t skeleton_size(Rank r) const;
  std::vector<std::size_t> skeleton_sizes() const;
  const std::vector<std::vector<NodeId>>& skeleton(Rank r) const;

  const std::vector<NodeId>& vertices(CellRef c) const { return skeletons_[c.rank][c.index]; }
  Cell cell(CellRef c) const { return Cell{vertices(c), c.rank}; }

  bool contains(CellRef c) const;
  std::optional<CellIndex> find(std::span<const NodeId> vertices, Rank r) const;
  std::optional<CellRef> find(const Cell& c) const;

  std::size_t num_cells() const { return refs_.size(); }
  std::uint32_t global_id(CellRef c) const { return offsets_[c.rank] + c.index; }
  CellRef ref(std::uint32_t global) const { return refs_[global]; }

  // Global ids of cells y != x with vertices(y) ⊆ vertices(x), sorted.
  const std::vector<std::uint32_t>& subcells(std::uint32_t global) const { return sub_[global]; }
  // Global ids of cells y != x with vertices(x) ⊆ vertices(y), sorted.
  const std::vector<std::uint32_t>& supercells(std::uint32_t global) const {
    return super_[global];
  }

  bool operator==(const CombinatorialComplex& other) const {
    return skeletons_ == other.skeletons_;
  }

 private:
  void index_cells();

  std::vector<std::vector<std::vector<NodeId>>> skeletons_;
  std::vector<std::map<std::vector<NodeId>, CellIndex>> lookup_;
  std::vector<std::uint32_t> offsets_;
  std::vector<CellRef> refs_;
  std::vector<std::vector<std::uint32_t>> sub_;
  std::vector<std::vector<std::uint32_t>> super_;
};

// The 1-dimensional complex of a graph (dimension 0 when the graph has no edges).
CombinatorialComplex graph_complex(const SimpleGraph& g);

// Node ids of b are shifted by a.num_nodes().
CombinatorialComplex disjoint_union(const CombinatorialComplex& a, const CombinatorialComplex& b);

// The graph formed by the rank-0 and rank-1 cells whose vertex set has size 2.
SimpleGraph one_skeleton(const CombinatorialComplex& cc);

// Copy of `cc` keeping only ranks <= max_rank.
CombinatorialComplex truncate(const CombinatorialComplex& cc, Rank max_rank);

}  // namespace ccx
