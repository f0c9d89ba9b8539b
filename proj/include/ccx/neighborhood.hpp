#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

enum class NeighborhoodKind { Adjacency, CoAdjacency, IncidenceUp, IncidenceDown };

// One of A, coA, B, Bᵀ with its rank pair. Applied to a cell x of rank r1:
//   A_{r1,r2}(x)   = {y in X_r1, y != x : x, y ⊆ z for some z in X_r2}
//   coA_{r1,r2}(x) = {y in X_r1, y != x : z ⊆ x, y for some z in X_r2}
//   B_{r1,r2}(x)   = {y in X_r2 : x ⊆ y}
//   Bᵀ_{r1,r2}(x)  = {y in X_r2 : y ⊆ x}
// and to the empty set for cells of any other rank.
struct NeighborhoodSpec {
  NeighborhoodKind kind = NeighborhoodKind::Adjacency;
  Rank r1 = 0;
  Rank r2 = 0;

  bool is_adjacency_like() const {
    return kind == NeighborhoodKind::Adjacency || kind == NeighborhoodKind::CoAdjacency;
  }
  // Rank of the cells a neighborhood consists of.
  Rank target_rank() const { return is_adjacency_like() ? r1 : r2; }

  auto operator<=>(const NeighborhoodSpec&) const = default;
};

std::string to_string(const NeighborhoodSpec& spec);
// Parses "A:0,1", "coA:2,1", "B:0,2", "BT:1,0".
NeighborhoodSpec parse_spec(const std::string& text);

// All four kinds over every rank pair in 0..dimension.
std::vector<NeighborhoodSpec> natural_specs(int dimension);

// Indices into skeleton spec.target_rank(), sorted. Throws UnknownCell if x is not a cell.
std::vector<CellIndex> neighborhood(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                                    CellRef x);
std::vector<Cell> neighborhood(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                               const Cell& x);

// Neighborhood of every cell of rank spec.r1 (empty rows when r1 is out of range).
using NeighborLists = std::vector<std::vector<CellIndex>>;
NeighborLists neighborhood_lists(const CombinatorialComplex& cc, const NeighborhoodSpec& spec);

// 0/1 matrix with sorted, unique (row, col) entries.
class SparseBinaryMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  SparseBinaryMatrix() = default;
  SparseBinaryMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool at(std::uint32_t r, std::uint32_t c) const;
  std::size_t nnz() const { return entries_.size(); }

  SparseBinaryMatrix transpose() const;
  // Product over GF(2).
  SparseBinaryMatrix multiply_gf2(const SparseBinaryMatrix& rhs) const;
  std::vector<std::vector<std::uint8_t>> dense() const;

  bool operator==(const SparseBinaryMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

// Rows: X_r1. Columns: X_r1 for (co)adjacency, X_r2 for incidence.
// Throws RankOutOfRange for negative ranks; ranks above the dimension give empty axes.
SparseBinaryMatrix neighborhood_matrix(const CombinatorialComplex& cc,
                                       const NeighborhoodSpec& spec);

// Graph on X_r1 with the (co)adjacency relation as edges. Throws WrongKind for incidence.
SimpleGraph augmented_hasse_graph(const CombinatorialComplex& cc, const NeighborhoodSpec& spec);

// Graph on all cells (global ids) with edges for inclusions between consecutive ranks.
struct HasseGraph {
  SimpleGraph graph;
  std::vector<Rank> ranks;
};
HasseGraph hasse_graph(const CombinatorialComplex& cc);

}  // namespace ccx
