#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"
#include "ccx/neighborhood.hpp"

namespace ccx {

// A non-negative distance or infinity (no path).
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() = default;
  constexpr explicit ExtendedDistance(std::uint64_t value) : value_(value), finite_(true) {}
  static constexpr ExtendedDistance infinite() { return ExtendedDistance(); }

  bool is_finite() const { return finite_; }
  // Only meaningful when finite.
  std::uint64_t value() const { return value_; }
  std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

  bool operator==(const ExtendedDistance&) const = default;
  std::strong_ordering operator<=>(const ExtendedDistance& other) const {
    if (finite_ != other.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return value_ <=> other.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool finite_ = false;
};

// All-pairs hop distances over X_r1 in the augmented Hasse graph of a (co)adjacency spec.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, std::vector<std::uint32_t> hops) : n_(n), hops_(std::move(hops)) {}

  std::size_t size() const { return n_; }
  ExtendedDistance at(std::size_t i, std::size_t j) const {
    const auto h = hops_[i * n_ + j];
    return h == kUnreachable ? ExtendedDistance::infinite() : ExtendedDistance(h);
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> hops_;
};

// Throws WrongKind for incidence specs.
DistanceTable shortest_paths(const CombinatorialComplex& cc, const NeighborhoodSpec& spec);

// Largest distance between two rank-r1 cells. Throws WrongKind, EmptySkeleton.
ExtendedDistance diameter(const CombinatorialComplex& cc, const NeighborhoodSpec& spec);

// max over x in X_r1 and y in X_k of min over rank-r1 cells x' inside y of d(x, x').
// Throws WrongKind, EmptySkeleton, CellWithoutFaces.
ExtendedDistance cross_diameter(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                                Rank k);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;  // per global cell id
};
// Two cells are connected when they share a node.
Components connected_components(const CombinatorialComplex& cc);

long long euler_characteristic(const CombinatorialComplex& cc);

struct BoundaryMatrices {
  // d[r - 1] is the boundary from rank r to rank r - 1: rows X_r, columns X_{r-1}.
  std::vector<SparseBinaryMatrix> d;
  bool valid = true;
  // First nonzero entry of some d[r] * d[r - 1], as (r, row in X_{r+1}, col in X_{r-1}).
  std::optional<std::tuple<Rank, std::uint32_t, std::uint32_t>> violation;
};
BoundaryMatrices boundary_matrices(const CombinatorialComplex& cc);

std::size_t gf2_rank(const SparseBinaryMatrix& m);

// b_r over GF(2) for r = 0..dimension. Throws NotAChainComplex.
std::vector<std::size_t> betti_gf2(const CombinatorialComplex& cc);

enum class Orientability { Orientable, NonOrientable, NotASurface };

struct OrientabilityVerdict {
  Orientability verdict = Orientability::Orientable;
  // NonOrientable: indices of 2-cells along a closed path of faces whose orientation
  // propagation returns flipped (first face repeated at the end).
  std::vector<CellIndex> witness_faces;
  // NotASurface: the offending cell.
  std::optional<Cell> offending;
  std::string reason;
};
std::string to_string(Orientability o);

// Needs every 1-cell to be a node pair lying in at most two 2-cells and every 2-cell to be
// bounded by a single cycle of its 1-faces. Throws DimensionTooLow below dimension 2.
OrientabilityVerdict orientability_2d(const CombinatorialComplex& cc);

struct BoundaryGraph {
  SimpleGraph graph;           // relabeled 0..k-1
  std::vector<NodeId> nodes;   // original node of each graph vertex
};
// The 1-cells lying in exactly one 2-cell. Throws DimensionTooLow below dimension 2.
BoundaryGraph boundary_edge_graph(const CombinatorialComplex& cc);

// Sorted component sizes when every component of g is a cycle, nullopt otherwise.
std::optional<std::vector<std::size_t>> cycle_lengths(const SimpleGraph& g);

}  // namespace ccx
