#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/neighborhood.hpp"
#include "ccx/serialize.hpp"

namespace ccx {

using ComplexPtr = std::shared_ptr<const CombinatorialComplex>;

inline ComplexPtr share(CombinatorialComplex cc) {
  return std::make_shared<const CombinatorialComplex>(std::move(cc));
}

// Rank-preserving map between the cells of two complexes; assignment[r][i] is the index
// in target skeleton r of the image of source cell (r, i).
struct CellMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<std::vector<CellIndex>> assignment;

  CellRef image(CellRef x) const { return CellRef{x.rank, assignment[x.rank][x.index]}; }
};

CellMap identity_map(const ComplexPtr& cc);

// Extends a node map to cells by taking images of vertex sets. Throws UnknownCell when
// some image is not a cell of the target with the same rank.
CellMap cell_map_from_nodes(const ComplexPtr& source, const ComplexPtr& target,
                            const std::vector<NodeId>& node_map);

// g after f. Throws DimensionMismatch unless f.target and g.source are equal complexes.
CellMap compose(const CellMap& f, const CellMap& g);

struct CoveringViolation {
  std::string reason;
  std::optional<Cell> cell;
  std::optional<NeighborhoodSpec> spec;
  std::vector<Cell> source_neighbors;
  std::vector<Cell> mapped_neighbors;
  std::vector<Cell> target_neighbors;
};

struct CoveringReport {
  std::optional<CoveringViolation> violation;

  bool ok() const { return !violation.has_value(); }
  std::string describe() const;
};

// Checks that the map is total, rank-preserving, surjective on every skeleton, and that for
// every source cell x and natural neighborhood N it maps N(x) bijectively onto N(map(x)).
// The first failing (cell, neighborhood) in cell order is reported.
// Throws DimensionMismatch if the two complexes differ in dimension.
CoveringReport verify_covering(const CellMap& map);

// fibers[r][j] = number of source cells mapped to target cell (r, j).
std::vector<std::vector<std::size_t>> fiber_sizes(const CellMap& map);

// Coordinate-wise reduction T(big) -> T(small): small coordinate d is big coordinate
// axis_perm[d] mod small[d]. An empty axis_perm means the identity.
// Throws DimensionMismatch, NotDivisible, PeriodTooSmall.
CellMap torus_mod_cover(const std::vector<int>& big, const std::vector<int>& small,
                        const std::vector<int>& axis_perm = {});

struct StripCovers {
  ComplexPtr cover;  // cylinder(h, 2p)
  CellMap to_cylinder;
  CellMap to_moebius;
};
StripCovers strip_covers(int h, int p);

// triangular_lift(star(n, 2k)) -> triangular_lift(star(n, k)).
CellMap star_cover(int n, int k);

// A 12-node complex covering the Mapper poolings of both mog_example_pair() graphs
// (two hexagons joined by two bridges). Maps are onto mog_pool(G) and mog_pool(G')
// with the fine cover.
struct MogCovers {
  ComplexPtr cover;
  CellMap to_left;
  CellMap to_right;
};
MogCovers mog_common_cover();

// How one torus component is reached from the common cover.
struct ComponentCover {
  std::vector<int> periods;
  std::vector<int> axis_perm;
};

// Common cover of two disjoint unions of 2-dimensional tori with equal node counts.
struct CoverPlan {
  std::vector<int> cover_periods;
  std::vector<ComponentCover> left;
  std::vector<ComponentCover> right;
};

struct CoverCertificate {
  ComplexPtr cover;
  std::vector<CellMap> left_maps;
  std::vector<CellMap> right_maps;
  std::size_t left_nodes = 0;
  std::size_t right_nodes = 0;
};

enum class CoverStrategy {
  SquareLcm,  // T(L, L), L = lcm of every period
  AxisLcm,    // T(L1, L2), per-axis lcm with the cheapest orientation of each component
};

// nullopt when node counts differ (the certificate does not apply).
std::optional<CoverPlan> torus_union_plan(const std::vector<std::vector<int>>& a,
                                          const std::vector<std::vector<int>>& b,
                                          CoverStrategy strategy = CoverStrategy::SquareLcm);
CoverCertificate materialize(const CoverPlan& plan);
std::optional<CoverCertificate> torus_union_certificate(
    const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
    CoverStrategy strategy = CoverStrategy::SquareLcm);

// Ok when every map of the certificate verifies and node counts agree.
CoveringReport verify_certificate(const CoverCertificate& cert);

// {"source": <complex>, "target": <complex>, "assignment": [[...], ...]}
Json to_json(const CellMap& map);
CellMap cell_map_from_json(const Json& j);

}  // namespace ccx
