#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

using Rational = boost::rational<long long>;

// Adds every triangle of g as a 2-cell.
CombinatorialComplex triangular_lift(const SimpleGraph& g);

struct CyclicLiftParams {
  int max_len = 18;
};

// Vertex sets of the chordless cycles of length 3..max_len of g, each sorted,
// in lexicographic order.
std::vector<std::vector<NodeId>> chordless_cycles(const SimpleGraph& g, int max_len);
// Adds every chordless cycle of length <= max_len as a 2-cell. Throws BadParams if max_len < 3.
CombinatorialComplex cyclic_lift(const SimpleGraph& g, const CyclicLiftParams& params);

// Average shortest-path distance from each node to the nodes of its own component.
std::vector<Rational> avg_spd_lens(const SimpleGraph& g);

// Open intervals (eta * i, eta * i + eps) over all integers i.
struct MogParams {
  Rational eta{1};
  Rational eps{1};
};

// A cover fine enough that each interval meets at most one lens value:
// eta = gap / 3, eps = gap / 2 for the smallest gap between distinct values.
MogParams fine_mog_params(const std::vector<Rational>& lens);

// Mapper on graphs with the average-distance lens: every connected component of the
// subgraph induced by a lens preimage becomes a 2-cell (one per vertex set). Components
// of a single node are skipped. Throws DegenerateCover if eta or eps is not positive.
CombinatorialComplex mog_pool(const SimpleGraph& g, const MogParams& params);

}  // namespace ccx
