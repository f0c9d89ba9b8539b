#pragma once

#include <utility>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

// Node of a product-style construction from its coordinates, row-major
// (the last coordinate varies fastest).
NodeId flatten(const std::vector<int>& periods, const std::vector<int>& coords);
std::vector<int> unflatten(const std::vector<int>& periods, NodeId node);

// The l-dimensional torus T(p1, ..., pl): for every node s and every k in {0,1}^l the cell
// {s + k' mod p : k' <= k} of rank |k|. Throws PeriodTooSmall if some p < 3.
CombinatorialComplex torus(const std::vector<int>& periods);

// h x p strips. Node (i, j) is i * p + j with i the height and j the perimeter coordinate.
// Cells are the 2x2, 2x1, 1x2 and 1x1 blocks that do not cross the height boundary; the
// cylinder wraps j mod p, the Moebius strip glues j = p to j = 0 with the height flipped.
// Throws PeriodTooSmall if h < 3 or p < 3.
CombinatorialComplex cylinder(int h, int p);
CombinatorialComplex moebius(int h, int p);

// Cycle a_1..a_{nk} plus k spokes b_1..b_k, b_i joined to a_{ni} and a_{ni+1} (mod nk).
// a_j has id j-1, b_i has id nk+i-1. Throws BadParams unless n >= 1, k >= 3 and nk > 3.
SimpleGraph star_graph(int n, int k);

// The two 6-node graphs (G, G') whose Mapper pooling have equal HOMP colors but
// different cross-diameters. Nodes s1..s6 are 0..5; {s1,s2,s5,s6} and {s3,s4} are the
// automorphism classes in both.
std::pair<SimpleGraph, SimpleGraph> mog_example_pair();

}  // namespace ccx
