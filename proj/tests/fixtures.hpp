#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"
#include "ccx/neighborhood.hpp"

namespace ccx::testing {

inline CombinatorialComplex filled_triangle() {
  return CombinatorialComplex::build({{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}, {{0, 1, 2}, 2}}, 3);
}

// Nodes A..H are 0..7 (G = 6, H = 7). Square ABDC, triangles CDE, EFH, FGH.
inline CombinatorialComplex square_triangles_complex() {
  enum { A, B, C, D, E, F, G, H };
  std::vector<RawCell> cells = {
      {{A, B}, 1}, {{A, C}, 1}, {{C, D}, 1}, {{B, D}, 1}, {{C, E}, 1}, {{D, E}, 1},
      {{E, F}, 1}, {{E, H}, 1}, {{F, H}, 1}, {{F, G}, 1}, {{G, H}, 1},
      {{A, B, C, D}, 2}, {{C, D, E}, 2}, {{E, F, H}, 2}, {{F, G, H}, 2},
  };
  return CombinatorialComplex::build(cells, 8);
}

// Nodes A..I are 0..8. Square ABDC, triangles CDE, FGH, GHI, bridge E-F.
inline CombinatorialComplex bridged_complex() {
  enum { A, B, C, D, E, F, G, H, I };
  std::vector<RawCell> cells = {
      {{A, B}, 1}, {{A, C}, 1}, {{C, D}, 1}, {{B, D}, 1}, {{C, E}, 1}, {{D, E}, 1},
      {{E, F}, 1}, {{F, G}, 1}, {{F, H}, 1}, {{G, H}, 1}, {{G, I}, 1}, {{H, I}, 1},
      {{A, B, C, D}, 2}, {{C, D, E}, 2}, {{F, G, H}, 2}, {{G, H, I}, 2},
  };
  return CombinatorialComplex::build(cells, 9);
}

inline SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Random cells whose sizes grow with rank (2; 3-4; 5-6), so monotonicity always holds.
inline CombinatorialComplex random_complex(std::mt19937& rng, std::size_t n, int dim) {
  std::vector<RawCell> cells;
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  const std::size_t sizes[][2] = {{1, 1}, {2, 2}, {3, 4}, {5, 6}};
  for (Rank r = 1; r <= dim; ++r) {
    const std::size_t count = 1 + rng() % (2 * n);
    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t want = sizes[r][0] + rng() % (sizes[r][1] - sizes[r][0] + 1);
      if (want > n) continue;
      std::vector<NodeId> v;
      while (v.size() < want) {
        const NodeId x = node(rng);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
      }
      std::sort(v.begin(), v.end());
      const bool seen = std::any_of(cells.begin(), cells.end(),
                                    [&](const RawCell& o) { return o.rank == r && o.vertices == v; });
      if (!seen) cells.push_back({v, r});
    }
  }
  return CombinatorialComplex::build(cells, n);
}

inline bool subset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Direct transcription of the four neighborhood definitions, by scanning all cells.
inline std::vector<CellIndex> naive_neighborhood(const CombinatorialComplex& cc,
                                                 const NeighborhoodSpec& spec, CellRef x) {
  std::vector<CellIndex> out;
  if (x.rank != spec.r1) return out;
  const auto& xv = cc.vertices(x);
  const Rank target = spec.target_rank();
  for (CellIndex i = 0; i < cc.skeleton_size(target); ++i) {
    const auto& yv = cc.skeleton(target)[i];
    bool hit = false;
    switch (spec.kind) {
      case NeighborhoodKind::Adjacency:
      case NeighborhoodKind::CoAdjacency:
        if (i == x.index) break;
        for (const auto& zv : cc.skeleton(spec.r2)) {
          if (spec.kind == NeighborhoodKind::Adjacency ? subset(xv, zv) && subset(yv, zv)
                                                       : subset(zv, xv) && subset(zv, yv)) {
            hit = true;
            break;
          }
        }
        break;
      case NeighborhoodKind::IncidenceUp: hit = subset(xv, yv); break;
      case NeighborhoodKind::IncidenceDown: hit = subset(yv, xv); break;
    }
    if (hit) out.push_back(i);
  }
  return out;
}

// Relabels nodes by perm (node v becomes perm[v]).
inline CombinatorialComplex relabel(const CombinatorialComplex& cc, const std::vector<NodeId>& perm) {
  std::vector<RawCell> cells;
  for (Rank r = 1; r <= cc.dimension(); ++r) {
    for (const auto& v : cc.skeleton(r)) {
      RawCell c{{}, r};
      for (NodeId x : v) c.vertices.push_back(perm[x]);
      cells.push_back(std::move(c));
    }
  }
  return CombinatorialComplex::build(cells, cc.num_nodes());
}

inline std::vector<NodeId> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<NodeId> perm(n);
  for (NodeId i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace ccx::testing
