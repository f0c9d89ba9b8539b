#include "ccx/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "ccx/error.hpp"

namespace ccx {
namespace {

void require_adjacency_like(const NeighborhoodSpec& spec) {
  if (!spec.is_adjacency_like()) {
    throw Error(ErrorCode::WrongKind, "distances need an A or coA neighborhood, got " + to_string(spec));
  }
}

void require_surface_dimension(const CombinatorialComplex& cc) {
  if (cc.dimension() < 2) {
    throw Error(ErrorCode::DimensionTooLow, "needs dimension >= 2, got " + std::to_string(cc.dimension()));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DistanceTable shortest_paths(const CombinatorialComplex& cc, const NeighborhoodSpec& spec) {
  require_adjacency_like(spec);
  const auto adj = augmented_hasse_graph(cc, spec).adjacency();
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> hops;
  hops.reserve(n * n);
  for (NodeId s = 0; s < n; ++s) {
    auto row = bfs_distances(adj, s);
    hops.insert(hops.end(), row.begin(), row.end());
  }
  return DistanceTable(n, std::move(hops));
}

ExtendedDistance diameter(const CombinatorialComplex& cc, const NeighborhoodSpec& spec) {
  require_adjacency_like(spec);
  if (cc.skeleton_size(spec.r1) == 0) {
    throw Error(ErrorCode::EmptySkeleton, "no cells of rank " + std::to_string(spec.r1));
  }
  const auto adj = augmented_hasse_graph(cc, spec).adjacency();
  std::uint32_t best = 0;
  for (NodeId s = 0; s < adj.size(); ++s) {
    for (std::uint32_t d : bfs_distances(adj, s)) {
      if (d == kUnreachable) return ExtendedDistance::infinite();
      best = std::max(best, d);
    }
  }
  return ExtendedDistance(best);
}

ExtendedDistance cross_diameter(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                                Rank k) {
  require_adjacency_like(spec);
  if (cc.skeleton_size(spec.r1) == 0 || cc.skeleton_size(k) == 0) {
    throw Error(ErrorCode::EmptySkeleton, "cross diameter needs cells of ranks " +
                                              std::to_string(spec.r1) + " and " + std::to_string(k));
  }
  // Rank-r1 faces of every rank-k cell.
  const auto faces = neighborhood_lists(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceDown, k, spec.r1});
  for (CellIndex y = 0; y < faces.size(); ++y) {
    if (faces[y].empty()) {
      throw Error(ErrorCode::CellWithoutFaces,
                  "a rank-" + std::to_string(k) + " cell has no rank-" + std::to_string(spec.r1) + " face");
    }
  }
  const auto adj = augmented_hasse_graph(cc, spec).adjacency();
  std::uint32_t best = 0;
  for (NodeId x = 0; x < adj.size(); ++x) {
    const auto dist = bfs_distances(adj, x);
    for (const auto& face_list : faces) {
      std::uint32_t nearest = kUnreachable;
      for (CellIndex f : face_list) nearest = std::min(nearest, dist[f]);
      if (nearest == kUnreachable) return ExtendedDistance::infinite();
      best = std::max(best, nearest);
    }
  }
  return ExtendedDistance(best);
}

Components connected_components(const CombinatorialComplex& cc) {
  DisjointSets sets(cc.num_cells());
  for (std::uint32_t g = 0; g < cc.num_cells(); ++g) {
    for (NodeId v : cc.vertices(cc.ref(g))) sets.unite(g, cc.global_id(CellRef{0, v}));
  }
  Components out;
  out.label.resize(cc.num_cells());
  std::map<std::size_t, std::size_t> names;
  for (std::uint32_t g = 0; g < cc.num_cells(); ++g) {
    auto [it, fresh] = names.emplace(sets.find(g), names.size());
    out.label[g] = it->second;
  }
  out.count = names.size();
  return out;
}

long long euler_characteristic(const CombinatorialComplex& cc) {
  long long chi = 0;
  for (Rank r = 0; r <= cc.dimension(); ++r) {
    const auto n = static_cast<long long>(cc.skeleton_size(r));
    chi += (r % 2 == 0) ? n : -n;
  }
  return chi;
}

BoundaryMatrices boundary_matrices(const CombinatorialComplex& cc) {
  BoundaryMatrices out;
  for (Rank r = 1; r <= cc.dimension(); ++r) {
    out.d.push_back(neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceDown, r, r - 1}));
  }
  for (std::size_t i = 1; i < out.d.size(); ++i) {
    // d[i] maps rank i+1 to rank i; d[i-1] maps rank i to rank i-1.
    const auto product = out.d[i].multiply_gf2(out.d[i - 1]);
    if (product.nnz() > 0) {
      out.valid = false;
      const auto [row, col] = product.entries().front();
      out.violation = std::make_tuple(static_cast<Rank>(i), row, col);
      break;
    }
  }
  return out;
}

std::size_t gf2_rank(const SparseBinaryMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (const auto& [r, c] : m.entries()) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

  // pivot[c] is the basis row whose highest set bit is c.
  std::vector<std::vector<std::uint64_t>> pivot(m.cols());
  std::size_t rank = 0;
  for (auto& row : rows) {
    for (std::size_t w = words; w-- > 0;) {
      while (row[w] != 0) {
        const std::size_t c = w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(row[w])));
        if (pivot[c].empty()) {
          pivot[c] = row;
          ++rank;
          goto next_row;
        }
        for (std::size_t i = 0; i <= w; ++i) row[i] ^= pivot[c][i];
      }
    }
  next_row:;
  }
  return rank;
}

std::vector<std::size_t> betti_gf2(const CombinatorialComplex& cc) {
  const auto bm = boundary_matrices(cc);
  if (!bm.valid) {
    const auto [r, row, col] = *bm.violation;
    throw Error(ErrorCode::NotAChainComplex,
                "boundary of boundary is nonzero: rank-" + std::to_string(r + 1) + " cell " +
                    std::to_string(row) + " hits rank-" + std::to_string(r - 1) + " cell " +
                    std::to_string(col));
  }
  std::vector<std::size_t> ranks(cc.dimension() + 2, 0);  // ranks[r] = rank of d_r
  for (Rank r = 1; r <= cc.dimension(); ++r) ranks[r] = gf2_rank(bm.d[r - 1]);
  std::vector<std::size_t> betti;
  for (Rank r = 0; r <= cc.dimension(); ++r) {
    betti.push_back(cc.skeleton_size(r) - ranks[r] - ranks[r + 1]);
  }
  return betti;
}

std::string to_string(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "Orientable";
    case Orientability::NonOrientable: return "NonOrientable";
    case Orientability::NotASurface: return "NotASurface";
  }
  return "?";
}

OrientabilityVerdict orientability_2d(const CombinatorialComplex& cc) {
  require_surface_dimension(cc);
  OrientabilityVerdict out;
  auto not_surface = [&](CellRef c, std::string why) {
    out.verdict = Orientability::NotASurface;
    out.offending = cc.cell(c);
    out.reason = std::move(why);
    return out;
  };

  const auto cofaces = neighborhood_lists(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, 1, 2});
  for (CellIndex e = 0; e < cofaces.size(); ++e) {
    if (cc.vertices(CellRef{1, e}).size() != 2) return not_surface({1, e}, "1-cell is not a node pair");
    if (cofaces[e].size() > 2) return not_surface({1, e}, "1-cell lies in more than two 2-cells");
  }

  // base[f][e] = +1 if walking face f's boundary cycle from its smallest node towards its
  // smaller neighbor traverses edge e from its lower to its higher node, -1 otherwise.
  const auto edges_of = neighborhood_lists(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceDown, 2, 1});
  const std::size_t nf = edges_of.size();
  std::vector<std::map<CellIndex, int>> base(nf);
  for (CellIndex f = 0; f < nf; ++f) {
    const auto& verts = cc.vertices(CellRef{2, f});
    std::map<NodeId, std::vector<NodeId>> nbr;
    for (CellIndex e : edges_of[f]) {
      const auto& uv = cc.vertices(CellRef{1, e});
      nbr[uv[0]].push_back(uv[1]);
      nbr[uv[1]].push_back(uv[0]);
    }
    bool is_cycle = verts.size() >= 3 && nbr.size() == verts.size() &&
                    edges_of[f].size() == verts.size();
    for (const auto& [v, ns] : nbr) is_cycle = is_cycle && ns.size() == 2;
    if (!is_cycle) return not_surface({2, f}, "2-cell is not bounded by a single cycle");
    NodeId prev = verts.front();
    NodeId cur = std::min(nbr[prev][0], nbr[prev][1]);
    std::size_t steps = 1;
    auto record = [&](NodeId a, NodeId b) {
      const NodeId lo = std::min(a, b);
      const NodeId hi = std::max(a, b);
      const std::vector<NodeId> key = {lo, hi};
      base[f][*cc.find(key, 1)] = a < b ? 1 : -1;
    };
    record(prev, cur);
    while (cur != verts.front()) {
      const NodeId next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      record(cur, next);
      prev = cur;
      cur = next;
      ++steps;
    }
    if (steps != verts.size()) return not_surface({2, f}, "2-cell boundary is not a single cycle");
  }

  std::vector<int> sign(nf, 0);
  std::vector<CellIndex> parent(nf);
  std::vector<std::size_t> depth(nf, 0);
  for (CellIndex root = 0; root < nf; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    parent[root] = root;
    std::deque<CellIndex> queue{root};
    while (!queue.empty()) {
      const CellIndex f = queue.front();
      queue.pop_front();
      for (const auto& [e, dir_f] : base[f]) {
        for (CellIndex g : cofaces[e]) {
          if (g == f) continue;
          const int wanted = -sign[f] * dir_f * base[g].at(e);
          if (sign[g] == 0) {
            sign[g] = wanted;
            parent[g] = f;
            depth[g] = depth[f] + 1;
            queue.push_back(g);
          } else if (sign[g] != wanted) {
            // Close the loop f -> ... -> lca -> ... -> g -> f through the BFS tree.
            std::vector<CellIndex> up_f{f};
            std::vector<CellIndex> up_g{g};
            CellIndex a = f;
            CellIndex b = g;
            while (depth[a] > depth[b]) up_f.push_back(a = parent[a]);
            while (depth[b] > depth[a]) up_g.push_back(b = parent[b]);
            while (a != b) {
              up_f.push_back(a = parent[a]);
              up_g.push_back(b = parent[b]);
            }
            up_g.pop_back();
            out.witness_faces = up_f;
            out.witness_faces.insert(out.witness_faces.end(), up_g.rbegin(), up_g.rend());
            out.witness_faces.push_back(f);
            out.verdict = Orientability::NonOrientable;
            out.reason = "orientation flips around a loop of faces";
            return out;
          }
        }
      }
    }
  }
  return out;
}

BoundaryGraph boundary_edge_graph(const CombinatorialComplex& cc) {
  require_surface_dimension(cc);
  const auto cofaces = neighborhood_lists(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, 1, 2});
  std::vector<std::vector<NodeId>> kept;
  std::vector<NodeId> nodes;
  for (CellIndex e = 0; e < cofaces.size(); ++e) {
    const auto& uv = cc.vertices(CellRef{1, e});
    if (cofaces[e].size() != 1 || uv.size() != 2) continue;
    kept.push_back(uv);
    nodes.insert(nodes.end(), uv.begin(), uv.end());
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto local = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& uv : kept) edges.emplace_back(local(uv[0]), local(uv[1]));
  return BoundaryGraph{SimpleGraph(nodes.size(), std::move(edges)), std::move(nodes)};
}

std::optional<std::vector<std::size_t>> cycle_lengths(const SimpleGraph& g) {
  const auto adj = g.adjacency();
  for (const auto& row : adj) {
    if (row.size() != 2) return std::nullopt;
  }
  const auto label = component_labels(g);
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t l : label) ++sizes[l];
  std::vector<std::size_t> out;
  for (const auto& [l, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ccx
