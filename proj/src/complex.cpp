#include "ccx/complex.hpp"

#include <algorithm>
#include <string>

namespace ccx {
namespace {

std::string describe(const std::vector<NodeId>& vertices, Rank rank) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices[i]);
  }
  return out + "}@" + std::to_string(rank);
}

}  // namespace

CombinatorialComplex::CombinatorialComplex() { index_cells(); }

CombinatorialComplex CombinatorialComplex::build(const std::vector<RawCell>& cells,
                                                 std::size_t num_nodes) {
  Rank top = 0;
  for (const auto& raw : cells) {
    if (raw.rank < 0) throw Error(ErrorCode::RankViolation, "negative rank");
    if (raw.vertices.empty()) throw Error(ErrorCode::EmptyCell, "cell with no vertices");
    for (NodeId v : raw.vertices) {
      if (v >= num_nodes) {
        throw Error(ErrorCode::OutOfRangeNode,
                    "node " + std::to_string(v) + " >= " + std::to_string(num_nodes));
      }
    }
    top = std::max(top, raw.rank);
  }

  CombinatorialComplex cc;
  if (num_nodes == 0 && cells.empty()) return cc;
  cc.skeletons_.assign(static_cast<std::size_t>(top) + 1, {});
  std::vector<bool> has_singleton(num_nodes, false);
  for (const auto& raw : cells) {
    std::vector<NodeId> verts = raw.vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (raw.rank == 0) {
      if (verts.size() != 1) {
        throw Error(ErrorCode::RankViolation,
                    "rank-0 cell " + describe(verts, 0) + " is not a singleton");
      }
      if (has_singleton[verts[0]]) {
        throw Error(ErrorCode::DuplicateCell, describe(verts, 0));
      }
      has_singleton[verts[0]] = true;
    }
    cc.skeletons_[raw.rank].push_back(std::move(verts));
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (!has_singleton[v]) cc.skeletons_[0].push_back({v});
  }
  for (Rank r = 0; r <= top; ++r) {
    auto& sk = cc.skeletons_[r];
    std::sort(sk.begin(), sk.end());
    auto dup = std::adjacent_find(sk.begin(), sk.end());
    if (dup != sk.end()) throw Error(ErrorCode::DuplicateCell, describe(*dup, r));
  }
  cc.index_cells();

  // Rank monotonicity over proper inclusions. Equal vertex sets at different ranks are
  // allowed (Mapper pooling can produce a 2-cell equal to an edge).
  for (std::uint32_t g = 0; g < cc.num_cells(); ++g) {
    const CellRef x = cc.refs_[g];
    for (std::uint32_t h : cc.super_[g]) {
      const CellRef y = cc.refs_[h];
      if (cc.vertices(x).size() < cc.vertices(y).size() && x.rank > y.rank) {
        throw Error(ErrorCode::RankViolation, describe(cc.vertices(x), x.rank) + " is inside " +
                                                  describe(cc.vertices(y), y.rank));
      }
    }
  }
  return cc;
}

void CombinatorialComplex::index_cells() {
  lookup_.assign(skeletons_.size(), {});
  offsets_.assign(skeletons_.size() + 1, 0);
  refs_.clear();
  for (std::size_t r = 0; r < skeletons_.size(); ++r) {
    offsets_[r + 1] = offsets_[r] + static_cast<std::uint32_t>(skeletons_[r].size());
    for (CellIndex i = 0; i < skeletons_[r].size(); ++i) {
      lookup_[r].emplace(skeletons_[r][i], i);
      refs_.push_back(CellRef{static_cast<Rank>(r), i});
    }
  }

  const std::size_t n0 = num_nodes();
  std::vector<std::vector<std::uint32_t>> cells_of_node(n0);
  for (std::uint32_t g = 0; g < refs_.size(); ++g) {
    for (NodeId v : vertices(refs_[g])) cells_of_node[v].push_back(g);
  }
  sub_.assign(refs_.size(), {});
  super_.assign(refs_.size(), {});
  for (std::uint32_t g = 0; g < refs_.size(); ++g) {
    const auto& xs = vertices(refs_[g]);
    for (std::uint32_t h : cells_of_node[xs.front()]) {
      if (h == g) continue;
      const auto& ys = vertices(refs_[h]);
      if (ys.size() >= xs.size() && std::includes(ys.begin(), ys.end(), xs.begin(), xs.end())) {
        super_[g].push_back(h);
        sub_[h].push_back(g);
      }
    }
  }
  for (auto& row : sub_) std::sort(row.begin(), row.end());
}

std::size_t CombinatorialComplex::skeleton_size(Rank r) const {
  if (r < 0 || r > dimension()) return 0;
  return skeletons_[r].size();
}

std::vector<std::size_t> CombinatorialComplex::skeleton_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& sk : skeletons_) sizes.push_back(sk.size());
  return sizes;
}

const std::vector<std::vector<NodeId>>& CombinatorialComplex::skeleton(Rank r) const {
  static const std::vector<std::vector<NodeId>> kEmpty;
  if (r < 0 || r > dimension()) return kEmpty;
  return skeletons_[r];
}

bool CombinatorialComplex::contains(CellRef c) const {
  return c.rank >= 0 && c.rank <= dimension() && c.index < skeletons_[c.rank].size();
}

std::optional<CellIndex> CombinatorialComplex::find(std::span<const NodeId> verts, Rank r) const {
  if (r < 0 || r > dimension()) return std::nullopt;
  std::vector<NodeId> key(verts.begin(), verts.end());
  auto it = lookup_[r].find(key);
  if (it == lookup_[r].end()) return std::nullopt;
  return it->second;
}

std::optional<CellRef> CombinatorialComplex::find(const Cell& c) const {
  auto idx = find(c.vertices, c.rank);
  if (!idx) return std::nullopt;
  return CellRef{c.rank, *idx};
}

CombinatorialComplex graph_complex(const SimpleGraph& g) {
  std::vector<RawCell> cells;
  for (const auto& [u, v] : g.edges()) cells.push_back({{u, v}, 1});
  return CombinatorialComplex::build(cells, g.num_nodes());
}

CombinatorialComplex disjoint_union(const CombinatorialComplex& a, const CombinatorialComplex& b) {
  const auto shift = static_cast<NodeId>(a.num_nodes());
  std::vector<RawCell> cells;
  for (Rank r = 1; r <= a.dimension(); ++r) {
    for (const auto& v : a.skeleton(r)) cells.push_back({v, r});
  }
  for (Rank r = 1; r <= b.dimension(); ++r) {
    for (auto v : b.skeleton(r)) {
      for (auto& x : v) x += shift;
      cells.push_back({std::move(v), r});
    }
  }
  return CombinatorialComplex::build(cells, a.num_nodes() + b.num_nodes());
}

SimpleGraph one_skeleton(const CombinatorialComplex& cc) {
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& v : cc.skeleton(1)) {
    if (v.size() == 2) edges.emplace_back(v[0], v[1]);
  }
  return SimpleGraph(cc.num_nodes(), std::move(edges));
}

CombinatorialComplex truncate(const CombinatorialComplex& cc, Rank max_rank) {
  std::vector<RawCell> cells;
  for (Rank r = 1; r <= std::min(max_rank, cc.dimension()); ++r) {
    for (const auto& v : cc.skeleton(r)) cells.push_back({v, r});
  }
  return CombinatorialComplex::build(cells, cc.num_nodes());
}

}  // namespace ccx
