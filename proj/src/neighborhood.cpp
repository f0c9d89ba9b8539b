#include "ccx/neighborhood.hpp"

#include <algorithm>
#include <charconv>

#include "ccx/error.hpp"

namespace ccx {
namespace {

void sort_unique(std::vector<CellIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Global ids of cells of rank r related to g by `rel` (sub or super), plus g itself when
// it has rank r. Containment in the index excludes the cell itself, so self is added here.
template <typename Rel>
std::vector<std::uint32_t> related(const CombinatorialComplex& cc, std::uint32_t g, Rank r,
                                   Rel rel) {
  std::vector<std::uint32_t> out;
  if (cc.ref(g).rank == r) out.push_back(g);
  for (std::uint32_t h : rel(g)) {
    if (cc.ref(h).rank == r) out.push_back(h);
  }
  return out;
}

}  // namespace

std::string to_string(const NeighborhoodSpec& spec) {
  std::string kind;
  switch (spec.kind) {
    case NeighborhoodKind::Adjacency: kind = "A"; break;
    case NeighborhoodKind::CoAdjacency: kind = "coA"; break;
    case NeighborhoodKind::IncidenceUp: kind = "B"; break;
    case NeighborhoodKind::IncidenceDown: kind = "BT"; break;
  }
  return kind + ":" + std::to_string(spec.r1) + "," + std::to_string(spec.r2);
}

NeighborhoodSpec parse_spec(const std::string& text) {
  auto colon = text.find(':');
  auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos) {
    throw Error(ErrorCode::ParseError, "neighborhood spec '" + text + "' is not KIND:r1,r2");
  }
  NeighborhoodSpec spec;
  const std::string kind = text.substr(0, colon);
  if (kind == "A") {
    spec.kind = NeighborhoodKind::Adjacency;
  } else if (kind == "coA") {
    spec.kind = NeighborhoodKind::CoAdjacency;
  } else if (kind == "B") {
    spec.kind = NeighborhoodKind::IncidenceUp;
  } else if (kind == "BT") {
    spec.kind = NeighborhoodKind::IncidenceDown;
  } else {
    throw Error(ErrorCode::ParseError, "unknown neighborhood kind '" + kind + "'");
  }
  auto parse_rank = [&](std::size_t begin, std::size_t end) {
    Rank r = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, r);
    if (ec != std::errc() || ptr != text.data() + end || begin == end) {
      throw Error(ErrorCode::ParseError, "bad rank in neighborhood spec '" + text + "'");
    }
    return r;
  };
  spec.r1 = parse_rank(colon + 1, comma);
  spec.r2 = parse_rank(comma + 1, text.size());
  return spec;
}

std::vector<NeighborhoodSpec> natural_specs(int dimension) {
  std::vector<NeighborhoodSpec> specs;
  for (auto kind : {NeighborhoodKind::Adjacency, NeighborhoodKind::CoAdjacency,
                    NeighborhoodKind::IncidenceUp, NeighborhoodKind::IncidenceDown}) {
    for (Rank r1 = 0; r1 <= dimension; ++r1) {
      for (Rank r2 = 0; r2 <= dimension; ++r2) specs.push_back({kind, r1, r2});
    }
  }
  return specs;
}

std::vector<CellIndex> neighborhood(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                                    CellRef x) {
  if (!cc.contains(x)) throw Error(ErrorCode::UnknownCell, "cell reference out of range");
  std::vector<CellIndex> out;
  if (x.rank != spec.r1 || spec.r2 < 0 || spec.r2 > cc.dimension()) return out;

  const std::uint32_t g = cc.global_id(x);
  auto up = [&](std::uint32_t h) -> const std::vector<std::uint32_t>& { return cc.supercells(h); };
  auto down = [&](std::uint32_t h) -> const std::vector<std::uint32_t>& { return cc.subcells(h); };

  switch (spec.kind) {
    case NeighborhoodKind::Adjacency:
      for (std::uint32_t z : related(cc, g, spec.r2, up)) {
        for (std::uint32_t y : related(cc, z, spec.r1, down)) {
          if (y != g) out.push_back(cc.ref(y).index);
        }
      }
      break;
    case NeighborhoodKind::CoAdjacency:
      for (std::uint32_t z : related(cc, g, spec.r2, down)) {
        for (std::uint32_t y : related(cc, z, spec.r1, up)) {
          if (y != g) out.push_back(cc.ref(y).index);
        }
      }
      break;
    case NeighborhoodKind::IncidenceUp:
      for (std::uint32_t y : related(cc, g, spec.r2, up)) out.push_back(cc.ref(y).index);
      break;
    case NeighborhoodKind::IncidenceDown:
      for (std::uint32_t y : related(cc, g, spec.r2, down)) out.push_back(cc.ref(y).index);
      break;
  }
  sort_unique(out);
  return out;
}

std::vector<Cell> neighborhood(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                               const Cell& x) {
  auto ref = cc.find(x);
  if (!ref) throw Error(ErrorCode::UnknownCell, "cell is not part of the complex");
  std::vector<Cell> out;
  for (CellIndex i : neighborhood(cc, spec, *ref)) {
    out.push_back(cc.cell(CellRef{spec.target_rank(), i}));
  }
  return out;
}

NeighborLists neighborhood_lists(const CombinatorialComplex& cc, const NeighborhoodSpec& spec) {
  NeighborLists lists(cc.skeleton_size(spec.r1));
  for (CellIndex i = 0; i < lists.size(); ++i) {
    lists[i] = neighborhood(cc, spec, CellRef{spec.r1, i});
  }
  return lists;
}

SparseBinaryMatrix::SparseBinaryMatrix(std::size_t rows, std::size_t cols,
                                       std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) throw Error(ErrorCode::OutOfRangeNode, "matrix entry out of range");
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  entries_ = std::move(entries);
}

bool SparseBinaryMatrix::at(std::uint32_t r, std::uint32_t c) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{r, c});
}

SparseBinaryMatrix SparseBinaryMatrix::transpose() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const auto& [r, c] : entries_) t.emplace_back(c, r);
  return SparseBinaryMatrix(cols_, rows_, std::move(t));
}

SparseBinaryMatrix SparseBinaryMatrix::multiply_gf2(const SparseBinaryMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  std::vector<std::vector<std::uint32_t>> rhs_rows(rhs.rows_);
  for (const auto& [r, c] : rhs.entries_) rhs_rows[r].push_back(c);

  std::vector<Entry> out;
  std::vector<std::uint8_t> parity(rhs.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::size_t k = 0;
  while (k < entries_.size()) {
    const std::uint32_t row = entries_[k].first;
    for (; k < entries_.size() && entries_[k].first == row; ++k) {
      for (std::uint32_t c : rhs_rows[entries_[k].second]) {
        touched.push_back(c);
        parity[c] ^= 1;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t c : touched) {
      if (parity[c]) out.emplace_back(row, c);
      parity[c] = 0;
    }
    touched.clear();
  }
  return SparseBinaryMatrix(rows_, rhs.cols_, std::move(out));
}

std::vector<std::vector<std::uint8_t>> SparseBinaryMatrix::dense() const {
  std::vector<std::vector<std::uint8_t>> m(rows_, std::vector<std::uint8_t>(cols_, 0));
  for (const auto& [r, c] : entries_) m[r][c] = 1;
  return m;
}

SparseBinaryMatrix neighborhood_matrix(const CombinatorialComplex& cc,
                                       const NeighborhoodSpec& spec) {
  if (spec.r1 < 0 || spec.r2 < 0) throw Error(ErrorCode::RankOutOfRange, to_string(spec));
  const auto lists = neighborhood_lists(cc, spec);
  std::vector<SparseBinaryMatrix::Entry> entries;
  for (std::uint32_t i = 0; i < lists.size(); ++i) {
    for (CellIndex j : lists[i]) entries.emplace_back(i, j);
  }
  return SparseBinaryMatrix(cc.skeleton_size(spec.r1), cc.skeleton_size(spec.target_rank()),
                            std::move(entries));
}

SimpleGraph augmented_hasse_graph(const CombinatorialComplex& cc, const NeighborhoodSpec& spec) {
  if (!spec.is_adjacency_like()) {
    throw Error(ErrorCode::WrongKind, "augmented Hasse graph needs A or coA, got " + to_string(spec));
  }
  const auto lists = neighborhood_lists(cc, spec);
  std::vector<SimpleGraph::Edge> edges;
  for (NodeId i = 0; i < lists.size(); ++i) {
    for (CellIndex j : lists[i]) {
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(lists.size(), std::move(edges));
}

HasseGraph hasse_graph(const CombinatorialComplex& cc) {
  HasseGraph h;
  std::vector<SimpleGraph::Edge> edges;
  for (std::uint32_t g = 0; g < cc.num_cells(); ++g) {
    h.ranks.push_back(cc.ref(g).rank);
    for (std::uint32_t y : cc.supercells(g)) {
      if (cc.ref(y).rank == cc.ref(g).rank + 1) edges.emplace_back(g, y);
    }
  }
  h.graph = SimpleGraph(cc.num_cells(), std::move(edges));
  return h;
}

}  // namespace ccx
