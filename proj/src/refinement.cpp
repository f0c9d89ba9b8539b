#include "ccx/refinement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ccx/error.hpp"

namespace ccx {
namespace {

using Signature = std::vector<std::uint32_t>;

constexpr std::uint32_t kFarAway = 0xffffffffu;

// Canonical color of every signature: its position among the distinct sorted signatures.
std::vector<Color> renumber(const std::vector<Signature>& sigs, std::size_t& classes) {
  std::vector<std::uint32_t> order(sigs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return sigs[a] < sigs[b]; });
  std::vector<Color> colors(sigs.size());
  Color next = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && sigs[order[k]] != sigs[order[k - 1]]) ++next;
    colors[order[k]] = next;
  }
  classes = sigs.empty() ? 0 : next + 1;
  return colors;
}

void append_multiset(Signature& sig, std::vector<std::uint32_t>& scratch) {
  std::sort(scratch.begin(), scratch.end());
  sig.push_back(static_cast<std::uint32_t>(scratch.size()));
  sig.insert(sig.end(), scratch.begin(), scratch.end());
  scratch.clear();
}

Histogram histogram(const std::vector<Color>& colors) {
  std::map<Color, std::size_t> counts;
  for (Color c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

class Engine {
 public:
  explicit Engine(const std::vector<const CombinatorialComplex*>& ccs) : ccs_(ccs) {
    for (const auto* cc : ccs_) max_dim_ = std::max(max_dim_, cc->dimension());
    std::vector<Signature> sigs;
    for (const auto* cc : ccs_) {
      for (Rank r = 0; r <= cc->dimension(); ++r) {
        for (std::size_t i = 0; i < cc->skeleton_size(r); ++i) sigs.push_back({static_cast<std::uint32_t>(r)});
      }
    }
    scatter_cells(renumber(sigs, cell_classes_));
    pairs_.resize(ccs_.size());
  }

  Rank max_dim() const { return max_dim_; }
  std::size_t total_cells() const {
    std::size_t n = 0;
    for (const auto* cc : ccs_) n += cc->num_cells();
    return n;
  }

  // One round; returns true if the number of cell classes grew.
  bool homp_round(const std::vector<NeighborhoodSpec>& specs) {
    std::vector<Signature> sigs;
    std::vector<std::uint32_t> scratch;
    for (std::size_t c = 0; c < ccs_.size(); ++c) {
      const auto* cc = ccs_[c];
      for (Rank r = 0; r <= cc->dimension(); ++r) {
        for (CellIndex i = 0; i < cc->skeleton_size(r); ++i) {
          Signature sig{static_cast<std::uint32_t>(r), colors_[c][r][i]};
          for (const auto& spec : specs) {
            if (spec.r1 != r) continue;
            const Rank t = spec.target_rank();
            for (CellIndex y : lists(c, spec)[i]) scratch.push_back(colors_[c][t][y]);
            append_multiset(sig, scratch);
          }
          sigs.push_back(std::move(sig));
        }
      }
    }
    const std::size_t before = cell_classes_;
    scatter_cells(renumber(sigs, cell_classes_));
    return cell_classes_ > before;
  }

  void scl_init(const SclBlock& block) {
    scl_ = block;
    std::vector<Signature> sigs;
    for (std::size_t c = 0; c < ccs_.size(); ++c) {
      const auto* cc = ccs_[c];
      const std::size_t rows = cc->skeleton_size(block.r1);
      const std::size_t cols = cc->skeleton_size(block.r2);
      std::vector<std::uint32_t> hops;
      std::size_t n0 = cc->num_nodes();
      if (block.marking == Marking::Distance) {
        const auto adj = augmented_hasse_graph(*cc, {NeighborhoodKind::Adjacency, 0, 1}).adjacency();
        for (NodeId s = 0; s < n0; ++s) {
          auto row = bfs_distances(adj, s);
          hops.insert(hops.end(), row.begin(), row.end());
        }
      }
      for (CellIndex i = 0; i < rows; ++i) {
        const auto& xs = cc->vertices(CellRef{block.r1, i});
        for (CellIndex j = 0; j < cols; ++j) {
          const auto& ys = cc->vertices(CellRef{block.r2, j});
          std::uint32_t mark = 0;
          if (block.marking == Marking::Binary) {
            mark = std::includes(ys.begin(), ys.end(), xs.begin(), xs.end()) ? 1 : 0;
          } else {
            mark = kFarAway;
            for (NodeId u : xs) {
              for (NodeId v : ys) mark = std::min(mark, hops[u * n0 + v]);
            }
          }
          sigs.push_back({colors_[c][block.r1][i], colors_[c][block.r2][j], mark});
        }
      }
      pairs_[c] = PairColoring{block.r1, block.r2, rows, cols, {}};
    }
    scatter_pairs(renumber(sigs, pair_classes_));
  }

  bool scl_round() {
    const Rank r1 = scl_.r1;
    const Rank r2 = scl_.r2;
    std::vector<Signature> sigs;
    std::vector<std::uint32_t> scratch;
    for (std::size_t c = 0; c < ccs_.size(); ++c) {
      const auto& pc = *pairs_[c];
      std::vector<const NeighborLists*> row_side;  // neighbors x' of x
      std::vector<const NeighborLists*> col_side;  // neighbors y' of y
      for (Rank r = 0; r <= max_dim_; ++r) {
        for (auto kind : {NeighborhoodKind::Adjacency, NeighborhoodKind::CoAdjacency}) {
          row_side.push_back(&lists(c, {kind, r1, r}));
          col_side.push_back(&lists(c, {kind, r2, r}));
        }
      }
      const auto& up = lists(c, {NeighborhoodKind::IncidenceUp, r1, r2});
      const auto& down = lists(c, {NeighborhoodKind::IncidenceDown, r2, r1});
      for (CellIndex i = 0; i < pc.rows; ++i) {
        for (CellIndex j = 0; j < pc.cols; ++j) {
          Signature sig{pc.at(i, j)};
          for (const auto* nl : row_side) {
            for (CellIndex x : (*nl)[i]) scratch.push_back(pc.at(x, j));
            append_multiset(sig, scratch);
          }
          for (const auto* nl : col_side) {
            for (CellIndex y : (*nl)[j]) scratch.push_back(pc.at(i, y));
            append_multiset(sig, scratch);
          }
          for (CellIndex y : up[i]) scratch.push_back(pc.at(i, y));
          append_multiset(sig, scratch);
          for (CellIndex x : down[j]) scratch.push_back(pc.at(x, j));
          append_multiset(sig, scratch);
          sigs.push_back(std::move(sig));
        }
      }
    }
    const std::size_t before = pair_classes_;
    scatter_pairs(renumber(sigs, pair_classes_));
    return pair_classes_ > before;
  }

  bool has_pairs() const { return !ccs_.empty() && pairs_[0].has_value(); }

  void pool() {
    std::vector<Signature> sigs;
    std::vector<std::uint32_t> scratch;
    for (std::size_t c = 0; c < ccs_.size(); ++c) {
      const auto* cc = ccs_[c];
      const auto& pc = *pairs_[c];
      for (Rank r = 0; r <= cc->dimension(); ++r) {
        for (CellIndex i = 0; i < cc->skeleton_size(r); ++i) {
          Signature sig{static_cast<std::uint32_t>(r), colors_[c][r][i]};
          if (r == pc.r1) {
            for (std::size_t j = 0; j < pc.cols; ++j) scratch.push_back(pc.at(i, j));
            append_multiset(sig, scratch);
          }
          if (r == pc.r2) {
            for (std::size_t x = 0; x < pc.rows; ++x) scratch.push_back(pc.at(x, i));
            append_multiset(sig, scratch);
          }
          sigs.push_back(std::move(sig));
        }
      }
    }
    scatter_cells(renumber(sigs, cell_classes_));
  }

  std::vector<Fingerprint> fingerprints() const {
    std::vector<Fingerprint> out;
    for (std::size_t c = 0; c < ccs_.size(); ++c) out.push_back(fingerprint(*ccs_[c], colors_[c], pairs_[c]));
    return out;
  }

  RefinementResult result() const {
    return RefinementResult{colors_, pairs_, fingerprints(), 0, std::nullopt};
  }

 private:
  const NeighborLists& lists(std::size_t c, const NeighborhoodSpec& spec) {
    auto key = std::make_pair(c, spec);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, neighborhood_lists(*ccs_[c], spec)).first;
    return it->second;
  }

  void scatter_cells(const std::vector<Color>& flat) {
    colors_.assign(ccs_.size(), {});
    std::size_t k = 0;
    for (std::size_t c = 0; c < ccs_.size(); ++c) {
      for (Rank r = 0; r <= ccs_[c]->dimension(); ++r) {
        const std::size_t n = ccs_[c]->skeleton_size(r);
        colors_[c].emplace_back(flat.begin() + k, flat.begin() + k + n);
        k += n;
      }
    }
  }

  void scatter_pairs(const std::vector<Color>& flat) {
    std::size_t k = 0;
    for (auto& pc : pairs_) {
      const std::size_t n = pc->rows * pc->cols;
      pc->colors.assign(flat.begin() + k, flat.begin() + k + n);
      k += n;
    }
  }

  std::vector<const CombinatorialComplex*> ccs_;
  Rank max_dim_ = 0;
  std::vector<Coloring> colors_;
  std::vector<std::optional<PairColoring>> pairs_;
  std::size_t cell_classes_ = 0;
  std::size_t pair_classes_ = 0;
  SclBlock scl_;
  std::map<std::pair<std::size_t, NeighborhoodSpec>, NeighborLists> cache_;
};

void check_rank(Rank r, Rank max_dim, const std::string& what) {
  if (r < 0 || r > max_dim) {
    throw Error(ErrorCode::RankOutOfRange,
                what + " uses rank " + std::to_string(r) + ", complexes have dimension " + std::to_string(max_dim));
  }
}

}  // namespace

DiagramConfig homp_full_diagram() { return DiagramConfig{{HompBlock{}}}; }

DiagramConfig scl_diagram(Rank r1, Rank r2, Marking marking, int rounds) {
  return DiagramConfig{{SclBlock{r1, r2, marking, rounds}, PoolStage{}}};
}

DiagramConfig default_smcn_diagram() {
  return DiagramConfig{{HompBlock{{}, 1}, SclBlock{0, 1, Marking::Distance, 4}, PoolStage{}, HompBlock{{}, 1}}};
}

std::string describe(const DiagramConfig& diagram) {
  std::string out;
  for (const auto& stage : diagram.stages) {
    if (!out.empty()) out += " -> ";
    auto rounds = [](int r) { return r == 0 ? std::string("stable") : "x" + std::to_string(r); };
    if (const auto* h = std::get_if<HompBlock>(&stage)) {
      out += (h->specs.empty() ? std::string("Full") : "Homp(" + std::to_string(h->specs.size()) + " specs)") +
             " " + rounds(h->rounds);
    } else if (const auto* s = std::get_if<SclBlock>(&stage)) {
      out += "Scl(" + std::to_string(s->r1) + "," + std::to_string(s->r2) + "," +
             (s->marking == Marking::Distance ? "dist" : "bin") + ") " + rounds(s->rounds);
    } else {
      out += "Pool";
    }
  }
  return out;
}

DiagramConfig parse_diagram(const std::string& text) {
  if (text == "homp") return homp_full_diagram();
  if (text == "smcn" || text == "smcn:default") return default_smcn_diagram();
  if (text.rfind("scl:", 0) == 0) {
    const std::string body = text.substr(4);
    const auto c1 = body.find(',');
    const auto c2 = body.find(',', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw Error(ErrorCode::ParseError, "expected scl:R1,R2,dist|bin, got '" + text + "'");
    }
    try {
      const Rank r1 = std::stoi(body.substr(0, c1));
      const Rank r2 = std::stoi(body.substr(c1 + 1, c2 - c1 - 1));
      const std::string mark = body.substr(c2 + 1);
      if (mark != "dist" && mark != "bin") throw Error(ErrorCode::ParseError, "marking must be dist or bin");
      return scl_diagram(r1, r2, mark == "dist" ? Marking::Distance : Marking::Binary);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad ranks in '" + text + "'");
    }
  }
  throw Error(ErrorCode::ParseError, "unknown engine '" + text + "'");
}

Fingerprint fingerprint(const CombinatorialComplex& cc, const Coloring& colors,
                        const std::optional<PairColoring>& pairs) {
  Fingerprint fp;
  fp.skeleton_sizes = cc.skeleton_sizes();
  for (const auto& rank_colors : colors) fp.histograms.push_back(histogram(rank_colors));
  if (pairs) fp.pair_histogram = histogram(pairs->colors);
  return fp;
}

RefinementResult smcn_refine(const std::vector<const CombinatorialComplex*>& ccs,
                             const DiagramConfig& diagram) {
  Engine engine(ccs);
  const Rank max_dim = engine.max_dim();
  bool scl_seen = false;
  for (const auto& stage : diagram.stages) {
    if (const auto* h = std::get_if<HompBlock>(&stage)) {
      for (const auto& spec : h->specs) {
        check_rank(spec.r1, max_dim, to_string(spec));
        check_rank(spec.r2, max_dim, to_string(spec));
      }
    } else if (const auto* s = std::get_if<SclBlock>(&stage)) {
      check_rank(s->r1, max_dim, "SCL block");
      check_rank(s->r2, max_dim, "SCL block");
      if (s->r1 > s->r2) throw Error(ErrorCode::RankOutOfRange, "SCL block needs r1 <= r2");
      scl_seen = true;
    } else if (!scl_seen) {
      throw Error(ErrorCode::PoolWithoutScl, "pool stage before any SCL block");
    }
  }

  std::optional<Step> separated;
  auto track = [&](int stage, int round) {
    if (ccs.size() != 2 || separated) return;
    const auto fps = engine.fingerprints();
    if (!(fps[0] == fps[1])) separated = Step{stage, round};
  };
  track(-1, 0);

  std::size_t total = 0;
  // A stable run needs at most one round per cell (or pair) to stop growing.
  const std::size_t cap = engine.total_cells() + 1;
  for (int si = 0; si < static_cast<int>(diagram.stages.size()); ++si) {
    const auto& stage = diagram.stages[si];
    if (const auto* h = std::get_if<HompBlock>(&stage)) {
      const auto specs = h->specs.empty() ? natural_specs(max_dim) : h->specs;
      for (int round = 1; h->rounds == 0 || round <= h->rounds; ++round) {
        const bool grew = engine.homp_round(specs);
        ++total;
        track(si, round);
        if (h->rounds == 0 && !grew) break;
        if (static_cast<std::size_t>(round) > cap) {
          throw Error(ErrorCode::BadParams, "refinement exceeded its round bound");
        }
      }
    } else if (const auto* s = std::get_if<SclBlock>(&stage)) {
      engine.scl_init(*s);
      track(si, 0);
      std::size_t pair_cap = 1;
      for (const auto* cc : ccs) pair_cap += cc->skeleton_size(s->r1) * cc->skeleton_size(s->r2);
      for (int round = 1; s->rounds == 0 || round <= s->rounds; ++round) {
        const bool grew = engine.scl_round();
        ++total;
        track(si, round);
        if (s->rounds == 0 && !grew) break;
        if (static_cast<std::size_t>(round) > pair_cap) {
          throw Error(ErrorCode::BadParams, "pair refinement exceeded its round bound");
        }
      }
    } else {
      engine.pool();
      ++total;
      track(si, 1);
    }
  }
  auto result = engine.result();
  result.total_rounds = total;
  result.first_separation = separated;
  return result;
}

RefinementResult homp_refine(const std::vector<const CombinatorialComplex*>& ccs,
                             const HompBlock& block) {
  return smcn_refine(ccs, DiagramConfig{{block}});
}

PairColoring scl_refine(const CombinatorialComplex& cc, Rank r1, Rank r2, Marking marking,
                        int rounds) {
  auto result = smcn_refine({&cc}, DiagramConfig{{SclBlock{r1, r2, marking, rounds}}});
  return *result.pairs[0];
}

}  // namespace ccx
