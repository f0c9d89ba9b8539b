#include "ccx/covering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccx/error.hpp"
#include "ccx/generators.hpp"
#include "ccx/lifting.hpp"

namespace ccx {
namespace {

std::string cell_text(const Cell& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.vertices[i]);
  }
  return out + "}@" + std::to_string(c.rank);
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += " ";
    out += cell_text(cells[i]);
  }
  return out + "]";
}

std::vector<Cell> as_cells(const CombinatorialComplex& cc, Rank r,
                           const std::vector<CellIndex>& idx) {
  std::vector<Cell> out;
  for (CellIndex i : idx) out.push_back(cc.cell(CellRef{r, i}));
  return out;
}

CoveringReport fail(std::string reason) {
  CoveringReport report;
  report.violation = CoveringViolation{std::move(reason), std::nullopt, std::nullopt, {}, {}, {}};
  return report;
}

std::size_t node_count(const std::vector<std::vector<int>>& tori) {
  std::size_t total = 0;
  for (const auto& t : tori) {
    std::size_t n = 1;
    for (int p : t) n *= p;
    total += n;
  }
  return total;
}

}  // namespace

CellMap identity_map(const ComplexPtr& cc) {
  CellMap map{cc, cc, {}};
  for (Rank r = 0; r <= cc->dimension(); ++r) {
    std::vector<CellIndex> id(cc->skeleton_size(r));
    std::iota(id.begin(), id.end(), 0);
    map.assignment.push_back(std::move(id));
  }
  return map;
}

CellMap cell_map_from_nodes(const ComplexPtr& source, const ComplexPtr& target,
                            const std::vector<NodeId>& node_map) {
  if (node_map.size() != source->num_nodes()) {
    throw Error(ErrorCode::DimensionMismatch, "node map size differs from source node count");
  }
  CellMap map{source, target, {}};
  for (Rank r = 0; r <= source->dimension(); ++r) {
    std::vector<CellIndex> row;
    for (const auto& verts : source->skeleton(r)) {
      std::vector<NodeId> image;
      for (NodeId v : verts) image.push_back(node_map[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      auto idx = target->find(image, r);
      if (!idx) {
        throw Error(ErrorCode::UnknownCell, "image of " + cell_text(Cell{verts, r}) +
                                                " is not a target cell");
      }
      row.push_back(*idx);
    }
    map.assignment.push_back(std::move(row));
  }
  return map;
}

CellMap compose(const CellMap& f, const CellMap& g) {
  if (!(*f.target == *g.source)) {
    throw Error(ErrorCode::DimensionMismatch, "composed maps do not share a middle complex");
  }
  CellMap out{f.source, g.target, f.assignment};
  for (std::size_t r = 0; r < out.assignment.size(); ++r) {
    for (auto& idx : out.assignment[r]) idx = g.assignment[r][idx];
  }
  return out;
}

std::string CoveringReport::describe() const {
  if (ok()) return "Ok";
  const auto& v = *violation;
  std::ostringstream out;
  out << "Violation: " << v.reason;
  if (v.cell) out << "\n  cell: " << cell_text(*v.cell);
  if (v.spec) out << "\n  neighborhood: " << to_string(*v.spec);
  if (v.spec) {
    out << "\n  source neighbors: " << cells_text(v.source_neighbors)
        << "\n  their images: " << cells_text(v.mapped_neighbors)
        << "\n  neighbors of the image: " << cells_text(v.target_neighbors);
  }
  return out.str();
}

CoveringReport verify_covering(const CellMap& map) {
  const auto& src = *map.source;
  const auto& tgt = *map.target;
  if (src.dimension() != tgt.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "source dimension " + std::to_string(src.dimension()) + " vs target " +
                    std::to_string(tgt.dimension()));
  }
  const Rank dim = src.dimension();
  if (static_cast<Rank>(map.assignment.size()) != dim + 1) return fail("map is not total");
  for (Rank r = 0; r <= dim; ++r) {
    if (map.assignment[r].size() != src.skeleton_size(r)) return fail("map is not total");
    std::vector<char> hit(tgt.skeleton_size(r), 0);
    for (CellIndex j : map.assignment[r]) {
      if (j >= tgt.skeleton_size(r)) return fail("image index out of range at rank " + std::to_string(r));
      hit[j] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      return fail("not surjective onto rank " + std::to_string(r));
    }
  }

  for (Rank r = 0; r <= dim; ++r) {
    for (const auto& spec : natural_specs(dim)) {
      if (spec.r1 != r) continue;
      const Rank t = spec.target_rank();
      const auto src_lists = neighborhood_lists(src, spec);
      const auto tgt_lists = neighborhood_lists(tgt, spec);
      for (CellIndex i = 0; i < src_lists.size(); ++i) {
        std::vector<CellIndex> mapped;
        for (CellIndex y : src_lists[i]) mapped.push_back(map.assignment[t][y]);
        std::vector<CellIndex> sorted = mapped;
        std::sort(sorted.begin(), sorted.end());
        const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        const auto& expected = tgt_lists[map.assignment[r][i]];
        if (injective && sorted == expected) continue;
        CoveringReport report;
        report.violation = CoveringViolation{
            injective ? "neighborhood image differs" : "not injective on a neighborhood",
            src.cell(CellRef{r, i}),
            spec,
            as_cells(src, t, src_lists[i]),
            as_cells(tgt, t, mapped),
            as_cells(tgt, t, expected)};
        return report;
      }
    }
  }
  return {};
}

std::vector<std::vector<std::size_t>> fiber_sizes(const CellMap& map) {
  std::vector<std::vector<std::size_t>> fibers;
  for (Rank r = 0; r <= map.target->dimension(); ++r) {
    std::vector<std::size_t> row(map.target->skeleton_size(r), 0);
    if (r < static_cast<Rank>(map.assignment.size())) {
      for (CellIndex j : map.assignment[r]) ++row[j];
    }
    fibers.push_back(std::move(row));
  }
  return fibers;
}

CellMap torus_mod_cover(const std::vector<int>& big, const std::vector<int>& small,
                        const std::vector<int>& axis_perm) {
  if (big.size() != small.size()) {
    throw Error(ErrorCode::DimensionMismatch, "tori of different dimension");
  }
  std::vector<int> perm = axis_perm;
  if (perm.empty()) {
    perm.resize(small.size());
    std::iota(perm.begin(), perm.end(), 0);
  }
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t d = 0; d < check.size(); ++d) {
    if (check[d] != static_cast<int>(d)) throw Error(ErrorCode::BadParams, "axis_perm is not a permutation");
  }
  for (std::size_t d = 0; d < small.size(); ++d) {
    if (small[d] < 3 || big[perm[d]] < 3) throw Error(ErrorCode::PeriodTooSmall, "period < 3");
    if (big[perm[d]] % small[d] != 0) {
      throw Error(ErrorCode::NotDivisible, std::to_string(small[d]) + " does not divide " +
                                               std::to_string(big[perm[d]]));
    }
  }
  auto source = share(torus(big));
  auto target = share(torus(small));
  std::vector<NodeId> node_map(source->num_nodes());
  std::vector<int> coords(small.size());
  for (NodeId s = 0; s < node_map.size(); ++s) {
    const auto c = unflatten(big, s);
    for (std::size_t d = 0; d < small.size(); ++d) coords[d] = c[perm[d]];
    node_map[s] = flatten(small, coords);
  }
  return cell_map_from_nodes(source, target, node_map);
}

StripCovers strip_covers(int h, int p) {
  auto cyl = share(cylinder(h, p));
  auto moeb = share(moebius(h, p));
  auto cover = share(cylinder(h, 2 * p));
  std::vector<NodeId> to_cyl(cover->num_nodes());
  std::vector<NodeId> to_moeb(cover->num_nodes());
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < 2 * p; ++j) {
      const auto s = static_cast<std::size_t>(i * 2 * p + j);
      to_cyl[s] = static_cast<NodeId>(i * p + j % p);
      to_moeb[s] = static_cast<NodeId>(j < p ? i * p + j : (h - 1 - i) * p + (j - p));
    }
  }
  return StripCovers{cover, cell_map_from_nodes(cover, cyl, to_cyl),
                     cell_map_from_nodes(cover, moeb, to_moeb)};
}

CellMap star_cover(int n, int k) {
  auto source = share(triangular_lift(star_graph(n, 2 * k)));
  auto target = share(triangular_lift(star_graph(n, k)));
  const int nk = n * k;
  std::vector<NodeId> node_map(source->num_nodes());
  for (int a = 0; a < 2 * nk; ++a) node_map[a] = static_cast<NodeId>(a % nk);
  for (int b = 0; b < 2 * k; ++b) node_map[2 * nk + b] = static_cast<NodeId>(nk + b % k);
  return cell_map_from_nodes(source, target, node_map);
}

MogCovers mog_common_cover() {
  // Node s_j^e (j = 0..5 for s1..s6, sheet e = 0, 1) has id j + 6e.
  auto id = [](NodeId j, NodeId e) { return j + 6 * e; };
  std::vector<RawCell> cells;
  // Hexagon a0 b1 c1 a1 b0 c0 over a triangle (a, b, c) with c the bridge node.
  auto hexagon = [&](NodeId a, NodeId b, NodeId c) {
    const NodeId ring[6] = {id(a, 0), id(b, 1), id(c, 1), id(a, 1), id(b, 0), id(c, 0)};
    for (int i = 0; i < 6; ++i) cells.push_back({{ring[i], ring[(i + 1) % 6]}, 1});
    cells.push_back({{id(a, 0), id(b, 1)}, 2});
    cells.push_back({{id(a, 1), id(b, 0)}, 2});
  };
  hexagon(0, 1, 2);
  hexagon(4, 5, 3);
  for (NodeId e = 0; e < 2; ++e) {
    cells.push_back({{id(2, e), id(3, e)}, 1});
    cells.push_back({{id(2, e), id(3, e)}, 2});
  }
  auto cover = share(CombinatorialComplex::build(cells, 12));

  const auto [g, g_prime] = mog_example_pair();
  auto left = share(mog_pool(g, fine_mog_params(avg_spd_lens(g))));
  auto right = share(mog_pool(g_prime, fine_mog_params(avg_spd_lens(g_prime))));
  std::vector<NodeId> to_left(12);
  for (NodeId v = 0; v < 12; ++v) to_left[v] = v % 6;
  const std::vector<NodeId> to_right = {0, 4, 2, 3, 1, 5, 5, 1, 3, 2, 4, 0};
  return MogCovers{cover, cell_map_from_nodes(cover, left, to_left),
                   cell_map_from_nodes(cover, right, to_right)};
}

std::optional<CoverPlan> torus_union_plan(const std::vector<std::vector<int>>& a,
                                          const std::vector<std::vector<int>>& b,
                                          CoverStrategy strategy) {
  for (const auto* side : {&a, &b}) {
    for (const auto& t : *side) {
      if (t.size() != 2) throw Error(ErrorCode::DimensionMismatch, "components must be 2-dimensional tori");
      for (int p : t) {
        if (p < 3) throw Error(ErrorCode::PeriodTooSmall, "period < 3");
      }
    }
  }
  if (a.empty() || b.empty() || node_count(a) != node_count(b)) return std::nullopt;

  std::vector<std::vector<int>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  CoverPlan plan;
  std::vector<bool> swapped(all.size(), false);
  if (strategy == CoverStrategy::SquareLcm) {
    long long l = 1;
    for (const auto& t : all) l = std::lcm(l, std::lcm<long long>(t[0], t[1]));
    plan.cover_periods = {static_cast<int>(l), static_cast<int>(l)};
  } else {
    long long best = -1;
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      long long l1 = 1;
      long long l2 = 1;
      for (std::size_t c = 0; c < all.size(); ++c) {
        const bool swap = (mask >> c) & 1u;
        l1 = std::lcm<long long>(l1, all[c][swap ? 1 : 0]);
        l2 = std::lcm<long long>(l2, all[c][swap ? 0 : 1]);
      }
      if (best < 0 || l1 * l2 < best) {
        best = l1 * l2;
        plan.cover_periods = {static_cast<int>(l1), static_cast<int>(l2)};
        for (std::size_t c = 0; c < all.size(); ++c) swapped[c] = (mask >> c) & 1u;
      }
    }
  }
  for (std::size_t c = 0; c < all.size(); ++c) {
    ComponentCover cc{all[c], swapped[c] ? std::vector<int>{1, 0} : std::vector<int>{0, 1}};
    (c < a.size() ? plan.left : plan.right).push_back(std::move(cc));
  }
  return plan;
}

CoverCertificate materialize(const CoverPlan& plan) {
  CoverCertificate cert;
  for (const auto& c : plan.left) {
    cert.left_maps.push_back(torus_mod_cover(plan.cover_periods, c.periods, c.axis_perm));
    cert.left_nodes += cert.left_maps.back().target->num_nodes();
  }
  for (const auto& c : plan.right) {
    cert.right_maps.push_back(torus_mod_cover(plan.cover_periods, c.periods, c.axis_perm));
    cert.right_nodes += cert.right_maps.back().target->num_nodes();
  }
  cert.cover = cert.left_maps.front().source;
  // All maps share one cover object.
  for (auto* maps : {&cert.left_maps, &cert.right_maps}) {
    for (auto& m : *maps) m.source = cert.cover;
  }
  return cert;
}

std::optional<CoverCertificate> torus_union_certificate(const std::vector<std::vector<int>>& a,
                                                        const std::vector<std::vector<int>>& b,
                                                        CoverStrategy strategy) {
  auto plan = torus_union_plan(a, b, strategy);
  if (!plan) return std::nullopt;
  return materialize(*plan);
}

CoveringReport verify_certificate(const CoverCertificate& cert) {
  if (cert.left_nodes != cert.right_nodes) return fail("node counts differ");
  for (const auto* maps : {&cert.left_maps, &cert.right_maps}) {
    for (const auto& m : *maps) {
      if (!(*m.source == *cert.cover)) return fail("map does not start at the cover");
      auto report = verify_covering(m);
      if (!report.ok()) return report;
    }
  }
  return {};
}

Json to_json(const CellMap& map) {
  Json j;
  j["source"] = to_json(*map.source);
  j["target"] = to_json(*map.target);
  j["assignment"] = map.assignment;
  return j;
}

CellMap cell_map_from_json(const Json& j) {
  for (const char* key : {"source", "target", "assignment"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(ErrorCode::ParseError, std::string("cell map JSON missing '") + key + "'");
    }
  }
  CellMap map{share(complex_from_json(j["source"])), share(complex_from_json(j["target"])), {}};
  try {
    map.assignment = j["assignment"].get<std::vector<std::vector<CellIndex>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad assignment: ") + e.what());
  }
  // The assignment must be total and land inside the target skeletons of the same rank.
  if (static_cast<int>(map.assignment.size()) != map.source->dimension() + 1) {
    throw Error(ErrorCode::ParseError, "assignment needs one array per source rank");
  }
  for (Rank r = 0; r <= map.source->dimension(); ++r) {
    if (map.assignment[r].size() != map.source->skeleton_size(r)) {
      throw Error(ErrorCode::ParseError, "assignment[" + std::to_string(r) + "] has the wrong length");
    }
    for (CellIndex t : map.assignment[r]) {
      if (t >= map.target->skeleton_size(r)) {
        throw Error(ErrorCode::ParseError, "assignment[" + std::to_string(r) + "] points past the target skeleton");
      }
    }
  }
  return map;
}

}  // namespace ccx
