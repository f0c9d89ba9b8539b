#include "ccx/iso.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "ccx/refinement.hpp"

namespace ccx {
namespace {

// Both complexes side by side; cell g of b has id offset + g.
class Search {
 public:
  Search(const CombinatorialComplex& a, const CombinatorialComplex& b, std::size_t budget)
      : offset_(a.num_cells()), budget_(budget) {
    const std::size_t n = a.num_cells() + b.num_cells();
    up_.resize(n);
    down_.resize(n);
    for (std::uint32_t g = 0; g < a.num_cells(); ++g) {
      up_[g] = a.supercells(g);
      down_[g] = a.subcells(g);
    }
    for (std::uint32_t g = 0; g < b.num_cells(); ++g) {
      for (auto h : b.supercells(g)) up_[offset_ + g].push_back(offset_ + h);
      for (auto h : b.subcells(g)) down_[offset_ + g].push_back(offset_ + h);
    }
  }

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ > budget_; }

  // Returns the matching color vector when a consistent discrete coloring is found.
  std::optional<std::vector<Color>> run(std::vector<Color> colors) {
    if (!refine(colors)) return std::nullopt;
    return descend(std::move(colors));
  }

 private:
  // Refines jointly; false when the two sides' color histograms diverge.
  bool refine(std::vector<Color>& colors) const {
    std::size_t classes = count(colors);
    std::vector<std::vector<std::uint32_t>> sigs(colors.size());
    while (true) {
      for (std::size_t x = 0; x < colors.size(); ++x) {
        auto& s = sigs[x];
        s.assign(1, colors[x]);
        const std::size_t mark = s.size();
        for (auto y : up_[x]) s.push_back(colors[y]);
        std::sort(s.begin() + mark, s.end());
        s.push_back(0xffffffffu);
        const std::size_t mark2 = s.size();
        for (auto y : down_[x]) s.push_back(colors[y]);
        std::sort(s.begin() + mark2, s.end());
      }
      std::vector<std::uint32_t> order(colors.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto p, auto q) { return sigs[p] < sigs[q]; });
      Color next = 0;
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && sigs[order[k]] != sigs[order[k - 1]]) ++next;
        colors[order[k]] = next;
      }
      if (!balanced(colors)) return false;
      const std::size_t now = next + 1;
      if (now == classes) return true;
      classes = now;
    }
  }

  static std::size_t count(const std::vector<Color>& colors) {
    std::vector<Color> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool balanced(const std::vector<Color>& colors) const {
    std::map<Color, long long> diff;
    for (std::size_t x = 0; x < offset_; ++x) ++diff[colors[x]];
    for (std::size_t x = offset_; x < colors.size(); ++x) --diff[colors[x]];
    for (const auto& [c, d] : diff) {
      if (d != 0) return false;
    }
    return true;
  }

  std::optional<std::vector<Color>> descend(std::vector<Color> colors) {
    if (++nodes_ > budget_) return std::nullopt;
    // Smallest non-singleton class, picked by its member in a with the lowest id.
    std::map<Color, std::size_t> size;
    for (std::size_t x = 0; x < offset_; ++x) ++size[colors[x]];
    std::size_t pick = offset_;
    for (std::size_t x = 0; x < offset_; ++x) {
      const std::size_t s = size[colors[x]];
      if (s > 1 && (pick == offset_ || s < size[colors[pick]])) pick = x;
    }
    if (pick == offset_) return colors;  // discrete

    const Color fresh = static_cast<Color>(colors.size());
    for (std::size_t y = offset_; y < colors.size(); ++y) {
      if (colors[y] != colors[pick]) continue;
      auto next = colors;
      next[pick] = fresh;
      next[y] = fresh;
      if (!refine(next)) continue;
      if (auto found = descend(std::move(next))) return found;
      if (exhausted()) return std::nullopt;
    }
    return std::nullopt;
  }

  std::size_t offset_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> down_;
};

}  // namespace

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "Isomorphic";
    case IsoStatus::NonIsomorphic: return "NonIsomorphic";
    case IsoStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::size_t oracle_budget() {
  if (const char* env = std::getenv("CCX_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

IsoResult cc_isomorphic(const ComplexPtr& a, const ComplexPtr& b) {
  return cc_isomorphic(a, b, oracle_budget());
}

IsoResult cc_isomorphic(const ComplexPtr& a, const ComplexPtr& b, std::size_t budget) {
  IsoResult result;
  if (a->skeleton_sizes() != b->skeleton_sizes()) {
    result.status = IsoStatus::NonIsomorphic;
    return result;
  }
  const auto homp = homp_refine({a.get(), b.get()});
  if (!(homp.fingerprints[0] == homp.fingerprints[1])) {
    result.status = IsoStatus::NonIsomorphic;
    return result;
  }
  std::vector<Color> colors;
  for (const auto& coloring : homp.colorings) {
    for (const auto& rank_colors : coloring) colors.insert(colors.end(), rank_colors.begin(), rank_colors.end());
  }

  Search search(*a, *b, budget);
  auto found = search.run(std::move(colors));
  result.search_nodes = search.nodes();
  if (!found) {
    result.status = search.exhausted() ? IsoStatus::Unknown : IsoStatus::NonIsomorphic;
    return result;
  }
  const std::size_t offset = a->num_cells();
  std::map<Color, std::uint32_t> in_b;
  for (std::uint32_t g = 0; g < b->num_cells(); ++g) in_b[(*found)[offset + g]] = g;
  CellMap map{a, b, {}};
  for (Rank r = 0; r <= a->dimension(); ++r) map.assignment.emplace_back(a->skeleton_size(r));
  for (std::uint32_t g = 0; g < offset; ++g) {
    const CellRef x = a->ref(g);
    map.assignment[x.rank][x.index] = b->ref(in_b.at((*found)[g])).index;
  }
  const auto check = check_isomorphism(map);
  if (!check.ok) {
    // A discrete, balanced, stable coloring always gives an isomorphism; treat a failure
    // here as an internal error rather than an answer.
    result.status = IsoStatus::Unknown;
    return result;
  }
  result.status = IsoStatus::Isomorphic;
  result.witness = std::move(map);
  return result;
}

IsoCheck check_isomorphism(const CellMap& map) {
  const auto& a = *map.source;
  const auto& b = *map.target;
  auto fail = [](std::string why) { return IsoCheck{false, std::move(why)}; };
  if (a.dimension() != b.dimension()) return fail("rank: dimensions differ");
  if (static_cast<Rank>(map.assignment.size()) != a.dimension() + 1) return fail("bijectivity: map is not total");
  for (Rank r = 0; r <= a.dimension(); ++r) {
    if (map.assignment[r].size() != a.skeleton_size(r) || a.skeleton_size(r) != b.skeleton_size(r)) {
      return fail("bijectivity: rank " + std::to_string(r) + " sizes differ");
    }
    std::vector<char> hit(b.skeleton_size(r), 0);
    for (CellIndex j : map.assignment[r]) {
      if (j >= hit.size() || hit[j]) return fail("bijectivity: rank " + std::to_string(r) + " is not one-to-one");
      hit[j] = 1;
    }
  }
  for (std::uint32_t g = 0; g < a.num_cells(); ++g) {
    const CellRef x = a.ref(g);
    std::vector<std::uint32_t> mapped;
    for (auto h : a.supercells(g)) mapped.push_back(b.global_id(map.image(a.ref(h))));
    std::sort(mapped.begin(), mapped.end());
    auto expected = b.supercells(b.global_id(map.image(x)));
    std::sort(expected.begin(), expected.end());
    if (mapped != expected) {
      return fail("inclusion: containments of cell " + std::to_string(g) + " are not preserved");
    }
  }
  return {};
}

}  // namespace ccx
