#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/neighborhood.hpp"

namespace ccx {

// Colors are canonical: in every round the signatures of all cells of all complexes being
// refined together are sorted and numbered in order, so a color never depends on cell order.
using Color = std::uint32_t;
using Coloring = std::vector<std::vector<Color>>;  // [rank][cell index]

struct PairColoring {
  Rank r1 = 0;
  Rank r2 = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Color> colors;  // row-major over X_r1 x X_r2

  Color at(std::size_t i, std::size_t j) const { return colors[i * cols + j]; }
};

enum class Marking { Binary, Distance };

using Histogram = std::vector<std::pair<Color, std::size_t>>;

struct Fingerprint {
  std::vector<std::size_t> skeleton_sizes;
  std::vector<Histogram> histograms;  // per rank, sorted by color
  Histogram pair_histogram;           // empty unless a pair coloring is live

  bool operator==(const Fingerprint&) const = default;
};

// Refines cells with the given neighborhoods; an empty list means every natural
// neighborhood up to the largest dimension. rounds == 0 runs until the partition is stable.
struct HompBlock {
  std::vector<NeighborhoodSpec> specs;
  int rounds = 0;
};

// Refines pairs (x, y) in X_r1 x X_r2, seeded from the current cell colors.
struct SclBlock {
  Rank r1 = 0;
  Rank r2 = 1;
  Marking marking = Marking::Distance;
  int rounds = 0;
};

// Folds the live pair coloring back into the colors of ranks r1 and r2.
struct PoolStage {};

using Stage = std::variant<HompBlock, SclBlock, PoolStage>;

struct DiagramConfig {
  std::vector<Stage> stages;
};

DiagramConfig homp_full_diagram();
// [Scl until stable, Pool]
DiagramConfig scl_diagram(Rank r1, Rank r2, Marking marking, int rounds = 0);
// [Full x1, Scl(0,1,Distance) x4, Pool, Full x1]
DiagramConfig default_smcn_diagram();

std::string describe(const DiagramConfig& diagram);
// "homp", "scl:R1,R2,dist|bin", "smcn:default". Throws ParseError.
DiagramConfig parse_diagram(const std::string& text);

// A point in the run: stage index and round within it. The initial coloring is stage -1.
struct Step {
  int stage = -1;
  int round = 0;

  bool operator==(const Step&) const = default;
};

struct RefinementResult {
  std::vector<Coloring> colorings;
  std::vector<std::optional<PairColoring>> pairs;
  std::vector<Fingerprint> fingerprints;
  std::size_t total_rounds = 0;
  // Only filled for two complexes: the first step after which their fingerprints differ.
  std::optional<Step> first_separation;
};

// Runs the diagram on all complexes with one shared palette. Every complex starts with one
// color per rank. Throws RankOutOfRange, PoolWithoutScl.
RefinementResult smcn_refine(const std::vector<const CombinatorialComplex*>& ccs,
                             const DiagramConfig& diagram);

RefinementResult homp_refine(const std::vector<const CombinatorialComplex*>& ccs,
                             const HompBlock& block = {});

// Pair coloring of one complex after `rounds` SCL rounds (0: until stable).
PairColoring scl_refine(const CombinatorialComplex& cc, Rank r1, Rank r2, Marking marking,
                        int rounds = 0);

Fingerprint fingerprint(const CombinatorialComplex& cc, const Coloring& colors,
                        const std::optional<PairColoring>& pairs);

}  // namespace ccx
