#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccx/covering.hpp"
#include "ccx/distinguish.hpp"
#include "ccx/invariants.hpp"
#include "ccx/lifting.hpp"
#include "ccx/serialize.hpp"

namespace ccx {

using TorusUnion = std::vector<std::vector<int>>;  // components (p, q) with p <= q

struct TorusDatasetSpec {
  int min_nodes = 18;
  int max_nodes = 40;
  int max_components = 3;
};

// Invariants HOMP cannot see, per side of a pair. Per-component lists are sorted.
struct UnionInvariants {
  std::size_t components = 0;
  std::vector<std::size_t> betti;
  std::vector<ExtendedDistance> diameters;         // A_{0,1}
  std::vector<ExtendedDistance> cross_diameters_1;  // A_{0,1}, k = 1
  std::vector<ExtendedDistance> cross_diameters_2;  // A_{0,1}, k = 2
};
UnionInvariants union_invariants(const TorusUnion& tori);

struct LabeledPair {
  std::size_t id = 0;
  std::size_t nodes = 0;
  TorusUnion left;
  TorusUnion right;
  CoverPlan certificate;
  std::vector<std::string> differing_invariants;
  Json left_values;
  Json right_values;
};

// Every unordered pair of distinct torus unions with the same node count, in order of node
// count and then of the enumeration. Components are 2-dimensional tori with periods >= 3.
std::vector<LabeledPair> gen_torus_dataset(const TorusDatasetSpec& spec);
// All unions with total node count in [min, max], grouped by node count.
std::map<int, std::vector<TorusUnion>> enumerate_torus_unions(const TorusDatasetSpec& spec);

CombinatorialComplex build_union(const TorusUnion& tori);

// One JSON object per line.
Json pair_to_json(const LabeledPair& pair, bool with_complexes = true);

struct DatasetRecord {
  std::size_t id = 0;
  ComplexPtr left;
  ComplexPtr right;
};
// Reads pair records written by pair_to_json. Throws ParseError naming the line.
std::vector<DatasetRecord> read_dataset(std::istream& in);

// Reads edge lists, applies the cyclic lift and writes one JSON line per graph:
// index, num_nodes, num_2cells, cross_diameter_012 (integer, "inf", or null without
// 2-cells) and betti2. A malformed graph produces {"index": i, "error": ...} and the
// stream continues. Returns the number of error records.
std::size_t label_lifted_graphs(std::istream& in, std::ostream& out, const CyclicLiftParams& lift);
Json label_lifted(const SimpleGraph& g, const CyclicLiftParams& lift);

struct EngineReport {
  std::string engine;
  std::size_t separated = 0;
  std::size_t unknown = 0;
  std::vector<std::optional<Step>> first_step;  // per pair, refinement engines only
  double seconds = 0;
  std::optional<std::size_t> expected;
  bool meets_expectation() const { return !expected || *expected == separated; }
};

struct BenchmarkReport {
  std::size_t pairs = 0;
  std::vector<EngineReport> engines;
  bool ok() const;
  Json to_json() const;
};

// expectations: engine name -> expected separated count.
BenchmarkReport run_benchmark(const std::vector<DatasetRecord>& pairs, const std::vector<Engine>& engines,
                              const std::map<std::string, std::size_t>& expectations = {});

}  // namespace ccx
