#include "ccx/dataset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <tuple>

#include "ccx/error.hpp"
#include "ccx/generators.hpp"

namespace ccx {
namespace {

const NeighborhoodSpec kA01{NeighborhoodKind::Adjacency, 0, 1};

Json distance_json(const ExtendedDistance& d) {
  return d.is_finite() ? Json(d.value()) : Json("inf");
}

Json distances_json(const std::vector<ExtendedDistance>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(distance_json(d));
  return out;
}

Json invariants_json(const UnionInvariants& inv) {
  Json j;
  j["components"] = inv.components;
  j["betti"] = inv.betti;
  j["diameters"] = distances_json(inv.diameters);
  j["cross_diameters_k1"] = distances_json(inv.cross_diameters_1);
  j["cross_diameters_k2"] = distances_json(inv.cross_diameters_2);
  return j;
}

}  // namespace

CombinatorialComplex build_union(const TorusUnion& tori) {
  if (tori.empty()) throw Error(ErrorCode::BadParams, "empty torus union");
  CombinatorialComplex cc = torus(tori.front());
  for (std::size_t i = 1; i < tori.size(); ++i) cc = disjoint_union(cc, torus(tori[i]));
  return cc;
}

UnionInvariants union_invariants(const TorusUnion& tori) {
  static thread_local std::map<std::vector<int>, std::tuple<ExtendedDistance, ExtendedDistance, ExtendedDistance>> memo;
  UnionInvariants inv;
  const auto cc = build_union(tori);
  inv.components = connected_components(cc).count;
  inv.betti = betti_gf2(cc);
  for (const auto& t : tori) {
    auto it = memo.find(t);
    if (it == memo.end()) {
      const auto one = torus(t);
      it = memo.emplace(t, std::make_tuple(diameter(one, kA01), cross_diameter(one, kA01, 1),
                                           cross_diameter(one, kA01, 2))).first;
    }
    inv.diameters.push_back(std::get<0>(it->second));
    inv.cross_diameters_1.push_back(std::get<1>(it->second));
    inv.cross_diameters_2.push_back(std::get<2>(it->second));
  }
  std::sort(inv.diameters.begin(), inv.diameters.end());
  std::sort(inv.cross_diameters_1.begin(), inv.cross_diameters_1.end());
  std::sort(inv.cross_diameters_2.begin(), inv.cross_diameters_2.end());
  return inv;
}

std::map<int, std::vector<TorusUnion>> enumerate_torus_unions(const TorusDatasetSpec& spec) {
  if (spec.min_nodes < 9 || spec.max_nodes < spec.min_nodes || spec.max_components < 1) {
    throw Error(ErrorCode::BadParams, "dataset spec needs 9 <= min <= max and max components >= 1");
  }
  std::vector<std::vector<int>> kinds;
  for (int p = 3; p * p <= spec.max_nodes; ++p) {
    for (int q = p; p * q <= spec.max_nodes; ++q) kinds.push_back({p, q});
  }
  std::map<int, std::vector<TorusUnion>> groups;
  TorusUnion current;
  // Components are chosen in non-decreasing kind order so each multiset appears once.
  auto grow = [&](auto&& self, std::size_t first, int nodes) -> void {
    if (!current.empty() && nodes >= spec.min_nodes) groups[nodes].push_back(current);
    if (static_cast<int>(current.size()) == spec.max_components) return;
    for (std::size_t k = first; k < kinds.size(); ++k) {
      const int n = kinds[k][0] * kinds[k][1];
      if (nodes + n > spec.max_nodes) continue;
      current.push_back(kinds[k]);
      self(self, k, nodes + n);
      current.pop_back();
    }
  };
  grow(grow, 0, 0);
  return groups;
}

std::vector<LabeledPair> gen_torus_dataset(const TorusDatasetSpec& spec) {
  std::vector<LabeledPair> pairs;
  for (const auto& [nodes, unions] : enumerate_torus_unions(spec)) {
    std::vector<UnionInvariants> inv;
    for (const auto& u : unions) inv.push_back(union_invariants(u));
    for (std::size_t i = 0; i < unions.size(); ++i) {
      for (std::size_t j = i + 1; j < unions.size(); ++j) {
        LabeledPair pair;
        pair.id = pairs.size();
        pair.nodes = static_cast<std::size_t>(nodes);
        pair.left = unions[i];
        pair.right = unions[j];
        pair.certificate = *torus_union_plan(unions[i], unions[j], CoverStrategy::AxisLcm);
        pair.left_values = invariants_json(inv[i]);
        pair.right_values = invariants_json(inv[j]);
        for (const auto& [key, value] : pair.left_values.items()) {
          if (value != pair.right_values[key]) pair.differing_invariants.push_back(key);
        }
        pairs.push_back(std::move(pair));
      }
    }
  }
  return pairs;
}

Json pair_to_json(const LabeledPair& pair, bool with_complexes) {
  auto components = [](const std::vector<ComponentCover>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
      Json j;
      j["periods"] = c.periods;
      j["axis_perm"] = c.axis_perm;
      out.push_back(std::move(j));
    }
    return out;
  };
  Json j;
  j["id"] = pair.id;
  j["nodes"] = pair.nodes;
  j["left"] = pair.left;
  j["right"] = pair.right;
  Json cert;
  cert["cover"] = pair.certificate.cover_periods;
  cert["left"] = components(pair.certificate.left);
  cert["right"] = components(pair.certificate.right);
  j["certificate"] = std::move(cert);
  j["differing_invariants"] = pair.differing_invariants;
  j["left_invariants"] = pair.left_values;
  j["right_invariants"] = pair.right_values;
  if (with_complexes) {
    j["left_complex"] = to_json(build_union(pair.left));
    j["right_complex"] = to_json(build_union(pair.right));
  }
  return j;
}

std::vector<DatasetRecord> read_dataset(std::istream& in) {
  std::vector<DatasetRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = parse_json_text(line);
      DatasetRecord rec;
      rec.id = j.value("id", records.size());
      if (j.contains("left_complex") && j.contains("right_complex")) {
        rec.left = share(complex_from_json(j["left_complex"]));
        rec.right = share(complex_from_json(j["right_complex"]));
      } else if (j.contains("left") && j.contains("right")) {
        rec.left = share(build_union(j["left"].get<TorusUnion>()));
        rec.right = share(build_union(j["right"].get<TorusUnion>()));
      } else {
        throw Error(ErrorCode::ParseError, "record has neither complexes nor torus parameters");
      }
      records.push_back(std::move(rec));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "dataset line " + std::to_string(line_no) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

Json label_lifted(const SimpleGraph& g, const CyclicLiftParams& lift) {
  const auto cc = cyclic_lift(g, lift);
  Json j;
  j["num_nodes"] = g.num_nodes();
  j["num_2cells"] = cc.skeleton_size(2);
  if (cc.skeleton_size(2) == 0) {
    j["cross_diameter_012"] = nullptr;
  } else {
    j["cross_diameter_012"] = distance_json(cross_diameter(cc, kA01, 2));
  }
  const auto betti = betti_gf2(cc);
  j["betti2"] = betti.size() > 2 ? betti[2] : 0;
  return j;
}

std::size_t label_lifted_graphs(std::istream& in, std::ostream& out, const CyclicLiftParams& lift) {
  EdgeListReader reader(in);
  std::size_t errors = 0;
  for (std::size_t index = 0;; ++index) {
    Json record;
    record["index"] = index;
    try {
      auto g = reader.next();
      if (!g) break;
      if (g->num_nodes() == 0) throw Error(ErrorCode::BadParams, "graph has no nodes");
      const Json labels = label_lifted(*g, lift);
      for (const auto& [key, value] : labels.items()) record[key] = value;
    } catch (const Error& e) {
      record["error"] = e.what();
      ++errors;
    }
    out << record.dump() << '\n';
  }
  return errors;
}

bool BenchmarkReport::ok() const {
  return std::all_of(engines.begin(), engines.end(), [](const auto& e) { return e.meets_expectation(); });
}

Json BenchmarkReport::to_json() const {
  Json j;
  j["pairs"] = pairs;
  Json list = Json::array();
  for (const auto& e : engines) {
    Json r;
    r["engine"] = e.engine;
    r["separated"] = e.separated;
    if (e.unknown > 0) r["unknown"] = e.unknown;
    r["seconds"] = e.seconds;
    if (e.expected) r["expected"] = *e.expected;
    r["meets_expectation"] = e.meets_expectation();
    Json steps = Json::array();
    for (const auto& s : e.first_step) {
      steps.push_back(s ? Json::array({s->stage, s->round}) : Json(nullptr));
    }
    if (!e.first_step.empty()) r["first_separating_step"] = std::move(steps);
    list.push_back(std::move(r));
  }
  j["engines"] = std::move(list);
  return j;
}

BenchmarkReport run_benchmark(const std::vector<DatasetRecord>& pairs, const std::vector<Engine>& engines,
                              const std::map<std::string, std::size_t>& expectations) {
  BenchmarkReport report;
  report.pairs = pairs.size();
  for (const auto& engine : engines) {
    EngineReport er;
    er.engine = engine.name;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& rec : pairs) {
      const auto verdict = distinguish(rec.left, rec.right, engine);
      if (verdict.distinguished) ++er.separated;
      if (verdict.oracle && *verdict.oracle == IsoStatus::Unknown) ++er.unknown;
      if (engine.kind != EngineKind::Oracle) er.first_step.push_back(verdict.step);
    }
    er.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (auto it = expectations.find(engine.name); it != expectations.end()) er.expected = it->second;
    report.engines.push_back(std::move(er));
  }
  return report;
}

}  // namespace ccx
