#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ccx/covering.hpp"
#include "ccx/dataset.hpp"
#include "ccx/distinguish.hpp"
#include "ccx/error.hpp"
#include "ccx/generators.hpp"
#include "ccx/invariants.hpp"
#include "ccx/iso.hpp"
#include "ccx/lifting.hpp"
#include "ccx/serialize.hpp"

namespace ccx::cli {
namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

CombinatorialComplex load_complex(const std::string& path, std::istream& in) {
  return decode_json(slurp(path, in));
}

SimpleGraph load_graph(const std::string& path, std::istream& in) {
  std::istringstream ss(slurp(path, in));
  return read_edge_list(ss);
}

// Writes to `path`, or to `out` when no path is given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
      stream_ = &out;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::ParseError, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty integer list");
  return out;
}

// "3", "5/3", "0.25".
Rational parse_rational(const std::string& text) {
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const long long num = std::stoll(text.substr(0, slash));
      const long long den = std::stoll(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(text);
    }
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    const long long ip = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    const long long fp = frac.empty() ? 0 : std::stoll(frac);
    return Rational(ip) + Rational(negative ? -fp : fp, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

Json distance_json(const ExtendedDistance& d) {
  return d.is_finite() ? Json(d.value()) : Json("inf");
}

// Runs f and stores its value, or {"error": ...} when the invariant does not apply.
template <typename F>
Json guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Json{{"error", e.what()}};
  }
}

Json invariants_report(const CombinatorialComplex& cc, const NeighborhoodSpec& spec,
                       const std::optional<Rank>& cross_k) {
  Json j;
  j["dimension"] = cc.dimension();
  j["skeleton_sizes"] = cc.skeleton_sizes();
  j["components"] = connected_components(cc).count;
  j["euler_characteristic"] = euler_characteristic(cc);
  const auto bd = boundary_matrices(cc);
  if (bd.valid) {
    j["betti"] = betti_gf2(cc);
  } else {
    const auto& [r, row, col] = *bd.violation;
    j["betti"] = Json{{"error", "not a chain complex"},
                      {"rank", r}, {"row", row}, {"col", col}};
  }
  j["spec"] = to_string(spec);
  j["diameter"] = guarded([&] { return distance_json(diameter(cc, spec)); });
  if (cross_k) {
    j["cross_k"] = *cross_k;
    j["cross_diameter"] = guarded([&] { return distance_json(cross_diameter(cc, spec, *cross_k)); });
  }
  if (cc.dimension() >= 2) {
    const auto o = orientability_2d(cc);
    Json oj;
    oj["verdict"] = to_string(o.verdict);
    if (!o.witness_faces.empty()) oj["witness_faces"] = o.witness_faces;
    if (!o.reason.empty()) oj["reason"] = o.reason;
    j["orientability"] = std::move(oj);
    const auto lengths = cycle_lengths(boundary_edge_graph(cc).graph);
    j["boundary_cycles"] = lengths ? Json(*lengths) : Json("not a union of cycles");
  }
  return j;
}

void print_report(std::ostream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

Json histogram_json(const Histogram& h) {
  Json out = Json::array();
  for (const auto& [color, count] : h) out.push_back(Json::array({color, count}));
  return out;
}

Json fingerprint_json(const Fingerprint& fp) {
  Json j;
  j["skeleton_sizes"] = fp.skeleton_sizes;
  Json ranks = Json::array();
  for (const auto& h : fp.histograms) ranks.push_back(histogram_json(h));
  j["histograms"] = std::move(ranks);
  if (!fp.pair_histogram.empty()) j["pair_histogram"] = histogram_json(fp.pair_histogram);
  return j;
}

void set_rounds(DiagramConfig& diagram, int rounds) {
  for (auto& stage : diagram.stages) {
    if (auto* h = std::get_if<HompBlock>(&stage)) h->rounds = rounds;
    if (auto* s = std::get_if<SclBlock>(&stage)) s->rounds = rounds;
  }
}

std::map<std::string, std::size_t> parse_expectations(const std::vector<std::string>& items,
                                                      std::size_t pairs) {
  std::map<std::string, std::size_t> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected ENGINE=COUNT, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    if (value == "all") {
      out[item.substr(0, eq)] = pairs;
    } else {
      try {
        out[item.substr(0, eq)] = std::stoul(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad count in '" + item + "'");
      }
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial complex toolkit", "ccx"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a complex (JSON) or a graph (edge list)");
  std::string gen_kind, gen_periods = "3,3", gen_which = "left";
  int gen_height = 3, gen_perimeter = 3, gen_n = 2, gen_k = 3;
  gen->add_option("kind", gen_kind, "torus|cylinder|moebius|star|cycle|mog-pair")
      ->required()
      ->check(CLI::IsMember({"torus", "cylinder", "moebius", "star", "cycle", "mog-pair"}));
  gen->add_option("--periods", gen_periods, "Torus periods, comma separated");
  gen->add_option("--height", gen_height, "Strip height");
  gen->add_option("--perimeter", gen_perimeter, "Strip perimeter");
  gen->add_option("-n", gen_n, "Star subdivision / cycle length");
  gen->add_option("-k", gen_k, "Star spokes");
  gen->add_option("--which", gen_which, "left|right")->check(CLI::IsMember({"left", "right"}));

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a graph (edge list) to a 2-dimensional complex");
  std::string lift_method = "cyclic", lift_input;
  int lift_len = 18;
  lift->add_option("--method", lift_method)->check(CLI::IsMember({"triangular", "cyclic"}));
  lift->add_option("--max-cycle-len", lift_len);
  lift->add_option("input", lift_input, "Edge list file (default stdin)");

  // pool
  auto* pool = app.add_subcommand("pool", "Mapper pooling of a graph with the average-distance lens");
  std::string pool_method = "mog", pool_eta, pool_eps, pool_input;
  pool->add_option("--method", pool_method)->check(CLI::IsMember({"mog"}));
  pool->add_option("--eta", pool_eta, "Interval spacing (default: fine cover)");
  pool->add_option("--eps", pool_eps, "Interval length (default: fine cover)");
  pool->add_option("input", pool_input, "Edge list file (default stdin)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Topological and metric invariants of a complex");
  std::string inv_input, inv_spec = "A:0,1";
  std::optional<int> inv_cross_k;
  bool inv_json = false;
  inv->add_option("input", inv_input, "Complex JSON (default stdin)");
  inv->add_option("--spec", inv_spec, "Neighborhood for distances");
  inv->add_option("--cross-k", inv_cross_k, "Rank for the cross-diameter");
  inv->add_flag("--json", inv_json);

  // distinguish
  auto* dis = app.add_subcommand("distinguish", "Try to separate two complexes");
  std::string dis_a, dis_b, dis_engine = "homp";
  std::optional<int> dis_rounds;
  bool dis_colors = false;
  dis->add_option("a", dis_a)->required();
  dis->add_option("b", dis_b)->required();
  dis->add_option("--engine", dis_engine, "homp|scl:R1,R2,dist|bin|smcn[:default]|oracle");
  dis->add_option("--rounds", dis_rounds, "Rounds per refinement block (default: until stable)")
      ->check(CLI::PositiveNumber);
  dis->add_flag("--emit-colors", dis_colors, "Print final color histograms as JSON");

  // verify-cover
  auto* vc = app.add_subcommand("verify-cover", "Check that a cell map is a covering");
  std::string vc_input;
  vc->add_option("input", vc_input, "Cell map JSON (default stdin)");

  // check-iso
  auto* ci = app.add_subcommand("check-iso", "Check an isomorphism, or decide one between two complexes");
  std::vector<std::string> ci_inputs;
  ci->add_option("inputs", ci_inputs, "map.json, or a.json b.json")->required()->expected(1, 2);

  // gen-torus-dataset
  auto* gtd = app.add_subcommand("gen-torus-dataset", "Pairs of equal-size torus unions");
  std::vector<int> gtd_pos;
  std::optional<int> gtd_min, gtd_max, gtd_comp;
  std::optional<std::size_t> gtd_expect;
  std::string gtd_output;
  bool gtd_no_complexes = false;
  gtd->add_option("params", gtd_pos, "MIN MAX COMPONENTS")->expected(0, 3);
  gtd->add_option("--min-nodes", gtd_min);
  gtd->add_option("--max-nodes", gtd_max);
  gtd->add_option("--max-components", gtd_comp);
  gtd->add_option("-o,--output", gtd_output, "Output JSON lines (default stdout)");
  gtd->add_option("--expect", gtd_expect, "Expected number of pairs");
  gtd->add_flag("--no-complexes", gtd_no_complexes, "Omit the complexes from the records");

  // label-lifted
  auto* ll = app.add_subcommand("label-lifted", "Lift graphs and label them");
  std::string ll_input, ll_output;
  int ll_len = 18;
  ll->add_option("--max-cycle-len", ll_len);
  ll->add_option("-i,--input", ll_input, "Edge lists (default stdin)");
  ll->add_option("-o,--output", ll_output, "Output JSON lines (default stdout)");

  // run-benchmark
  auto* rb = app.add_subcommand("run-benchmark", "Count the pairs each engine separates");
  std::string rb_dataset, rb_engines = "homp,smcn,oracle";
  std::vector<std::string> rb_expect;
  bool rb_no_expect = false;
  rb->add_option("--dataset", rb_dataset, "Dataset JSON lines (default stdin)");
  rb->add_option("--engines", rb_engines);
  rb->add_option("--expect", rb_expect, "ENGINE=COUNT or ENGINE=all (repeatable)");
  rb->add_flag("--no-expect", rb_no_expect, "Drop the default expectations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ccx: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_kind == "torus") {
        out << encode_json(torus(parse_int_list(gen_periods))) << '\n';
      } else if (gen_kind == "cylinder") {
        out << encode_json(cylinder(gen_height, gen_perimeter)) << '\n';
      } else if (gen_kind == "moebius") {
        out << encode_json(moebius(gen_height, gen_perimeter)) << '\n';
      } else if (gen_kind == "star") {
        write_edge_list(out, star_graph(gen_n, gen_k));
      } else if (gen_kind == "cycle") {
        if (gen_n < 3) throw Error(ErrorCode::BadParams, "cycle needs n >= 3");
        write_edge_list(out, cycle_graph(static_cast<std::size_t>(gen_n)));
      } else {
        const auto [g, h] = mog_example_pair();
        write_edge_list(out, gen_which == "left" ? g : h);
      }
    } else if (lift->parsed()) {
      const auto g = load_graph(lift_input, in);
      const auto cc = lift_method == "triangular" ? triangular_lift(g)
                                                   : cyclic_lift(g, CyclicLiftParams{lift_len});
      out << encode_json(cc) << '\n';
    } else if (pool->parsed()) {
      const auto g = load_graph(pool_input, in);
      MogParams params = fine_mog_params(avg_spd_lens(g));
      if (!pool_eta.empty()) params.eta = parse_rational(pool_eta);
      if (!pool_eps.empty()) params.eps = parse_rational(pool_eps);
      out << encode_json(mog_pool(g, params)) << '\n';
    } else if (inv->parsed()) {
      const auto cc = load_complex(inv_input, in);
      const auto report = invariants_report(cc, parse_spec(inv_spec), inv_cross_k);
      if (inv_json) {
        out << report.dump() << '\n';
      } else {
        print_report(out, report);
      }
    } else if (dis->parsed()) {
      if (dis_a == "-" && dis_b == "-") throw Error(ErrorCode::BadParams, "only one input may be stdin");
      const auto a = share(load_complex(dis_a, in));
      const auto b = share(load_complex(dis_b, in));
      Engine engine = parse_engine(dis_engine);
      if (dis_rounds) set_rounds(engine.diagram, *dis_rounds);
      const auto verdict = distinguish(a, b, engine);
      if (!dis_colors) {
        out << verdict.describe() << '\n';
      } else {
        Json j;
        j["engine"] = engine.name;
        j["verdict"] = verdict.describe();
        j["distinguished"] = verdict.distinguished;
        if (verdict.step) j["step"] = Json::array({verdict.step->stage, verdict.step->round});
        if (engine.kind != EngineKind::Oracle) {
          const auto result = smcn_refine({a.get(), b.get()}, engine.diagram);
          j["left"] = fingerprint_json(result.fingerprints[0]);
          j["right"] = fingerprint_json(result.fingerprints[1]);
        }
        out << j.dump() << '\n';
      }
    } else if (vc->parsed()) {
      const auto map = cell_map_from_json(parse_json_text(slurp(vc_input, in)));
      const auto report = verify_covering(map);
      out << report.describe() << '\n';
      if (!report.ok()) return kValidation;
    } else if (ci->parsed()) {
      if (ci_inputs.size() == 1) {
        const auto map = cell_map_from_json(parse_json_text(slurp(ci_inputs[0], in)));
        const auto check = check_isomorphism(map);
        out << (check.ok ? std::string("Ok") : "Not an isomorphism: " + check.reason) << '\n';
        if (!check.ok) return kValidation;
      } else {
        const auto a = share(load_complex(ci_inputs[0], in));
        const auto b = share(load_complex(ci_inputs[1], in));
        const auto result = cc_isomorphic(a, b);
        out << to_string(result.status) << " (search nodes: " << result.search_nodes << ")\n";
      }
    } else if (gtd->parsed()) {
      TorusDatasetSpec spec;
      if (!gtd_pos.empty() && gtd_pos.size() != 3) {
        throw CLI::ValidationError("params", "expected MIN MAX COMPONENTS");
      }
      if (gtd_pos.size() == 3) {
        spec.min_nodes = gtd_pos[0];
        spec.max_nodes = gtd_pos[1];
        spec.max_components = gtd_pos[2];
      }
      if (gtd_min) spec.min_nodes = *gtd_min;
      if (gtd_max) spec.max_nodes = *gtd_max;
      if (gtd_comp) spec.max_components = *gtd_comp;
      const auto pairs = gen_torus_dataset(spec);
      {
        Sink sink(gtd_output, out);
        for (const auto& pair : pairs) sink.get() << pair_to_json(pair, !gtd_no_complexes).dump() << '\n';
      }
      err << pairs.size() << " pairs\n";
      if (gtd_expect && *gtd_expect != pairs.size()) {
        err << "expected " << *gtd_expect << " pairs; enumeration by node count:\n";
        for (const auto& [nodes, unions] : enumerate_torus_unions(spec)) {
          err << "  " << nodes << ":";
          for (const auto& u : unions) err << ' ' << Json(u).dump();
          err << '\n';
        }
        return kExpectation;
      }
    } else if (ll->parsed()) {
      std::unique_ptr<std::ifstream> file;
      std::istream* src = &in;
      if (!ll_input.empty() && ll_input != "-") {
        file = std::make_unique<std::ifstream>(ll_input);
        if (!*file) throw Error(ErrorCode::ParseError, "cannot open " + ll_input);
        src = file.get();
      }
      if (ll_len < 3) throw Error(ErrorCode::BadParams, "max cycle length must be at least 3");
      Sink sink(ll_output, out);
      const auto errors = label_lifted_graphs(*src, sink.get(), CyclicLiftParams{ll_len});
      if (errors > 0) err << errors << " malformed graph(s)\n";
    } else if (rb->parsed()) {
      std::vector<DatasetRecord> records;
      if (rb_dataset.empty() || rb_dataset == "-") {
        records = read_dataset(in);
      } else {
        std::ifstream file(rb_dataset);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open " + rb_dataset);
        records = read_dataset(file);
      }
      std::vector<Engine> engines;
      std::stringstream ss(rb_engines);
      for (std::string name; std::getline(ss, name, ',');) engines.push_back(parse_engine(name));
      std::map<std::string, std::size_t> expectations;
      if (!rb_no_expect) {
        expectations = {{"homp", 0}, {"smcn", records.size()}, {"oracle", records.size()}};
      }
      for (const auto& [name, count] : parse_expectations(rb_expect, records.size())) {
        expectations[name] = count;
      }
      const auto report = run_benchmark(records, engines, expectations);
      out << report.to_json().dump(2) << '\n';
      if (!report.ok()) {
        for (const auto& e : report.engines) {
          if (!e.meets_expectation()) {
            err << e.engine << ": separated " << e.separated << ", expected " << *e.expected << '\n';
          }
        }
        return kExpectation;
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "ccx: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "ccx: " << e.what() << '\n';
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "ccx: ParseError: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}

}  // namespace ccx::cli
