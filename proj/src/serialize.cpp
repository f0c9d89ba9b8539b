#include "ccx/serialize.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ccx/error.hpp"

namespace ccx {
namespace {

std::string line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void bad_format(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::pair<long long, long long> two_ints(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  long long a = 0;
  long long b = 0;
  std::string rest;
  if (!(ss >> a >> b) || (ss >> rest) || a < 0 || b < 0) {
    bad_format("line " + std::to_string(line_no) + ": expected two non-negative integers");
  }
  return {a, b};
}

}  // namespace

Json to_json(const CombinatorialComplex& cc) {
  Json j;
  j["dimension"] = cc.dimension();
  j["num_nodes"] = cc.num_nodes();
  Json cells = Json::array();
  for (Rank r = 0; r <= cc.dimension(); ++r) cells.push_back(cc.skeleton(r));
  j["cells"] = std::move(cells);
  return j;
}

CombinatorialComplex complex_from_json(const Json& j) {
  if (!j.is_object()) bad_format("complex must be a JSON object");
  for (const char* key : {"dimension", "num_nodes", "cells"}) {
    if (!j.contains(key)) bad_format(std::string("missing key '") + key + "'");
  }
  if (!j["dimension"].is_number_integer() || !j["num_nodes"].is_number_integer()) {
    bad_format("'dimension' and 'num_nodes' must be integers");
  }
  const auto dimension = j["dimension"].get<long long>();
  const auto num_nodes = j["num_nodes"].get<long long>();
  if (num_nodes < 0) bad_format("'num_nodes' is negative");
  const Json& cells = j["cells"];
  if (!cells.is_array()) bad_format("'cells' must be an array");
  long long first_rank = 0;
  if (static_cast<long long>(cells.size()) == dimension) {
    first_rank = 1;
  } else if (static_cast<long long>(cells.size()) != dimension + 1) {
    bad_format("'cells' must have dimension+1 entries");
  }

  std::vector<RawCell> raw;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].is_array()) bad_format("cells[" + std::to_string(i) + "] must be an array");
    for (const Json& cell : cells[i]) {
      if (!cell.is_array()) bad_format("a cell must be an array of node ids");
      RawCell rc;
      rc.rank = static_cast<Rank>(first_rank + static_cast<long long>(i));
      for (const Json& v : cell) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          bad_format("node ids must be non-negative integers");
        }
        const auto id = v.get<long long>();
        if (id >= num_nodes) {
          throw Error(ErrorCode::OutOfRangeNode, "node " + std::to_string(id) + " >= " +
                                                     std::to_string(num_nodes));
        }
        rc.vertices.push_back(static_cast<NodeId>(id));
      }
      raw.push_back(std::move(rc));
    }
  }
  auto cc = CombinatorialComplex::build(raw, static_cast<std::size_t>(num_nodes));
  if (cc.dimension() != dimension) {
    throw Error(ErrorCode::DimensionMismatch,
                "declared dimension " + std::to_string(dimension) + " but top non-empty rank is " +
                    std::to_string(cc.dimension()));
  }
  return cc;
}

std::string encode_json(const CombinatorialComplex& cc) { return to_json(cc).dump(); }

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorCode::ParseError, line_column(text, offset) + ": " + what);
  }
}

CombinatorialComplex decode_json(std::string_view text) {
  return complex_from_json(parse_json_text(text));
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

bool EdgeListReader::next_line(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::optional<SimpleGraph> EdgeListReader::next() {
  std::string line;
  if (!next_line(line)) return std::nullopt;
  const auto [n, m] = two_ints(line, line_no_);
  // All m edge lines are consumed before any validation error is raised, so the
  // next call starts on the following block.
  std::vector<std::pair<std::string, std::size_t>> body;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      bad_format("unexpected end of input: " + std::to_string(m - i) + " edge lines missing");
    }
    body.emplace_back(line, line_no_);
  }
  std::vector<SimpleGraph::Edge> edges;
  for (const auto& [text, no] : body) {
    const auto [u, v] = two_ints(text, no);
    if (u >= n || v >= n || u == v) {
      bad_format("line " + std::to_string(no) + (u == v ? ": self-loop" : ": endpoint out of range"));
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return SimpleGraph(static_cast<std::size_t>(n), std::move(edges));
}

SimpleGraph read_edge_list(std::istream& in) {
  EdgeListReader reader(in);
  auto g = reader.next();
  if (!g) bad_format("empty edge-list input");
  return *g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ccx
