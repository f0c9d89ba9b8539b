#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ccx/complex.hpp"
#include "ccx/graph.hpp"

namespace ccx {

using Json = nlohmann::ordered_json;

// {"dimension": l, "num_nodes": n, "cells": [[rank-0 cells], ..., [rank-l cells]]}
Json to_json(const CombinatorialComplex& cc);
// Also accepts a "cells" array without the rank-0 entry (length l).
// Throws ParseError on malformed structure, plus every build() error.
CombinatorialComplex complex_from_json(const Json& j);

std::string encode_json(const CombinatorialComplex& cc);
// ParseError messages carry the line and column of the offending byte.
CombinatorialComplex decode_json(std::string_view text);

// Parses text into a Json value; ParseError with line/column on failure.
Json parse_json_text(std::string_view text);

// Edge-list format: "n m" then m lines "u v".
void write_edge_list(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);

// Reads several edge lists stored back to back, one block at a time.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(in) {}

  // nullopt at end of input. A malformed block throws ParseError naming the line; its
  // lines are consumed first, so reading can continue with the next block.
  std::optional<SimpleGraph> next();

 private:
  bool next_line(std::string& line);

  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::string read_file(const std::string& path);

}  // namespace ccx
