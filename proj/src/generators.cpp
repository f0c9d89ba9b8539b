#include "ccx/generators.hpp"

#include <string>

#include "ccx/error.hpp"

namespace ccx {
namespace {

void check_periods(const std::vector<int>& periods) {
  if (periods.empty()) throw Error(ErrorCode::BadParams, "torus needs at least one period");
  for (int p : periods) {
    if (p < 3) throw Error(ErrorCode::PeriodTooSmall, "period " + std::to_string(p) + " < 3");
  }
}

// Builds a 2-dim strip from a node map on [h] x Z; cells whose height range leaves [h]
// are skipped.
template <typename NodeOf>
CombinatorialComplex strip(int h, int p, NodeOf node_of) {
  if (h < 3 || p < 3) {
    throw Error(ErrorCode::PeriodTooSmall,
                "strip needs h, p >= 3, got h=" + std::to_string(h) + " p=" + std::to_string(p));
  }
  std::vector<RawCell> cells;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int k1 = 0; k1 <= 1; ++k1) {
        if (i + k1 >= h) continue;
        for (int k2 = 0; k2 <= 1; ++k2) {
          RawCell cell;
          cell.rank = k1 + k2;
          for (int a = 0; a <= k1; ++a) {
            for (int b = 0; b <= k2; ++b) cell.vertices.push_back(node_of(i + a, j + b));
          }
          cells.push_back(std::move(cell));
        }
      }
    }
  }
  return CombinatorialComplex::build(cells, static_cast<std::size_t>(h) * p);
}

}  // namespace

NodeId flatten(const std::vector<int>& periods, const std::vector<int>& coords) {
  NodeId id = 0;
  for (std::size_t d = 0; d < periods.size(); ++d) {
    id = id * periods[d] + static_cast<NodeId>(((coords[d] % periods[d]) + periods[d]) % periods[d]);
  }
  return id;
}

std::vector<int> unflatten(const std::vector<int>& periods, NodeId node) {
  std::vector<int> coords(periods.size());
  for (std::size_t d = periods.size(); d-- > 0;) {
    coords[d] = static_cast<int>(node % periods[d]);
    node /= periods[d];
  }
  return coords;
}

CombinatorialComplex torus(const std::vector<int>& periods) {
  check_periods(periods);
  const std::size_t dim = periods.size();
  std::size_t n = 1;
  for (int p : periods) n *= p;
  std::vector<RawCell> cells;
  for (NodeId s = 0; s < n; ++s) {
    const auto base = unflatten(periods, s);
    for (unsigned k = 1; k < (1u << dim); ++k) {
      RawCell cell;
      cell.rank = __builtin_popcount(k);
      // Enumerate k' <= k as the submasks of k.
      for (unsigned sub = k;; sub = (sub - 1) & k) {
        auto coords = base;
        for (std::size_t d = 0; d < dim; ++d) coords[d] += (sub >> d) & 1u;
        cell.vertices.push_back(flatten(periods, coords));
        if (sub == 0) break;
      }
      cells.push_back(std::move(cell));
    }
  }
  return CombinatorialComplex::build(cells, n);
}

CombinatorialComplex cylinder(int h, int p) {
  return strip(h, p, [p](int i, int j) { return static_cast<NodeId>(i * p + j % p); });
}

CombinatorialComplex moebius(int h, int p) {
  return strip(h, p, [h, p](int i, int j) {
    const int t = j % (2 * p);
    if (t < p) return static_cast<NodeId>(i * p + t);
    return static_cast<NodeId>((h - 1 - i) * p + (t - p));
  });
}

SimpleGraph star_graph(int n, int k) {
  if (n < 1 || k < 3 || n * k <= 3) {
    throw Error(ErrorCode::BadParams,
                "star graph needs n >= 1, k >= 3, nk > 3; got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  const int nk = n * k;
  std::vector<SimpleGraph::Edge> edges;
  for (int j = 0; j < nk; ++j) {
    edges.emplace_back(static_cast<NodeId>(j), static_cast<NodeId>((j + 1) % nk));
  }
  for (int i = 1; i <= k; ++i) {
    const auto b = static_cast<NodeId>(nk + i - 1);
    edges.emplace_back(b, static_cast<NodeId>((n * i - 1) % nk));
    edges.emplace_back(b, static_cast<NodeId>((n * i) % nk));
  }
  return SimpleGraph(static_cast<std::size_t>(nk + k), std::move(edges));
}

std::pair<SimpleGraph, SimpleGraph> mog_example_pair() {
  // G: triangles s1 s2 s3 and s4 s5 s6 joined by the bridge s3-s4.
  SimpleGraph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  // G': hexagon s1 s2 s4 s6 s5 s3 with the chord s3-s4.
  SimpleGraph h(6, {{0, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {2, 0}, {2, 3}});
  return {std::move(g), std::move(h)};
}

}  // namespace ccx
