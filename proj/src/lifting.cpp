#include "ccx/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ccx/error.hpp"

namespace ccx {
namespace {

CombinatorialComplex with_two_cells(const SimpleGraph& g,
                                    const std::vector<std::vector<NodeId>>& faces) {
  std::vector<RawCell> cells;
  for (const auto& [u, v] : g.edges()) cells.push_back({{u, v}, 1});
  for (const auto& f : faces) cells.push_back({f, 2});
  return CombinatorialComplex::build(cells, g.num_nodes());
}

long long floor_div(const Rational& q) {
  long long f = q.numerator() / q.denominator();
  if (q.numerator() < 0 && f * q.denominator() != q.numerator()) --f;
  return f;
}

long long ceil_div(const Rational& q) { return -floor_div(-q); }

}  // namespace

CombinatorialComplex triangular_lift(const SimpleGraph& g) {
  const auto adj = g.adjacency();
  std::vector<std::vector<NodeId>> triangles;
  for (const auto& [u, v] : g.edges()) {
    std::vector<NodeId> common;
    std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                          std::back_inserter(common));
    for (NodeId w : common) {
      if (w > v) triangles.push_back({u, v, w});
    }
  }
  return with_two_cells(g, triangles);
}

std::vector<std::vector<NodeId>> chordless_cycles(const SimpleGraph& g, int max_len) {
  const auto adj = g.adjacency();
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeId>> cycles;
  std::vector<NodeId> path;
  std::vector<char> on_path(n, 0);

  // Extends path s = v0, v1, ..., vk. The path stays induced: a new vertex may only touch
  // the last vertex, and touching s closes the cycle.
  auto extend = [&](auto&& self, NodeId s) -> void {
    const NodeId last = path.back();
    for (NodeId v : adj[last]) {
      if (v <= s || on_path[v]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.has_edge(v, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const bool closes = path.size() >= 2 && g.has_edge(v, s);
      if (closes) {
        if (path[1] < v && static_cast<int>(path.size()) + 1 <= max_len) {
          std::vector<NodeId> cycle = path;
          cycle.push_back(v);
          std::sort(cycle.begin(), cycle.end());
          cycles.push_back(std::move(cycle));
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      path.push_back(v);
      on_path[v] = 1;
      self(self, s);
      on_path[v] = 0;
      path.pop_back();
    }
  };

  for (NodeId s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

CombinatorialComplex cyclic_lift(const SimpleGraph& g, const CyclicLiftParams& params) {
  if (params.max_len < 3) {
    throw Error(ErrorCode::BadParams, "max cycle length " + std::to_string(params.max_len) + " < 3");
  }
  return with_two_cells(g, chordless_cycles(g, params.max_len));
}

std::vector<Rational> avg_spd_lens(const SimpleGraph& g) {
  const auto adj = g.adjacency();
  std::vector<Rational> lens(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    long long total = 0;
    long long reached = 0;
    for (std::uint32_t d : bfs_distances(adj, v)) {
      if (d == kUnreachable) continue;
      total += d;
      ++reached;
    }
    lens[v] = Rational(total, reached);
  }
  return lens;
}

MogParams fine_mog_params(const std::vector<Rational>& lens) {
  std::set<Rational> values(lens.begin(), lens.end());
  if (values.size() < 2) return MogParams{Rational(1), Rational(3, 2)};
  Rational gap = *std::next(values.begin()) - *values.begin();
  for (auto it = std::next(values.begin()); std::next(it) != values.end(); ++it) {
    gap = std::min(gap, *std::next(it) - *it);
  }
  return MogParams{gap / 3, gap / 2};
}

CombinatorialComplex mog_pool(const SimpleGraph& g, const MogParams& params) {
  if (params.eta <= 0 || params.eps <= 0) {
    throw Error(ErrorCode::DegenerateCover, "cover needs eta > 0 and eps > 0");
  }
  const auto lens = avg_spd_lens(g);
  // Interval i holds node v iff eta*i < g(v) < eta*i + eps.
  std::map<long long, std::vector<NodeId>> preimages;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const long long lo = floor_div((lens[v] - params.eps) / params.eta) + 1;
    const long long hi = ceil_div(lens[v] / params.eta) - 1;
    for (long long i = lo; i <= hi; ++i) preimages[i].push_back(v);
  }
  std::set<std::vector<NodeId>> faces;
  for (const auto& [i, nodes] : preimages) {
    const auto labels = component_labels(g.induced(nodes));
    std::map<std::size_t, std::vector<NodeId>> parts;
    for (std::size_t t = 0; t < nodes.size(); ++t) parts[labels[t]].push_back(nodes[t]);
    for (auto& [label, part] : parts) {
      if (part.size() > 1) faces.insert(part);
    }
  }
  return with_two_cells(g, {faces.begin(), faces.end()});
}

}  // namespace ccx
