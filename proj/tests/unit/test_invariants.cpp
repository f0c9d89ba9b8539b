#include <gtest/gtest.h>

#include <random>

#include "ccx/generators.hpp"
#include "ccx/invariants.hpp"
#include "ccx/lifting.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

using namespace ccx;

namespace {

const NeighborhoodSpec A01{NeighborhoodKind::Adjacency, 0, 1};

ExtendedDistance fin(std::uint64_t v) { return ExtendedDistance(v); }

// Plain dense elimination over GF(2), one bool per entry.
std::size_t dense_rank(std::vector<std::vector<bool>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][c]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

long long alternating(const std::vector<std::size_t>& v) {
  long long s = 0;
  for (std::size_t r = 0; r < v.size(); ++r) s += (r % 2 ? -1 : 1) * static_cast<long long>(v[r]);
  return s;
}

std::vector<CombinatorialComplex> standard_families() {
  std::vector<CombinatorialComplex> out;
  out.push_back(torus({3, 3}));
  out.push_back(torus({4, 5}));
  out.push_back(disjoint_union(torus({3, 3}), torus({3, 4})));
  out.push_back(torus({3, 3, 4}));
  out.push_back(cylinder(3, 4));
  out.push_back(moebius(3, 4));
  out.push_back(moebius(4, 5));
  out.push_back(triangular_lift(star_graph(2, 6)));
  const auto star = triangular_lift(star_graph(2, 3));
  out.push_back(disjoint_union(star, star));
  const auto [g, h] = mog_example_pair();
  out.push_back(mog_pool(g, fine_mog_params(avg_spd_lens(g))));
  out.push_back(mog_pool(h, fine_mog_params(avg_spd_lens(h))));
  return out;
}

}  // namespace

TEST(ExtendedDistance, Ordering) {
  EXPECT_LT(fin(3), ExtendedDistance::infinite());
  EXPECT_LT(fin(2), fin(3));
  EXPECT_EQ(ExtendedDistance::infinite().to_string(), "inf");
  EXPECT_FALSE(ExtendedDistance::infinite().is_finite());
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(torus({3, 3})).count, 1u);
  EXPECT_EQ(connected_components(disjoint_union(torus({3, 3}), torus({3, 4}))).count, 2u);
  const auto star = triangular_lift(star_graph(2, 3));
  const auto two = disjoint_union(star, star);
  const auto comps = connected_components(two);
  EXPECT_EQ(comps.count, 2u);
  EXPECT_EQ(comps.label.size(), two.num_cells());
}

TEST(ShortestPaths, Examples) {
  const auto t = torus({3, 3});
  const auto d = shortest_paths(t, A01);
  EXPECT_EQ(d.at(flatten({3, 3}, {0, 0}), flatten({3, 3}, {1, 1})), fin(2));
  EXPECT_EQ(d.at(4, 4), fin(0));

  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = ccx::testing::random_graph(rng, 6 + trial, 0.3);
    const auto table = shortest_paths(graph_complex(g), A01);
    const auto adj = g.adjacency();
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      const auto bfs = bfs_distances(adj, s);
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const auto want = bfs[v] == kUnreachable ? ExtendedDistance::infinite() : fin(bfs[v]);
        EXPECT_EQ(table.at(s, v), want);
        EXPECT_EQ(table.at(s, v), table.at(v, s));
      }
    }
  }
  const auto two = disjoint_union(t, t);
  EXPECT_EQ(shortest_paths(two, A01).at(0, 9), ExtendedDistance::infinite());
  EXPECT_CCX_ERROR(shortest_paths(t, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, 0, 1}), WrongKind);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(torus({4, 4, 32}), A01), fin(20));
  EXPECT_EQ(diameter(torus({8, 8, 8}), A01), fin(12));
  EXPECT_EQ(diameter(CombinatorialComplex::build({{{0, 1}, 1}}, 2), A01), fin(1));
  EXPECT_EQ(diameter(disjoint_union(torus({3, 3}), torus({3, 3})), A01), ExtendedDistance::infinite());
  EXPECT_CCX_ERROR(diameter(graph_complex(cycle_graph(4)), NeighborhoodSpec{NeighborhoodKind::Adjacency, 2, 2}),
                   EmptySkeleton);
}

TEST(Diameter, TorusFormula) {
  for (int a = 3; a <= 8; ++a) {
    EXPECT_EQ(diameter(torus({a}), A01), fin(a / 2));
    for (int b = 3; b <= 8; ++b) {
      EXPECT_EQ(diameter(torus({a, b}), A01), fin(a / 2 + b / 2)) << a << "x" << b;
    }
  }
  EXPECT_EQ(diameter(torus({3, 5, 7}), A01), fin(1 + 2 + 3));
  EXPECT_EQ(diameter(torus({6, 4, 8}), A01), fin(3 + 2 + 4));
}

TEST(CrossDiameter, Examples) {
  const auto [g, h] = mog_example_pair();
  EXPECT_EQ(cross_diameter(mog_pool(g, fine_mog_params(avg_spd_lens(g))), A01, 2), fin(3));
  EXPECT_EQ(cross_diameter(mog_pool(h, fine_mog_params(avg_spd_lens(h))), A01, 2), fin(2));
  const auto star = triangular_lift(star_graph(2, 3));
  EXPECT_EQ(cross_diameter(disjoint_union(star, star), A01, 2), ExtendedDistance::infinite());
  EXPECT_TRUE(cross_diameter(triangular_lift(star_graph(2, 6)), A01, 2).is_finite());

  const auto odd = CombinatorialComplex::build({{{0, 1}, 1}, {{1, 2, 3}, 2}}, 4);
  EXPECT_CCX_ERROR(cross_diameter(odd, NeighborhoodSpec{NeighborhoodKind::Adjacency, 1, 2}, 2),
                   CellWithoutFaces);
  EXPECT_CCX_ERROR(cross_diameter(graph_complex(cycle_graph(4)), A01, 2), EmptySkeleton);
}

TEST(CrossDiameter, FiniteIffConnected) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = ccx::testing::random_graph(rng, 4 + trial % 7, 0.3);
    const auto cc = cyclic_lift(g, {18});
    if (cc.skeleton_size(2) == 0) continue;
    ++checked;
    // Every node must reach a vertex of every 2-cell.
    const auto labels = component_labels(g);
    const bool connected = std::all_of(labels.begin(), labels.end(), [](auto l) { return l == 0; });
    EXPECT_EQ(cross_diameter(cc, A01, 2).is_finite(), connected) << "trial " << trial;
  }
  EXPECT_GT(checked, 20);
}

TEST(Euler, Examples) {
  for (auto p : std::vector<std::vector<int>>{{3, 3}, {3, 4}, {4, 5}}) EXPECT_EQ(euler_characteristic(torus(p)), 0);
  EXPECT_EQ(euler_characteristic(cylinder(3, 4)), 0);
  EXPECT_EQ(euler_characteristic(ccx::testing::filled_triangle()), 1);
}

TEST(Boundary, Matrices) {
  const auto t = boundary_matrices(torus({3, 3}));
  ASSERT_EQ(t.d.size(), 2u);
  EXPECT_TRUE(t.valid);
  EXPECT_EQ(t.d[1].rows(), 9u);
  EXPECT_EQ(t.d[1].cols(), 18u);
  for (const auto& row : t.d[1].dense()) EXPECT_EQ(std::count(row.begin(), row.end(), 1), 4);

  const auto g = star_graph(2, 4);
  const auto cc = graph_complex(g);
  const auto inc = neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, 0, 1});
  EXPECT_EQ(boundary_matrices(cc).d[0], inc.transpose());
  EXPECT_TRUE(boundary_matrices(ccx::testing::filled_triangle()).valid);

  const auto broken = CombinatorialComplex::build({{{0, 1}, 1}, {{1, 2}, 1}, {{0, 1, 2}, 2}}, 3);
  const auto bd = boundary_matrices(broken);
  EXPECT_FALSE(bd.valid);
  ASSERT_TRUE(bd.violation.has_value());
  EXPECT_EQ(std::get<0>(*bd.violation), 1);
  EXPECT_CCX_ERROR(betti_gf2(broken), NotAChainComplex);
}

TEST(Gf2Rank, MatchesDenseElimination) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 70;
    const std::size_t cols = 1 + rng() % 70;
    std::vector<SparseBinaryMatrix::Entry> entries;
    std::vector<std::vector<bool>> dense(rows, std::vector<bool>(cols, false));
    const unsigned density = 1 + rng() % 5;
    for (std::uint32_t r = 0; r < rows; ++r) {
      for (std::uint32_t c = 0; c < cols; ++c) {
        if (rng() % 10 < density) {
          entries.emplace_back(r, c);
          dense[r][c] = true;
        }
      }
    }
    EXPECT_EQ(gf2_rank(SparseBinaryMatrix(rows, cols, entries)), dense_rank(dense)) << "trial " << trial;
  }
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_gf2(torus({3, 3})), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(betti_gf2(disjoint_union(torus({3, 3}), torus({3, 4}))), (std::vector<std::size_t>{2, 4, 2}));
  EXPECT_EQ(betti_gf2(cylinder(3, 4)), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(betti_gf2(moebius(3, 4)), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(betti_gf2(torus({3, 3, 3})), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(betti_gf2(graph_complex(cycle_graph(5))), (std::vector<std::size_t>{1, 1}));
}

TEST(Betti, EulerPoincareAndComponents) {
  for (const auto& cc : standard_families()) {
    if (!boundary_matrices(cc).valid) continue;
    const auto b = betti_gf2(cc);
    EXPECT_EQ(alternating(b), euler_characteristic(cc));
    EXPECT_EQ(alternating(cc.skeleton_sizes()), euler_characteristic(cc));
    EXPECT_EQ(b[0], connected_components(cc).count);
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = ccx::testing::random_graph(rng, 3 + trial % 8, 0.35);
    for (const auto& cc : {cyclic_lift(g, {18}), triangular_lift(g)}) {
      ASSERT_TRUE(boundary_matrices(cc).valid);
      EXPECT_EQ(alternating(betti_gf2(cc)), euler_characteristic(cc)) << "trial " << trial;
    }
  }
}

TEST(Orientability, Strips) {
  for (int h = 3; h <= 5; ++h) {
    for (int p = 3; p <= 5; ++p) {
      EXPECT_EQ(orientability_2d(cylinder(h, p)).verdict, Orientability::Orientable);
      const auto m = orientability_2d(moebius(h, p));
      ASSERT_EQ(m.verdict, Orientability::NonOrientable);
      ASSERT_GE(m.witness_faces.size(), 2u);
      EXPECT_EQ(m.witness_faces.front(), m.witness_faces.back());
    }
  }
  EXPECT_EQ(orientability_2d(torus({3, 3})).verdict, Orientability::Orientable);
  EXPECT_EQ(orientability_2d(torus({4, 7})).verdict, Orientability::Orientable);
}

TEST(Orientability, NotASurfaceAndErrors) {
  const auto [g, h] = mog_example_pair();
  const auto pooled = orientability_2d(mog_pool(g, fine_mog_params(avg_spd_lens(g))));
  EXPECT_EQ(pooled.verdict, Orientability::NotASurface);
  EXPECT_TRUE(pooled.offending.has_value());
  // Three triangles on one edge.
  const auto book = triangular_lift(SimpleGraph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}));
  EXPECT_EQ(orientability_2d(book).verdict, Orientability::NotASurface);
  EXPECT_CCX_ERROR(orientability_2d(graph_complex(cycle_graph(4))), DimensionTooLow);
}

TEST(Orientability, InvariantUnderRelabeling) {
  std::mt19937 rng(12);
  for (const auto& cc : {cylinder(3, 5), moebius(4, 3), torus({3, 4}), moebius(5, 5)}) {
    const auto base = orientability_2d(cc).verdict;
    for (int trial = 0; trial < 5; ++trial) {
      const auto shuffled = ccx::testing::relabel(cc, ccx::testing::random_permutation(rng, cc.num_nodes()));
      EXPECT_EQ(orientability_2d(shuffled).verdict, base);
    }
  }
}

TEST(BoundaryEdges, Strips) {
  EXPECT_EQ(cycle_lengths(boundary_edge_graph(cylinder(3, 4)).graph), (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(cycle_lengths(boundary_edge_graph(moebius(3, 4)).graph), (std::vector<std::size_t>{8}));
  const auto closed = boundary_edge_graph(torus({3, 3}));
  EXPECT_EQ(closed.graph.num_nodes(), 0u);
  EXPECT_EQ(cycle_lengths(closed.graph), (std::vector<std::size_t>{}));
  EXPECT_FALSE(cycle_lengths(path_graph(3)).has_value());
  EXPECT_CCX_ERROR(boundary_edge_graph(graph_complex(cycle_graph(4))), DimensionTooLow);
}
