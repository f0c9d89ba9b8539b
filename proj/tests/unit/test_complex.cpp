#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ccx/complex.hpp"
#include "ccx/generators.hpp"
#include "ccx/neighborhood.hpp"
#include "ccx/serialize.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

using namespace ccx;
using ccx::testing::square_triangles_complex;
using ccx::testing::bridged_complex;
using ccx::testing::filled_triangle;

namespace {

const NeighborhoodSpec A01{NeighborhoodKind::Adjacency, 0, 1};
const NeighborhoodSpec B01{NeighborhoodKind::IncidenceUp, 0, 1};

Cell cell(std::vector<NodeId> v, Rank r) { return Cell{std::move(v), r}; }

bool has(const std::vector<Cell>& cells, const Cell& c) {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

}  // namespace

TEST(Build, SingleEdge) {
  const auto cc = CombinatorialComplex::build({{{0, 1}, 1}}, 2);
  EXPECT_EQ(cc.dimension(), 1);
  EXPECT_EQ(cc.skeleton(0), (std::vector<std::vector<NodeId>>{{0}, {1}}));
  EXPECT_EQ(cc.skeleton(1), (std::vector<std::vector<NodeId>>{{0, 1}}));
}

TEST(Build, FilledTriangle) {
  const auto cc = filled_triangle();
  EXPECT_EQ(cc.dimension(), 2);
  EXPECT_EQ(cc.skeleton_sizes(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(Build, Errors) {
  EXPECT_CCX_ERROR(CombinatorialComplex::build({{{0, 1}, 2}, {{0, 1, 2}, 1}}, 3), RankViolation);
  EXPECT_CCX_ERROR(CombinatorialComplex::build({{{0, 1}, 1}, {{1, 0}, 1}}, 2), DuplicateCell);
  EXPECT_CCX_ERROR(CombinatorialComplex::build({{{}, 1}}, 2), EmptyCell);
  EXPECT_CCX_ERROR(CombinatorialComplex::build({{{0, 2}, 1}}, 2), OutOfRangeNode);
}

TEST(Build, UnsortedInputIsCanonicalized) {
  const auto cc = CombinatorialComplex::build({{{2, 0, 1}, 2}, {{1, 0}, 1}}, 3);
  EXPECT_EQ(cc.skeleton(2)[0], (std::vector<NodeId>{0, 1, 2}));
  EXPECT_TRUE(cc.find(cell({0, 1}, 1)).has_value());
  EXPECT_FALSE(cc.find(cell({1, 2}, 1)).has_value());
}

TEST(Build, SameVertexSetAtTwoRanks) {
  const auto cc = CombinatorialComplex::build({{{0, 1}, 1}, {{0, 1}, 2}}, 2);
  EXPECT_EQ(cc.skeleton_sizes(), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(Build, EmptyIntermediateSkeleton) {
  const auto cc = CombinatorialComplex::build({{{0, 1, 2}, 2}}, 3);
  EXPECT_EQ(cc.skeleton_size(1), 0u);
  const auto c = CellRef{2, 0};
  EXPECT_TRUE(neighborhood(cc, NeighborhoodSpec{NeighborhoodKind::CoAdjacency, 2, 1}, c).empty());
}

TEST(Neighborhood, TriangleExamples) {
  const auto cc = filled_triangle();
  EXPECT_EQ(neighborhood(cc, A01, cell({0}, 0)), (std::vector<Cell>{cell({1}, 0), cell({2}, 0)}));
  EXPECT_EQ(neighborhood(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, 1, 2}, cell({0, 1}, 1)),
            (std::vector<Cell>{cell({0, 1, 2}, 2)}));
  // Cells of another rank have empty neighborhoods.
  EXPECT_TRUE(neighborhood(cc, A01, cell({0, 1}, 1)).empty());
  EXPECT_CCX_ERROR(neighborhood(cc, A01, cell({0, 1}, 2)), UnknownCell);
}

TEST(Neighborhood, SquareTrianglesRelations) {
  enum { A, B, C, D, E, F, G, H };
  const auto cc = square_triangles_complex();
  auto N = [&](const char* spec, const Cell& x) { return neighborhood(cc, parse_spec(spec), x); };
  EXPECT_TRUE(has(N("A:0,1", cell({B}, 0)), cell({A}, 0)));
  EXPECT_FALSE(has(N("A:0,1", cell({D}, 0)), cell({A}, 0)));
  EXPECT_TRUE(has(N("A:0,2", cell({D}, 0)), cell({A}, 0)));
  EXPECT_TRUE(has(N("coA:1,0", cell({A, C}, 1)), cell({C, D}, 1)));
  EXPECT_FALSE(has(N("coA:1,0", cell({A, B}, 1)), cell({C, D}, 1)));
  EXPECT_TRUE(has(N("A:1,2", cell({A, B}, 1)), cell({C, D}, 1)));
  EXPECT_TRUE(has(N("coA:2,0", cell({E, F, H}, 2)), cell({C, D, E}, 2)));
  EXPECT_FALSE(has(N("coA:2,1", cell({E, F, H}, 2)), cell({C, D, E}, 2)));
  EXPECT_TRUE(has(N("coA:2,1", cell({C, D, E}, 2)), cell({A, B, C, D}, 2)));
  EXPECT_TRUE(has(N("B:0,1", cell({D}, 0)), cell({B, D}, 1)));
  EXPECT_TRUE(has(N("B:0,2", cell({G}, 0)), cell({F, G, H}, 2)));
  EXPECT_TRUE(has(N("BT:1,0", cell({B, D}, 1)), cell({B}, 0)));
  EXPECT_FALSE(has(N("BT:1,0", cell({C, D}, 1)), cell({B}, 0)));
  EXPECT_TRUE(has(N("BT:2,0", cell({A, B, C, D}, 2)), cell({B}, 0)));
  EXPECT_FALSE(has(N("BT:2,0", cell({C, D, E}, 2)), cell({B}, 0)));
}

TEST(Neighborhood, SpecParsing) {
  for (const char* text : {"A:0,1", "coA:2,1", "B:0,2", "BT:1,0"}) {
    EXPECT_EQ(to_string(parse_spec(text)), text);
  }
  EXPECT_CCX_ERROR(parse_spec("X:0,1"), ParseError);
  EXPECT_CCX_ERROR(parse_spec("A:0"), ParseError);
  EXPECT_EQ(natural_specs(2).size(), 4u * 9u);
}

TEST(Neighborhood, MatchesDefinitionOnRandomComplexes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cc = ccx::testing::random_complex(rng, 3 + trial % 6, 1 + trial % 3);
    for (const auto& spec : natural_specs(cc.dimension())) {
      for (Rank r = 0; r <= cc.dimension(); ++r) {
        for (CellIndex i = 0; i < cc.skeleton_size(r); ++i) {
          const CellRef x{r, i};
          ASSERT_EQ(neighborhood(cc, spec, x), ccx::testing::naive_neighborhood(cc, spec, x))
              << to_string(spec) << " trial " << trial;
        }
      }
    }
  }
}

TEST(Neighborhood, AdjacencyIsSymmetricAndIncidenceTransposes) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cc = ccx::testing::random_complex(rng, 4 + trial % 5, 1 + trial % 3);
    const int dim = cc.dimension();
    for (Rank r1 = 0; r1 <= dim; ++r1) {
      for (Rank r2 = 0; r2 <= dim; ++r2) {
        for (auto kind : {NeighborhoodKind::Adjacency, NeighborhoodKind::CoAdjacency}) {
          const auto m = neighborhood_matrix(cc, NeighborhoodSpec{kind, r1, r2});
          EXPECT_EQ(m, m.transpose());
          for (std::size_t i = 0; i < m.rows(); ++i) {
            EXPECT_FALSE(m.at(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)));
          }
        }
        const auto up = neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceUp, r1, r2});
        const auto down = neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::IncidenceDown, r2, r1});
        EXPECT_EQ(up.transpose(), down);
      }
    }
  }
}

TEST(Neighborhood, GraphMatrices) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = ccx::testing::random_graph(rng, 2 + trial % 8, 0.4);
    const auto cc = graph_complex(g);
    const auto adj = neighborhood_matrix(cc, A01);
    const auto inc = neighborhood_matrix(cc, B01);
    ASSERT_EQ(adj.rows(), g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_EQ(adj.at(u, v), g.has_edge(u, v));
    }
    if (g.num_edges() == 0) continue;
    ASSERT_EQ(inc.cols(), g.num_edges());
    for (std::uint32_t e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.edges()[e];
      for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_EQ(inc.at(v, e), v == a || v == b);
    }
    EXPECT_EQ(augmented_hasse_graph(cc, A01), g);
  }
}

TEST(Neighborhood, EmptyTargetSkeletonGivesZeroMatrix) {
  const auto cc = graph_complex(cycle_graph(5));
  const auto m = neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::Adjacency, 0, 2});
  EXPECT_EQ(m.rows(), 5u);
  EXPECT_EQ(m.nnz(), 0u);
  EXPECT_CCX_ERROR(neighborhood_matrix(cc, NeighborhoodSpec{NeighborhoodKind::Adjacency, -1, 0}),
                   RankOutOfRange);
}

TEST(Neighborhood, MultiplyGf2) {
  const SparseBinaryMatrix a(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  const SparseBinaryMatrix b(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  // Row 0: e0+e1 -> (1,0)+(1,1) = (0,1). Row 1: e1+e2 -> (1,1)+(0,1) = (1,0).
  EXPECT_EQ(a.multiply_gf2(b), SparseBinaryMatrix(2, 2, {{0, 1}, {1, 0}}));
}

TEST(AugmentedHasse, BridgedCoAdjacency) {
  const auto cc = bridged_complex();
  const auto h = augmented_hasse_graph(cc, NeighborhoodSpec{NeighborhoodKind::CoAdjacency, 2, 1});
  EXPECT_EQ(h.num_nodes(), 4u);
  EXPECT_EQ(h.num_edges(), 2u);
  for (const auto& row : h.adjacency()) EXPECT_EQ(row.size(), 1u);
}

TEST(AugmentedHasse, TorusIsFourRegular) {
  const auto h = augmented_hasse_graph(torus({3, 3}), A01);
  EXPECT_EQ(h.num_nodes(), 9u);
  for (const auto& row : h.adjacency()) EXPECT_EQ(row.size(), 4u);
  EXPECT_CCX_ERROR(augmented_hasse_graph(torus({3, 3}), B01), WrongKind);
}

TEST(HasseGraph, Examples) {
  const auto edge = hasse_graph(CombinatorialComplex::build({{{0, 1}, 1}}, 2));
  EXPECT_EQ(edge.graph, path_graph(3).induced({0, 2, 1}));
  const auto tri = hasse_graph(filled_triangle());
  EXPECT_EQ(tri.graph.num_nodes(), 7u);
  EXPECT_EQ(tri.graph.num_edges(), 9u);
  EXPECT_EQ(tri.ranks, (std::vector<Rank>{0, 0, 0, 1, 1, 1, 2}));
  EXPECT_EQ(hasse_graph(torus({3, 3})).graph.num_nodes(), 36u);
}

TEST(DisjointUnion, Examples) {
  const auto t = torus({3, 3});
  const auto point = CombinatorialComplex::build({}, 1);
  EXPECT_EQ(disjoint_union(t, point).num_nodes(), 10u);
  EXPECT_EQ(disjoint_union(t, t).num_nodes(), 18u);
  EXPECT_EQ(disjoint_union(t, torus({3, 4})).skeleton_sizes(), (std::vector<std::size_t>{21, 42, 21}));
}

TEST(DisjointUnion, SizesAddAndAssociative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = ccx::testing::random_complex(rng, 3 + trial % 4, 1 + trial % 3);
    const auto b = ccx::testing::random_complex(rng, 4, 2);
    const auto c = ccx::testing::random_complex(rng, 5, 1);
    const auto left = disjoint_union(disjoint_union(a, b), c);
    const auto right = disjoint_union(a, disjoint_union(b, c));
    EXPECT_EQ(left, right);
    for (Rank r = 0; r <= left.dimension(); ++r) {
      EXPECT_EQ(left.skeleton_size(r), a.skeleton_size(r) + b.skeleton_size(r) + c.skeleton_size(r));
    }
  }
}

TEST(Json, SingleEdgeEncoding) {
  const auto cc = CombinatorialComplex::build({{{0, 1}, 1}}, 2);
  EXPECT_EQ(encode_json(cc), R"({"dimension":1,"num_nodes":2,"cells":[[[0],[1]],[[0,1]]]})");
}

TEST(Json, RoundTrip) {
  EXPECT_EQ(decode_json(encode_json(torus({3, 3}))), torus({3, 3}));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto cc = ccx::testing::random_complex(rng, 2 + trial % 7, 1 + trial % 3);
    const auto back = decode_json(encode_json(cc));
    EXPECT_EQ(back, cc);
    EXPECT_EQ(encode_json(back), encode_json(cc));
  }
}

TEST(Json, RankZeroMayBeOmitted) {
  const auto cc = decode_json(R"({"dimension":1,"num_nodes":3,"cells":[[[0,1],[1,2]]]})");
  EXPECT_EQ(cc.skeleton_sizes(), (std::vector<std::size_t>{3, 2}));
}

TEST(Json, Errors) {
  EXPECT_CCX_ERROR(decode_json(R"({"dimension":2,"num_nodes":3,"cells":[[[0],[1],[2]],[[0,1,2]],[[0,1]]]})"),
                   RankViolation);
  try {
    decode_json("{\"dimension\": 1,\n  \"num_nodes\": 2,\n  \"cells\": [[[0], [1]], [[0, 1]]\n}");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  EXPECT_CCX_ERROR(decode_json(R"({"dimension":1,"num_nodes":2})"), ParseError);
  EXPECT_CCX_ERROR(decode_json(R"({"dimension":1,"num_nodes":2,"cells":[[[0,"x"]]]})"), ParseError);
  EXPECT_CCX_ERROR(decode_json(R"({"dimension":2,"num_nodes":2,"cells":[[[0,1]],[]]})"), DimensionMismatch);
}

TEST(EdgeList, RoundTripAndStreaming) {
  std::stringstream ss;
  write_edge_list(ss, cycle_graph(5));
  EXPECT_EQ(read_edge_list(ss), cycle_graph(5));

  std::stringstream stream("3 2\n0 1\n1 2\n2 1\n0 5\n4 1\n0 3\n");
  EdgeListReader reader(stream);
  EXPECT_EQ(reader.next()->num_edges(), 2u);
  EXPECT_CCX_ERROR(reader.next(), ParseError);
  const auto last = reader.next();
  ASSERT_TRUE(last.has_value());
  EXPECT_EQ(last->num_nodes(), 4u);
  EXPECT_FALSE(reader.next().has_value());
}
