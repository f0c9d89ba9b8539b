#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ccx/covering.hpp"
#include "ccx/distinguish.hpp"
#include "ccx/generators.hpp"
#include "ccx/lifting.hpp"
#include "ccx/refinement.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

using namespace ccx;

namespace {

using Union = std::vector<std::vector<int>>;

bool homp_equal(const CombinatorialComplex& a, const CombinatorialComplex& b) {
  const auto r = homp_refine({&a, &b});
  return r.fingerprints[0] == r.fingerprints[1];
}

bool separates(const CombinatorialComplex& a, const CombinatorialComplex& b, const Engine& e) {
  return distinguish(share(a), share(b), e).distinguished;
}

std::pair<CombinatorialComplex, CombinatorialComplex> star_pair(int n, int k) {
  const auto half = triangular_lift(star_graph(n, k));
  return {triangular_lift(star_graph(n, 2 * k)), disjoint_union(half, half)};
}

std::pair<CombinatorialComplex, CombinatorialComplex> mog_pair() {
  const auto [g, h] = mog_example_pair();
  return {mog_pool(g, fine_mog_params(avg_spd_lens(g))), mog_pool(h, fine_mog_params(avg_spd_lens(h)))};
}

std::size_t total_cells(const std::vector<const CombinatorialComplex*>& ccs) {
  std::size_t n = 0;
  for (const auto* c : ccs) n += c->num_cells();
  return n;
}

}  // namespace

TEST(Homp, CoveredPairsAreIndistinguishable) {
  EXPECT_TRUE(homp_equal(torus({3, 12}), torus({6, 6})));
  EXPECT_TRUE(homp_equal(cylinder(3, 4), moebius(3, 4)));
  const auto x = triangular_lift(star_graph(2, 5));
  EXPECT_TRUE(homp_equal(x, x));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 4}, {2, 3}}) {
    const auto [a, b] = star_pair(n, k);
    EXPECT_TRUE(homp_equal(a, b)) << n << "," << k;
  }
  const auto [l, r] = mog_pair();
  EXPECT_TRUE(homp_equal(l, r));
}

TEST(Homp, CertifiedTorusUnionsAreIndistinguishable) {
  const std::vector<std::pair<Union, Union>> pairs = {
      {{{3, 6}}, {{3, 3}, {3, 3}}},
      {{{4, 9}}, {{6, 6}}},
      {{{3, 8}}, {{4, 6}}},
      {{{3, 4}, {3, 3}}, {{3, 7}}},
      {{{5, 6}}, {{3, 10}}},
  };
  for (const auto& [a, b] : pairs) {
    const auto cert = torus_union_certificate(a, b, CoverStrategy::AxisLcm);
    ASSERT_TRUE(cert.has_value());
    ASSERT_TRUE(verify_certificate(*cert).ok());
    auto build = [](const Union& u) {
      CombinatorialComplex cc = torus(u[0]);
      for (std::size_t i = 1; i < u.size(); ++i) cc = disjoint_union(cc, torus(u[i]));
      return cc;
    };
    EXPECT_TRUE(homp_equal(build(a), build(b)));
  }
}

TEST(Homp, StabilityBound) {
  const auto a = torus({3, 5});
  const auto b = moebius(3, 5);
  const auto r = homp_refine({&a, &b});
  EXPECT_LE(r.total_rounds, total_cells({&a, &b}));
  const auto c = triangular_lift(star_graph(2, 7));
  EXPECT_LE(homp_refine({&c}).total_rounds, c.num_cells());
}

TEST(Homp, FingerprintTotalsMatchSkeletonSizes) {
  const auto cc = cylinder(4, 5);
  const auto r = homp_refine({&cc});
  const auto& fp = r.fingerprints[0];
  EXPECT_EQ(fp.skeleton_sizes, cc.skeleton_sizes());
  for (std::size_t rank = 0; rank < fp.histograms.size(); ++rank) {
    std::size_t total = 0;
    for (const auto& [color, count] : fp.histograms[rank]) total += count;
    EXPECT_EQ(total, cc.skeleton_size(static_cast<Rank>(rank)));
  }
}

TEST(Homp, SeparatesDifferentDegrees) {
  EXPECT_FALSE(homp_equal(graph_complex(path_graph(4)), graph_complex(star_graph(1, 4).induced({0, 1, 2, 3}))));
  EXPECT_FALSE(homp_equal(torus({3, 3}), torus({3, 4})));
}

TEST(Scl, BinaryMarkingOnCycle) {
  const auto c4 = graph_complex(cycle_graph(4));
  const auto pc = scl_refine(c4, 0, 1, Marking::Binary);
  ASSERT_EQ(pc.rows, 4u);
  ASSERT_EQ(pc.cols, 4u);
  std::set<Color> in, out;
  for (std::size_t v = 0; v < 4; ++v) {
    for (std::size_t e = 0; e < 4; ++e) {
      const auto& edge = c4.skeleton(1)[e];
      const bool member = edge[0] == v || edge[1] == v;
      (member ? in : out).insert(pc.at(v, e));
    }
  }
  EXPECT_EQ(in.size(), 1u);
  EXPECT_EQ(out.size(), 1u);
  EXPECT_NE(*in.begin(), *out.begin());
}

TEST(Scl, Separations) {
  const auto dist01 = scl_engine(0, 1, Marking::Distance);
  EXPECT_TRUE(separates(cylinder(3, 4), moebius(3, 4), dist01));
  EXPECT_TRUE(separates(torus({3, 12}), torus({6, 6}), dist01));
  const auto [a, b] = star_pair(2, 3);
  EXPECT_TRUE(separates(a, b, scl_engine(0, 2, Marking::Distance)));
  const auto [l, r] = mog_pair();
  EXPECT_TRUE(separates(l, r, scl_engine(0, 2, Marking::Distance)));
}

TEST(Distinguish, Verdicts) {
  const auto [a, b] = star_pair(2, 3);
  const auto homp = distinguish(share(a), share(b), homp_engine());
  EXPECT_FALSE(homp.distinguished);
  EXPECT_EQ(homp.describe(), "Indistinguishable");
  const auto scl = distinguish(share(a), share(b), scl_engine(0, 2, Marking::Distance));
  ASSERT_TRUE(scl.distinguished);
  ASSERT_TRUE(scl.step.has_value());
  EXPECT_GE(scl.step->stage, 0);
  const auto t = share(torus({3, 3}));
  EXPECT_FALSE(distinguish(t, t, oracle_engine()).distinguished);
  // Different sizes separate before any round.
  const auto early = distinguish(share(torus({3, 3})), share(torus({3, 4})), homp_engine());
  EXPECT_EQ(early.step, (Step{-1, 0}));
}

TEST(Smcn, DefaultDiagram) {
  const auto d = default_smcn_diagram();
  ASSERT_EQ(d.stages.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<HompBlock>(d.stages[0]));
  const auto& scl = std::get<SclBlock>(d.stages[1]);
  EXPECT_EQ(scl.rounds, 4);
  EXPECT_EQ(scl.marking, Marking::Distance);
  EXPECT_TRUE(std::holds_alternative<PoolStage>(d.stages[2]));
  EXPECT_EQ(describe(parse_diagram("smcn:default")), describe(d));
  EXPECT_EQ(describe(parse_diagram("homp")), describe(homp_full_diagram()));
  EXPECT_EQ(describe(parse_diagram("scl:0,2,bin")), describe(scl_diagram(0, 2, Marking::Binary)));
  EXPECT_CCX_ERROR(parse_diagram("scl:0,x,dist"), ParseError);
  EXPECT_CCX_ERROR(parse_engine("ppgn"), ParseError);
}

TEST(Smcn, Errors) {
  const auto cc = torus({3, 3});
  DiagramConfig pool_first{{PoolStage{}}};
  EXPECT_CCX_ERROR(smcn_refine({&cc}, pool_first), PoolWithoutScl);
  DiagramConfig bad_rank{{SclBlock{0, 5, Marking::Binary, 1}}};
  EXPECT_CCX_ERROR(smcn_refine({&cc}, bad_rank), RankOutOfRange);
  DiagramConfig bad_spec{{HompBlock{{NeighborhoodSpec{NeighborhoodKind::Adjacency, 0, 7}}, 1}}};
  EXPECT_CCX_ERROR(smcn_refine({&cc}, bad_spec), RankOutOfRange);
}

TEST(Smcn, IdenticalInputsStayEqual) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cc = cyclic_lift(ccx::testing::random_graph(rng, 6 + trial % 4, 0.4), {18});
    const auto r = smcn_refine({&cc, &cc}, default_smcn_diagram());
    EXPECT_EQ(r.fingerprints[0], r.fingerprints[1]);
    EXPECT_FALSE(r.first_separation.has_value());
  }
}

TEST(Refinement, CanonicalUnderRelabeling) {
  std::mt19937 rng(77);
  for (const auto& cc : {moebius(3, 5), triangular_lift(star_graph(2, 5)), torus({3, 4})}) {
    const auto shuffled = ccx::testing::relabel(cc, ccx::testing::random_permutation(rng, cc.num_nodes()));
    EXPECT_EQ(homp_refine({&cc}).fingerprints[0], homp_refine({&shuffled}).fingerprints[0]);
    EXPECT_EQ(smcn_refine({&cc}, default_smcn_diagram()).fingerprints[0],
              smcn_refine({&shuffled}, default_smcn_diagram()).fingerprints[0]);
  }
}

TEST(Refinement, SmcnRefinesHomp) {
  std::mt19937 rng(123);
  int separated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = cyclic_lift(ccx::testing::random_graph(rng, 7, 0.4), {18});
    const auto b = cyclic_lift(ccx::testing::random_graph(rng, 7, 0.4), {18});
    if (!separates(a, b, homp_engine())) continue;
    ++separated;
    EXPECT_TRUE(separates(a, b, smcn_engine())) << "trial " << trial;
  }
  EXPECT_GT(separated, 10);
}
