#include <gtest/gtest.h>

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/error.hpp"
#include "sdualkit/spaces.hpp"

using namespace sdualkit;

namespace {

TorusTheory u1(std::vector<int> charges, std::vector<int> mult = {}) {
  TorusTheory t;
  t.rank = 1;
  for (int c : charges) t.linear_weights.push_back(LinearForm{c});
  for (int c : mult) t.multiplicative_weights.push_back(LinearForm{c});
  return t;
}

// Composition dimension of an NS5 run with open right end, computed from
// the blocks: sum 2 v_i v_{i+1} - 2 sum of interior v_i^2.
std::int64_t chain_dim(const std::vector<int> &v) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d += 2 * std::int64_t{v[i]} * v[i + 1];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) d -= 2 * std::int64_t{v[i]} * v[i];
  return d;
}

} // namespace

TEST(Compose, DimensionRule) {
  const auto m12 = ns5_block(2, 3);
  const auto m23 = ns5_block(3, 1);
  const auto c = compose(m12, m23, GroupDescriptor::gl(3));
  EXPECT_EQ(c.dim, 12 + 6 - 18);
  EXPECT_EQ(c.left_group, GroupDescriptor::gl(2));
  EXPECT_EQ(c.right_group, GroupDescriptor::gl(1));
  EXPECT_TRUE(c.possibly_singular);
}

TEST(Compose, GroupMismatch) {
  try {
    compose(ns5_block(1, 2), ns5_block(3, 1), GroupDescriptor::gl(2));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::group_mismatch);
  }
}

TEST(Compose, TrivialGroupAgainstPointIsIdentity) {
  const auto m = cotangent_of_group(GroupDescriptor::gl(2));
  EXPECT_EQ(compose(m, point_space(), GroupDescriptor::trivial()), m);
}

TEST(Compose, FreeCotangentsCollapse) {
  const auto g = GroupDescriptor::gl(2);
  const auto t = cotangent_of_group(g, true);
  const auto c = compose(t, t, g, true);
  EXPECT_EQ(c.kind, SpaceKind::cotangent_of_group);
  EXPECT_EQ(c.dim, 8);
  EXPECT_FALSE(c.possibly_singular);
}

TEST(Compose, ConvexChainsBecomeOrbitClosures) {
  // Every chain from 0 with weakly increasing jumps, up to length 4, jumps <= 3.
  int seen = 0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      for (int c = b; c <= 3; ++c) {
        const std::vector<int> v{0, a, a + b, a + b + c};
        if (v.back() == 0) continue;
        const BraneDiagram d(std::vector<Brane>(3, Brane::ns5), v);
        const auto composed = compose_all(diagram_blocks(d));
        const auto right_to_left = compose_all(diagram_blocks(d), false, true);
        EXPECT_EQ(composed.dim, chain_dim(v));
        EXPECT_EQ(right_to_left.dim, composed.dim);
        ASSERT_EQ(composed.kind, SpaceKind::orbit_closure) << composed.to_string();
        EXPECT_EQ(composed.dim, orbit_dim(*composed.partition));
        EXPECT_EQ(*composed.partition, chain_to_orbit(v).jordan_type);
        ++seen;
      }
    }
  }
  EXPECT_GT(seen, 10);
}

TEST(Compose, NonConvexChainsStayReductions) {
  const BraneDiagram d(std::vector<Brane>(2, Brane::ns5), {0, 3, 3});
  const auto composed = compose_all(diagram_blocks(d));
  EXPECT_EQ(composed.kind, SpaceKind::reduction);
  EXPECT_EQ(composed.dim, chain_dim({0, 3, 3}));
  EXPECT_EQ(composed.body(), "NS5Chain(0,3,3)");
}

TEST(SdualPair, Table) {
  const auto g3 = GroupDescriptor::gl(3);
  EXPECT_EQ(sdual_pair(point_space(g3)), group_times_slice(Partition{3}));
  EXPECT_EQ(sdual_pair(cotangent_of_group(g3)), orbit_closure_space(Partition{3}));
  EXPECT_EQ(sdual_pair(group_times_slice(Partition{2, 1})), orbit_closure_space(Partition{2, 1}));
  EXPECT_EQ(sdual_pair(group_times_slice(Partition{3})), orbit_closure_space(Partition{1, 1, 1}));
  EXPECT_EQ(sdual_pair(orbit_closure_space(Partition{3})), cotangent_of_group(g3));
  EXPECT_EQ(sdual_pair(orbit_closure_space(Partition{2, 1})), group_times_slice(Partition{2, 1}));
  const auto t2 = GroupDescriptor::torus(2);
  EXPECT_EQ(sdual_pair(point_space(t2)), cotangent_of_group(t2));
  EXPECT_EQ(sdual_pair(cotangent_of_group(t2)), point_space(t2));
}

TEST(SdualPair, InvolutionOnTableUpToNormalization) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto &lambda : partitions_of(n)) {
      for (const auto &m : {group_times_slice(lambda), orbit_closure_space(lambda)}) {
        const auto back = normalized(sdual_pair(sdual_pair(m)));
        EXPECT_EQ(back.kind, normalized(m).kind) << m.to_string();
        EXPECT_EQ(back.dim, m.dim) << m.to_string();
      }
    }
  }
}

TEST(SdualPair, Blocks) {
  const auto d = sdual_pair(ns5_block(2, 3));
  EXPECT_EQ(d.kind, SpaceKind::d5_block);
  EXPECT_FALSE(d.conjectural);
  EXPECT_TRUE(sdual_pair(d5_block(2, 3)).conjectural);
  EXPECT_FALSE(sdual_pair(d5_block(2, 2)).conjectural);
  // Back through the conjectural direction: same block, flagged.
  const auto back = sdual_pair(sdual_pair(ns5_block(1, 4)));
  EXPECT_EQ(back.kind, SpaceKind::ns5_block);
  EXPECT_EQ(back.chain, (std::vector<int>{1, 4}));
  EXPECT_EQ(back.dim, 8);
  EXPECT_TRUE(back.conjectural);
}

TEST(SdualPair, TorusTheories) {
  const auto m = cotangent_of_rep(u1({1, 1}));
  const auto d = sdual_pair(m);
  EXPECT_EQ(d.kind, SpaceKind::type_A_singularity);
  EXPECT_EQ(d.dim, 2);
  const auto back = sdual_pair(d);
  EXPECT_EQ(back.kind, SpaceKind::cotangent_of_rep);
  EXPECT_TRUE(back.conjectural);
  EXPECT_EQ(sdual_pair(cotangent_of_rep(u1({}, {1}))).kind, SpaceKind::point);
}

TEST(SdualPair, ProductsAndReductions) {
  const auto p = product_space({point_space(GroupDescriptor::gl(2)), cotangent_of_group(GroupDescriptor::gl(1))});
  const auto d = sdual_pair(p);
  ASSERT_EQ(d.kind, SpaceKind::product);
  EXPECT_EQ(d.factors[0], group_times_slice(Partition{2}));
  EXPECT_EQ(d.factors[1], orbit_closure_space(Partition{1}));
  const auto r = compose_all(diagram_blocks(BraneDiagram(std::vector<Brane>(2, Brane::ns5), {0, 3, 3})));
  try {
    sdual_pair(r);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::no_known_dual);
  }
}

TEST(Kostant, TabulatedCases) {
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    const auto pt = kostant_reduction_check(point_space(g), g);
    EXPECT_TRUE(pt.pass);
    EXPECT_EQ(pt.lhs, 2 * n);
    EXPECT_TRUE(kostant_reduction_check(cotangent_of_group(g), g).pass);
  }
  for (int r = 1; r <= 4; ++r) {
    const auto g = GroupDescriptor::torus(r);
    EXPECT_TRUE(kostant_reduction_check(point_space(g), g).pass);
    EXPECT_TRUE(kostant_reduction_check(cotangent_of_group(g), g).pass);
  }
  const auto u = GroupDescriptor::torus(1);
  EXPECT_EQ(kostant_reduction_check(cotangent_of_rep(u1({1, 2, 3})), u).lhs, 2);
  EXPECT_EQ(kostant_reduction_check(cotangent_of_rep(u1({1}, {1})), u).lhs, 0);
  EXPECT_TRUE(kostant_reduction_check(cotangent_of_rep(u1({1}, {1})), u).pass);
}

TEST(Kostant, UnknownCoulombDimension) {
  try {
    coulomb_dim(orbit_closure_space(Partition{2, 1}), GroupDescriptor::gl(3));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::unknown_coulomb_dim);
  }
  EXPECT_THROW(coulomb_dim(cotangent_of_rep(u1({1})), GroupDescriptor::torus(2)), Error);
}

TEST(Hyperspherical, Deficits) {
  EXPECT_EQ(hyperspherical_deficit(cotangent_of_rep(u1({1})), GroupDescriptor::torus(1)), 0);
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    EXPECT_EQ(hyperspherical_deficit(cotangent_of_group(g), g), std::int64_t{n} * n - n);
    EXPECT_EQ(hyperspherical_deficit(point_space(g), g), -(g.dim() + g.rank()));
  }
  EXPECT_EQ(hyperspherical_deficit(cotangent_of_group(GroupDescriptor::torus(3)), GroupDescriptor::torus(3)), 0);
}
