#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "sdualkit/brane.hpp"
#include "sdualkit/error.hpp"

using namespace sdualkit;

namespace {

BraneDiagram random_diagram(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> count(1, 12), dim(0, 9), coin(0, 1);
  BraneDiagram d;
  d.dims = {dim(rng)};
  for (int i = count(rng); i > 0; --i) {
    d.branes.push_back(coin(rng) ? Brane::ns5 : Brane::d5);
    d.dims.push_back(dim(rng));
  }
  return d;
}

Errc error_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

// Linking numbers read off by walking the diagram once from each side:
// an NS5's charge is its jump plus the D5s seen before it, a D5's is minus
// its jump plus the NS5s seen after it.
LinkingData linking_oracle(const BraneDiagram &d) {
  LinkingData l;
  int d5_seen = 0;
  for (std::size_t p = 0; p < d.branes.size(); ++p) {
    if (d.branes[p] == Brane::ns5) {
      l.ns5.push_back(d.dims[p + 1] - d.dims[p] + d5_seen);
    } else {
      ++d5_seen;
    }
  }
  int ns5_seen = 0;
  for (std::size_t p = d.branes.size(); p-- > 0;) {
    if (d.branes[p] == Brane::d5) {
      l.d5.push_back(d.dims[p] - d.dims[p + 1] + ns5_seen);
    } else {
      ++ns5_seen;
    }
  }
  std::sort(l.ns5.begin(), l.ns5.end());
  std::sort(l.d5.begin(), l.d5.end());
  return l;
}

} // namespace

TEST(Diagram, ParseAndRender) {
  const auto d = BraneDiagram::parse("0 o 1 x 1 x 1 o 0");
  EXPECT_EQ(d.branes, (std::vector<Brane>{Brane::ns5, Brane::d5, Brane::d5, Brane::ns5}));
  EXPECT_EQ(d.dims, (std::vector<int>{0, 1, 1, 1, 0}));
  EXPECT_EQ(d.to_string(), "0 o 1 x 1 x 1 o 0");
  EXPECT_EQ(BraneDiagram::parse("0o1x1x1o0"), d);
  EXPECT_EQ(BraneDiagram::parse("  3  ").to_string(), "3");
  EXPECT_TRUE(d.closed());
  EXPECT_FALSE(BraneDiagram::parse("2 x 2").closed());
}

TEST(Diagram, ParseErrors) {
  for (const char *bad : {"", "o 1", "0 o", "0 o o 0", "0 q 1", "0 o -1", "1 2"}) {
    EXPECT_EQ(error_of([&] { BraneDiagram::parse(bad); }), Errc::parse_error) << bad;
  }
}

TEST(Diagram, RoundTripRandom) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(rng);
    EXPECT_EQ(BraneDiagram::parse(d.to_string()), d);
  }
}

TEST(Diagram, ConstructorValidates) {
  EXPECT_THROW(BraneDiagram({Brane::ns5}, {0}), Error);
  EXPECT_THROW(BraneDiagram({Brane::ns5}, {0, -1}), Error);
}

TEST(HwMove, ExampleFromTheRule) {
  const auto d = BraneDiagram::parse("0 o 1 x 1 x 1 o 0");
  EXPECT_EQ(hw_move(d, 0).to_string(), "0 x 1 o 1 x 1 o 0");
  // Middle segment 1 + 0 + 1 - 1.
  EXPECT_EQ(hw_move(d, 2).to_string(), "0 o 1 x 1 o 1 x 0");
}

TEST(HwMove, Errors) {
  const auto d = BraneDiagram::parse("0 o 1 x 1 x 1 o 0");
  EXPECT_EQ(error_of([&] { hw_move(d, 1); }), Errc::same_type_pair);
  EXPECT_EQ(error_of([&] { hw_move(d, 3); }), Errc::invalid_index);
  EXPECT_EQ(error_of([&] { hw_move(d, 99); }), Errc::invalid_index);
  // 0 + 0 + 1 - 3 < 0.
  EXPECT_EQ(error_of([&] { hw_move(BraneDiagram::parse("0 o 3 x 0"), 0); }), Errc::non_admissible_move);
}

TEST(HwMove, InvolutionAndInvariants) {
  std::mt19937_64 rng(2);
  int moves = 0;
  for (int i = 0; i < 600; ++i) {
    const auto d = random_diagram(rng);
    for (std::size_t p = 0; p + 1 < d.branes.size(); ++p) {
      if (d.branes[p] == d.branes[p + 1]) continue;
      if (d.dims[p] + d.dims[p + 2] + 1 - d.dims[p + 1] < 0) continue;
      const auto moved = hw_move(d, p);
      EXPECT_EQ(hw_move(moved, p), d);
      EXPECT_EQ(linking_numbers(moved), linking_numbers(d));
      EXPECT_EQ(sdual(moved), hw_move(sdual(d), p));
      ++moves;
    }
  }
  EXPECT_GT(moves, 500);
}

TEST(Linking, MatchesOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(rng);
    EXPECT_EQ(linking_numbers(d), linking_oracle(d)) << d.to_string();
  }
  const auto l = linking_numbers(BraneDiagram::parse("0 o 1 x 1 x 1 o 0"));
  EXPECT_EQ(l.ns5, (std::vector<int>{1, 1}));
  EXPECT_EQ(l.d5, (std::vector<int>{1, 1}));
}

TEST(Sdual, InvolutionAndConcat) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_diagram(rng);
    auto b = random_diagram(rng);
    b.dims.front() = a.dims.back();
    EXPECT_EQ(sdual(sdual(a)), a);
    EXPECT_EQ(sdual(concat(a, b)), concat(sdual(a), sdual(b)));
    EXPECT_EQ(concat(a, b).size(), a.size() + b.size());
  }
  EXPECT_THROW(concat(BraneDiagram::parse("0 o 1"), BraneDiagram::parse("2 o 0")), Error);
}

TEST(Quiver, BothPatterns) {
  const QuiverData q{{1, 2}, {2, 0}};
  EXPECT_EQ(quiver_to_diagram(q).to_string(), "0 o 1 x 1 x 1 o 2 o 0");
  EXPECT_EQ(quiver_to_dual_diagram(q).to_string(), "0 x 1 o 1 o 1 x 2 x 0");
  EXPECT_EQ(sdual(quiver_to_diagram(q)), quiver_to_dual_diagram(q));
  EXPECT_THROW(quiver_to_diagram(QuiverData{{1}, {}}), Error);
  EXPECT_THROW(quiver_to_diagram(QuiverData{{-1}, {0}}), Error);
}

TEST(Quiver, U1WithFlavors) {
  for (int l = 0; l <= 6; ++l) {
    const QuiverData q{{1}, {l}};
    const auto d = quiver_to_diagram(q);
    EXPECT_EQ(d.size(), static_cast<std::size_t>(l) + 2);
    EXPECT_EQ(sdual(d), quiver_to_dual_diagram(q));
  }
}

TEST(ExpectedSpace, RecognizedShapes) {
  const auto chain = expected_space(BraneDiagram::parse("0 o 1 o 2 o 3"));
  EXPECT_EQ(chain.kind, SpaceKind::orbit_closure);
  EXPECT_EQ(*chain.partition, Partition{3});
  EXPECT_EQ(chain.dim, 6);
  EXPECT_EQ(expected_space(BraneDiagram::parse("2 x 2")).kind, SpaceKind::d5_block);
  EXPECT_EQ(expected_space(BraneDiagram::parse("1 o 2")).kind, SpaceKind::ns5_block);
  EXPECT_EQ(expected_space(BraneDiagram::parse("0 o 0 o 0")).kind, SpaceKind::point);
  EXPECT_EQ(error_of([] { expected_space(BraneDiagram::parse("0 o 1 x 1 o 0")); }), Errc::unsupported_diagram);
}

TEST(Blocks, PerBrane) {
  const auto blocks = diagram_blocks(BraneDiagram::parse("0 o 2 x 1"));
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], ns5_block(0, 2));
  EXPECT_EQ(blocks[1], d5_block(2, 1));
}
