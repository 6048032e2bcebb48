#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zcolor/generators.hpp"

namespace zcolor {
namespace {

TEST(Pretzel, TwoMinusTwoTwoMinusTwo) {
  const Diagram d = gen_pretzel({{2, -2, 2, -2}});
  EXPECT_EQ(d.crossing_count(), 8u);
  EXPECT_EQ(d.arc_count, 8u);
  EXPECT_TRUE(validate(d).ok());
  EXPECT_EQ(d.name, "P(2,-2,2,-2)");
  EXPECT_TRUE(d.claimed_minimal);
}

TEST(Pretzel, MinusTwoThreeSix) {
  const Diagram d = gen_pretzel({{-2, 3, 6}});
  EXPECT_EQ(d.crossing_count(), 11u);
  EXPECT_EQ(d.arc_count, 11u);
  EXPECT_TRUE(validate(d).ok());
}

TEST(Pretzel, SingleRegion) {
  const Diagram d = gen_pretzel({{3}});
  EXPECT_EQ(d.crossing_count(), 3u);
  EXPECT_EQ(d.arc_count, 3u);
  EXPECT_TRUE(validate(d).ok());
  EXPECT_TRUE(is_connected(d));
}

TEST(Pretzel, ZeroTwistRejected) {
  EXPECT_THROW(gen_pretzel({{2, 0, 2}}), UnsupportedInput);
  EXPECT_THROW(gen_pretzel({{}}), UnsupportedInput);
}

TEST(Pretzel, OverOnlyComponentRejected) {
  EXPECT_THROW(gen_pretzel({{1, -1}}), UnsupportedInput);
  EXPECT_THROW(gen_pretzel({{-1, 1}}), UnsupportedInput);
  EXPECT_TRUE(validate(gen_pretzel({{1, 1}})).ok());
  EXPECT_TRUE(validate(gen_pretzel({{2, -2}})).ok());
}

TEST(Pretzel, TwistRegionsChainArcs) {
  const PretzelLayout layout = pretzel_layout({{-2, 3, 6}});
  ASSERT_EQ(layout.twist_arcs.size(), 3u);
  EXPECT_EQ(layout.twist_arcs[0].size(), 4u);
  EXPECT_EQ(layout.twist_arcs[1].size(), 5u);
  EXPECT_EQ(layout.twist_arcs[2].size(), 8u);
  // Every interior region arc is the over-arc of exactly one crossing.
  std::vector<int> over_uses(layout.diagram.arc_count, 0);
  for (const auto& x : layout.diagram.crossings) ++over_uses[x.over];
  for (const auto& arcs : layout.twist_arcs)
    for (std::size_t j = 1; j + 1 < arcs.size(); ++j) EXPECT_GE(over_uses[arcs[j]], 1);
}

TEST(Pretzel, RandomSpecsAreValid) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> twist(-7, 7);
  std::uniform_int_distribution<int> regions(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    PretzelSpec spec;
    for (int i = regions(rng); i > 0; --i) {
      long t = 0;
      while (t == 0) t = twist(rng);
      spec.twists.push_back(t);
    }
    if (spec.twists == std::vector<long>{1, -1} || spec.twists == std::vector<long>{-1, 1}) continue;
    const Diagram d = gen_pretzel(spec);
    const auto total = std::accumulate(spec.twists.begin(), spec.twists.end(), 0L,
                                       [](long s, long t) { return s + std::labs(t); });
    EXPECT_TRUE(validate(d).ok()) << d.name << ": " << validate(d).summary();
    EXPECT_EQ(d.crossing_count(), static_cast<std::size_t>(total));
    EXPECT_EQ(d.arc_count, d.crossing_count()) << d.name;
    EXPECT_TRUE(is_connected(d));
  }
}

TEST(Torus, Counts) {
  const Diagram d = gen_torus({1, 4});
  EXPECT_EQ(d.crossing_count(), 12u);
  EXPECT_EQ(d.arc_count, 12u);
  EXPECT_TRUE(validate(d).ok());
  EXPECT_EQ(d.name, "T(4,4)");
  EXPECT_EQ(gen_torus({2, 4}).crossing_count(), 24u);
  EXPECT_EQ(gen_torus({-1, 4}).name, "T(-4,4)");
}

TEST(Torus, InvalidSpecs) {
  EXPECT_THROW(gen_torus({0, 4}), UnsupportedInput);
  EXPECT_THROW(gen_torus({1, 1}), UnsupportedInput);
}

TEST(Torus, SeamArcsComeFirst) {
  for (long p : {1L, -1L, 2L}) {
    const TorusLayout layout = torus_layout({p, 5});
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(layout.columns[0][i], i);
  }
}

// Strand tracing: each positive column sends position i to i + 1 and the
// last position to the first.
std::size_t traced_components(const TorusSpec& spec) {
  const std::size_t n = spec.n, columns = static_cast<std::size_t>(std::labs(spec.p)) * n;
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    std::size_t pos = start;
    do {
      seen[pos] = true;
      for (std::size_t j = 0; j < columns; ++j) pos = spec.p > 0 ? (pos + 1) % n : (pos + n - 1) % n;
    } while (pos != start);
  }
  return components;
}

TEST(Torus, ComponentCountByTracing) {
  EXPECT_EQ(traced_components({1, 4}), 4u);
  EXPECT_EQ(traced_components({1, 5}), 5u);

  // Same count from the generated arcs: join each arc to the arc its strand
  // continues into across a column.
  const TorusLayout layout = torus_layout({1, 4});
  const std::size_t n = 4, columns = layout.columns.size();
  zcolor::detail::DisjointSets strands(layout.diagram.arc_count);
  for (std::size_t j = 0; j < columns; ++j)
    for (std::size_t i = 0; i < n; ++i)
      strands.unite(layout.columns[j][i], layout.columns[(j + 1) % columns][(i + 1) % n]);
  std::size_t roots = 0;
  for (std::size_t a = 0; a < layout.diagram.arc_count; ++a) roots += strands.find(a) == a;
  EXPECT_EQ(roots, 4u);
}

TEST(Torus, RandomSpecsAreValidAndConnected) {
  for (long p : {-3L, -1L, 1L, 2L, 3L})
    for (std::size_t n = 2; n <= 7; ++n) {
      const Diagram d = gen_torus({p, n});
      EXPECT_TRUE(validate(d).ok()) << d.name;
      EXPECT_EQ(d.crossing_count(), static_cast<std::size_t>(std::labs(p)) * n * (n - 1));
      EXPECT_EQ(d.arc_count, d.crossing_count());
      EXPECT_TRUE(is_connected(d));
    }
}

TEST(TorusMatrix, SmallCases) {
  EXPECT_EQ(build_torus_matrix(2), (IntMatrix{{0, 1}, {-1, 2}}));
  EXPECT_EQ(build_torus_matrix(4), (IntMatrix{{0, 0, 0, 1}, {-1, 0, 0, 2}, {0, -1, 0, 2}, {0, 0, -1, 2}}));
  EXPECT_THROW(build_torus_matrix(1), UnsupportedInput);
}

TEST(TorusMatrix, Unimodular) {
  for (std::size_t n = 2; n <= 8; ++n)
    EXPECT_EQ(abs_value(testing::cofactor_determinant(build_torus_matrix(n))), 1) << n;
}

}  // namespace
}  // namespace zcolor
