#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zcolor/coloring.hpp"
#include "zcolor/mincolor.hpp"

namespace zcolor {
namespace {

using testing::trefoil;

IntVector random_coloring(const ColoringSpace& space, std::mt19937& rng, long range = 5) {
  std::uniform_int_distribution<long> coeff(-range, range);
  IntVector c(space.kernel.dim);
  for (auto& x : c) x = coeff(rng);
  return combine(space.kernel.vectors, c, space.arc_count);
}

bool is_constant(const IntVector& v) { return std::all_of(v.begin(), v.end(), [&](const Int& x) { return x == v[0]; }); }

TEST(ColoringMatrix, KinkAccumulates) {
  Diagram d;
  d.arc_count = 2;
  d.crossings = {{0, 0, 1}};
  EXPECT_EQ(coloring_matrix(d), (IntMatrix{{1, -1}}));
}

TEST(ColoringMatrix, Trefoil) {
  const IntMatrix m = coloring_matrix(trefoil());
  ASSERT_EQ(m.rows(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    IntVector row(m.row(i).begin(), m.row(i).end());
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (IntVector{-1, -1, 2}));
  }
}

TEST(ColoringMatrix, RowSumsVanish) {
  auto fixtures = testing::colorable_fixtures();
  fixtures.push_back(trefoil());
  for (const auto& d : fixtures) {
    const IntMatrix m = coloring_matrix(d);
    EXPECT_EQ(mat_vec(m, IntVector(d.arc_count, Int(1))), IntVector(m.rows(), Int(0))) << d.name;
  }
}

TEST(ColoringSpace, Dimensions) {
  EXPECT_EQ(coloring_space(trefoil()).dim(), 1u);
  EXPECT_EQ(testing::kernel_vectors_in_box(coloring_matrix(trefoil()), 3).size(), 7u);
  EXPECT_EQ(coloring_space(gen_pretzel({{2, -2, 2, -2}})).dim(), 2u);
  EXPECT_EQ(coloring_space(gen_pretzel({{-2, 3, 6}})).dim(), 2u);
}

TEST(ColoringSpace, TrivialCertificate) {
  auto fixtures = testing::colorable_fixtures();
  fixtures.push_back(trefoil());
  fixtures.push_back(free_circles(2));
  for (const auto& d : fixtures) {
    const auto space = coloring_space(d);
    EXPECT_GE(space.dim(), 1u);
    EXPECT_EQ(combine(space.kernel.vectors, space.trivial_coordinates, d.arc_count), IntVector(d.arc_count, Int(1)));
    EXPECT_EQ(space.pinned.size() + 1, space.dim());
    for (const auto& v : space.pinned) EXPECT_EQ(v[0], 0);
  }
}

TEST(ZColorable, Cases) {
  EXPECT_FALSE(is_z_colorable(trefoil()));
  EXPECT_TRUE(is_z_colorable(gen_pretzel({{2, -2, 2, -2}})));
  EXPECT_TRUE(is_z_colorable(free_circles(2)));
}

TEST(VerifyColoring, Cases) {
  EXPECT_TRUE(verify_coloring(trefoil(), {{5, 5, 5}}).ok());
  EXPECT_EQ(verify_coloring(trefoil(), {{0, 1, 2}}).failed_crossings, (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(verify_coloring(trefoil(), {{0, 1}}), ShapeError);

  const Diagram d = gen_pretzel({{2, -2, 2, -2}});
  const auto r = min_colors(d);
  EXPECT_TRUE(verify_coloring(d, r.witness).ok());
  EXPECT_EQ(color_values(r.witness), (std::set<Int>{0, 1, 2, 3}));
}

TEST(VerifyColoring, KernelCombinationsAreColorings) {
  std::mt19937 rng(17);
  for (const auto& d : testing::colorable_fixtures()) {
    const auto space = coloring_space(d);
    for (int s = 0; s < 100; ++s) EXPECT_TRUE(verify_coloring(d, {random_coloring(space, rng)}).ok()) << d.name;
  }
}

TEST(Normalize, Cases) {
  EXPECT_EQ(normalize({{3, 5, 7}}).colors, (IntVector{0, 1, 2}));
  EXPECT_EQ(normalize({{4, 4, 4, 4}}).colors, (IntVector{0, 0, 0, 0}));
  EXPECT_EQ(normalize({{}}).colors, IntVector{});
}

TEST(Normalize, ScalingByTDoesNotChangeColors) {
  const Diagram d = gen_pretzel({{-2, 3, 6}});
  const auto base = normalize({coloring_space(d).pinned.front()});
  ZColoring scaled = base;
  for (auto& x : scaled.colors) x = 2 * x + 11;
  EXPECT_TRUE(verify_coloring(d, scaled).ok());
  EXPECT_EQ(normalize(scaled), base);
  EXPECT_EQ(count_colors(scaled), count_colors(base));
}

TEST(CountColors, Cases) {
  EXPECT_EQ(count_colors({{0, 1, 2, 1}}), 3u);
  EXPECT_EQ(count_colors({{9, 9, 9}}), 1u);
  const auto r = min_colors(gen_pretzel({{4, -4, 4, -4}}));
  EXPECT_EQ(count_colors(r.witness), 6u);
}

TEST(CountColors, AffineInvariance) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> pick(-9, 9);
  for (const auto& d : testing::colorable_fixtures()) {
    const auto space = coloring_space(d);
    for (int s = 0; s < 20; ++s) {
      const IntVector w = random_coloring(space, rng);
      long scale = 0;
      while (scale == 0) scale = pick(rng);
      const long shift = pick(rng);
      IntVector moved = w;
      for (auto& x : moved) x = scale * x + shift;
      EXPECT_EQ(count_colors({moved}), count_colors({w}));
    }
  }
}

TEST(LinkDeterminant, Trefoil) {
  const Diagram d = trefoil();
  // 9 three-colorings and 5 five-colorings: gcd(det, 3) = 3, gcd(det, 5) = 1.
  EXPECT_EQ(testing::fox_count_by_enumeration(d, 3), 9u);
  EXPECT_EQ(testing::fox_count_by_enumeration(d, 5), 5u);
  EXPECT_EQ(link_determinant(d), 3);
}

TEST(LinkDeterminant, ColorableFamiliesVanish) {
  EXPECT_EQ(link_determinant(gen_pretzel({{-2, 3, 6}})), 0);
  EXPECT_EQ(link_determinant(gen_pretzel({{2, -2, 2, -2}})), 0);
}

TEST(LinkDeterminant, KnownPretzelValues) {
  // |sum_i prod_{j != i} a_j| for pretzel links.
  EXPECT_EQ(link_determinant(gen_pretzel({{1, 1, 1}})), 3);
  EXPECT_EQ(link_determinant(gen_pretzel({{3, 3}})), 6);
  EXPECT_EQ(link_determinant(gen_pretzel({{-2, 3, 7}})), 1);
  EXPECT_EQ(link_determinant(gen_pretzel({{3, 5, 7}})), 71);
}

TEST(LinkDeterminant, RejectsSplitDiagrams) {
  EXPECT_THROW(link_determinant(testing::offset_trefoils()), UnsupportedInput);
  EXPECT_THROW(link_determinant(free_circles(2)), UnsupportedInput);
}

TEST(LinkDeterminant, IndependentOfDeletedRowAndColumn) {
  std::vector<Diagram> fixtures{trefoil(), gen_pretzel({{2, -2, 2, -2}}), gen_pretzel({{-2, 3, 6}}),
                                gen_pretzel({{1, 1, 1}}), gen_pretzel({{3, 5}}), gen_torus({1, 4}),
                                gen_torus({1, 3}), gen_pretzel({{2, -2, 2, -2, 2, -2}})};
  for (const auto& d : fixtures) {
    ASSERT_LE(d.crossing_count(), 12u);
    const IntMatrix m = coloring_matrix(d);
    const Int expected = link_determinant(d);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        EXPECT_EQ(abs_value(determinant(m.minor(r, c))), expected) << d.name << " minor " << r << "," << c;
  }
}

TEST(FoxColorable, Trefoil) {
  EXPECT_TRUE(fox_colorable(trefoil(), 3));
  EXPECT_FALSE(fox_colorable(trefoil(), 5));
  EXPECT_THROW(fox_colorable(trefoil(), 1), UnsupportedInput);
}

TEST(FoxColorable, DeterminantZeroColorsForEveryModulus) {
  const Diagram d = gen_pretzel({{-2, 3, 6}});
  for (unsigned long q = 2; q <= 12; ++q) EXPECT_TRUE(fox_colorable(d, q)) << q;
}

TEST(FoxColorable, CountsMatchEnumeration) {
  std::vector<Diagram> fixtures{trefoil(), gen_pretzel({{2, -2, 2, -2}}), gen_pretzel({{-2, 3, 6}}),
                                gen_pretzel({{1, 1, 1}}), gen_pretzel({{3, 3}}), gen_torus({1, 3}),
                                gen_torus({1, 4}), testing::offset_trefoils(), free_circles(2),
                                gen_pretzel({{2, 3, 5}})};
  for (const auto& d : fixtures) {
    ASSERT_LE(d.arc_count, 12u);
    for (unsigned long q = 2; q <= 5; ++q) {
      const auto brute = testing::fox_count_by_enumeration(d, static_cast<long>(q));
      EXPECT_EQ(fox_coloring_count(d, q), Int(static_cast<unsigned long>(brute))) << d.name << " q=" << q;
      EXPECT_EQ(fox_colorable(d, q), brute > q) << d.name << " q=" << q;
    }
  }
}

TEST(TorusColoring, ColumnStatesForFourStrands) {
  const auto prop = propagate_torus(4, 4);
  const std::vector<IntVector> expected{{1, 0, 0, 1}, {1, 1, 2, 2}, {2, 3, 3, 2}, {2, 2, 1, 1}, {1, 0, 0, 1}};
  EXPECT_EQ(prop.states, expected);
}

TEST(TorusColoring, SixStrandsSecondState) {
  EXPECT_EQ(propagate_torus(6, 1).states[1], (IntVector{1, 1, 2, 2, 2, 2}));
}

TEST(TorusColoring, FourColorsAndValid) {
  for (long p : {1L, 2L, -1L, -2L})
    for (std::size_t n : {4u, 6u, 8u}) {
      const TorusSpec spec{p, n};
      const ZColoring c = torus_coloring(spec);
      EXPECT_TRUE(verify_coloring(gen_torus(spec), c).ok()) << torus_name(spec);
      EXPECT_EQ(color_values(c), (std::set<Int>{0, 1, 2, 3})) << torus_name(spec);
    }
}

TEST(TorusColoring, SeamReadsSeed) {
  const ZColoring c = torus_coloring({2, 6});
  EXPECT_EQ(IntVector(c.colors.begin(), c.colors.begin() + 6), (IntVector{1, 0, 0, 0, 0, 1}));
}

TEST(TorusColoring, HypothesisViolations) {
  EXPECT_THROW(torus_coloring({1, 3}), HypothesisError);
  EXPECT_THROW(torus_coloring({1, 2}), HypothesisError);
  EXPECT_THROW(torus_coloring({1, 5}), HypothesisError);
}

TEST(TwistRegions, ArithmeticProgressions) {
  std::mt19937 rng(29);
  for (const PretzelSpec& spec : {PretzelSpec{{2, -2, 2, -2}}, PretzelSpec{{-2, 3, 6}}, PretzelSpec{{4, -4, 4, -4, 4, -4}},
                                  PretzelSpec{{-3, 4, 12}}}) {
    const PretzelLayout layout = pretzel_layout(spec);
    const auto space = coloring_space(layout.diagram);
    for (int s = 0; s < 100; ++s) {
      const IntVector w = random_coloring(space, rng);
      for (const auto& arcs : layout.twist_arcs)
        for (std::size_t j = 1; j + 1 < arcs.size(); ++j)
          EXPECT_EQ(w[arcs[j - 1]] - 2 * w[arcs[j]] + w[arcs[j + 1]], 0) << layout.diagram.name;
    }
  }
}

TEST(TwistRegions, AlternatingPretzelStrandsCountUp) {
  for (long n : {2L, 4L, 6L}) {
    PretzelSpec spec{{n, -n, n, -n}};
    const PretzelLayout layout = pretzel_layout(spec);
    const ZColoring w = min_colors(layout.diagram).witness;
    for (const auto& arcs : layout.twist_arcs) {
      ASSERT_EQ(arcs.size(), static_cast<std::size_t>(n + 2));
      IntVector seq;
      for (auto a : arcs) seq.push_back(w.colors[a]);
      if (seq.front() != 0) std::reverse(seq.begin(), seq.end());
      for (long i = 0; i < n + 2; ++i) EXPECT_EQ(seq[i], i) << layout.diagram.name;
    }
  }
}

TEST(TwistRegions, ProportionalIncrements) {
  std::mt19937 rng(31);
  for (long n : {2L, 3L, 4L, 5L}) {
    const PretzelLayout layout = pretzel_layout({{-n, n + 1, n * (n + 1)}});
    const auto space = coloring_space(layout.diagram);
    for (int s = 0; s < 50; ++s) {
      const IntVector w = random_coloring(space, rng);
      if (is_constant(w)) continue;
      const Int a = w[layout.twist_arcs[0][1]] - w[layout.twist_arcs[0][0]];
      const Int b = w[layout.twist_arcs[1][1]] - w[layout.twist_arcs[1][0]];
      EXPECT_NE(a, 0);
      EXPECT_EQ(n * a, (n + 1) * b);
    }
  }
}

TEST(ColoringDocument, RoundTripWithBigColors) {
  ZColoring c{{0, -4, Int("123456789012345678901234567890")}};
  const std::string text = serialize_coloring("x", c);
  EXPECT_EQ(text, R"({"colors":[0,-4,"123456789012345678901234567890"],"diagram":"x"})");
  const auto doc = parse_coloring(text);
  EXPECT_EQ(doc.diagram, "x");
  EXPECT_EQ(doc.coloring, c);
  EXPECT_THROW(parse_coloring(R"({"colors":[1.5]})"), ParseError);
  EXPECT_THROW(parse_coloring("{"), ParseError);
}

}  // namespace
}  // namespace zcolor
