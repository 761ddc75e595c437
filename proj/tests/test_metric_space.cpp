#include <gtest/gtest.h>

#include "gromov/generators.hpp"
#include "gromov/geodesic_graph.hpp"
#include "gromov/metric_space.hpp"

using namespace gromov;

namespace {

MetricSpace equilateral(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  DistanceMatrix<double> m = DistanceMatrix<double>::Ones(n, n);
  m.diagonal().setZero();
  return MetricSpace(labels, m);
}

}  // namespace

TEST(BuildSpace, TwoPoints) {
  const auto s = build_space<double>({"a", "b"}, {{0, 1}, {1, 0}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s(0, 1), 1.0);
  EXPECT_EQ(s.label(1), "b");
  EXPECT_EQ(s.find("b"), 1u);
  EXPECT_EQ(s.find("zz"), 2u);
}

TEST(BuildSpace, SinglePoint) {
  const auto s = build_space<double>({"a"}, {{0}});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(validate_metric(s).passed());
  EXPECT_EQ(diameter(s), 0.0);
}

TEST(BuildSpace, AsymmetricDataIsStoredAsGiven) {
  const auto s = build_space<double>({"a", "b"}, {{0, 1}, {2, 0}});
  EXPECT_EQ(s(1, 0), 2.0);
}

TEST(BuildSpace, ShapeErrors) {
  EXPECT_THROW(build_space<double>({}, {}), DegenerateSpace);
  EXPECT_THROW(build_space<double>({"a", "b"}, {{0, 1}, {1}}), DimensionMismatch);
  EXPECT_THROW(build_space<double>({"a"}, {{0, 1}, {1, 0}}), DimensionMismatch);
  EXPECT_THROW(MetricSpace({"a", "b"}, DistanceMatrix<double>::Zero(2, 3)), DimensionMismatch);
}

TEST(ValidateMetric, EquilateralPasses) { EXPECT_TRUE(validate_metric(equilateral(3)).passed()); }

TEST(ValidateMetric, SymmetryWitness) {
  const auto r = validate_metric(build_space<double>({"a", "b"}, {{0, 1}, {2, 0}}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, Axiom::kSymmetry);
  EXPECT_EQ(r.violations[0].witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(r.violations[0].magnitude, 1.0);
}

TEST(ValidateMetric, TriangleWitness) {
  const auto r =
      validate_metric(build_space<double>({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, Axiom::kTriangle);
  EXPECT_EQ(r.violations[0].witness, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(r.violations[0].magnitude, 1.0);
}

TEST(ValidateMetric, DiagonalAndPositivity) {
  const auto r = validate_metric(build_space<double>({"a", "b"}, {{0.5, 0}, {0, 0}}));
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].axiom, Axiom::kZeroDiagonal);
  EXPECT_EQ(r.violations[0].witness, std::vector<std::size_t>{0});
  EXPECT_EQ(r.violations[1].axiom, Axiom::kPositivity);
  EXPECT_FALSE(r.passed());
}

TEST(ValidateMetric, KeepsWorstTriangle) {
  // d(a,d) = 10 exceeds every two-step route; the worst route is through b or c at 1 + 1.
  const auto s = build_space<double>(
      {"a", "b", "c", "d"},
      {{0, 1, 1, 10}, {1, 0, 1, 1}, {1, 1, 0, 1}, {10, 1, 1, 0}});
  const auto r = validate_metric(s);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_DOUBLE_EQ(r.violations[0].magnitude, 8.0);
  EXPECT_EQ(r.violations[0].witness.front(), 0u);
  EXPECT_EQ(r.violations[0].witness.back(), 3u);
}

TEST(GromovProduct, Examples) {
  const auto s = build_space<double>({"x", "z", "p"}, {{0, 5, 3}, {5, 0, 4}, {3, 4, 0}});
  EXPECT_DOUBLE_EQ(gromov_product(s, 0, 1, 2), 1.0);
  EXPECT_DOUBLE_EQ(gromov_product(s, 0, 0, 2), 3.0);
  const auto line = build_space<double>({"x", "p", "z"}, {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  EXPECT_DOUBLE_EQ(gromov_product(line, 0, 2, 1), 0.0);
  EXPECT_THROW(gromov_product(s, 0, 1, 3), IndexOutOfRange);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(equilateral(3)), 1.0);
  EXPECT_EQ(diameter(all_pairs_shortest(cycle_graph(4))), 2.0);
}

TEST(Subspace, IdentityAndSingleton) {
  const auto s = all_pairs_shortest(cycle_graph(5));
  const auto all = subspace(s, {0, 1, 2, 3, 4});
  EXPECT_EQ(all.matrix(), s.matrix());
  EXPECT_EQ(all.labels(), s.labels());
  const auto one = subspace(s, {3});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.label(0), "c3");
}

TEST(Subspace, FourConsecutiveVerticesOfC5) {
  const auto sub = subspace(all_pairs_shortest(cycle_graph(5)), {0, 1, 2, 3});
  std::vector<double> d;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) d.push_back(sub(i, j));
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<double>{1, 1, 1, 2, 2, 2}));
}

TEST(Subspace, Errors) {
  const auto s = equilateral(3);
  EXPECT_THROW(subspace(s, {0, 0}), DuplicateIndex);
  EXPECT_THROW(subspace(s, {3}), IndexOutOfRange);
}

TEST(Subspace, CompositionMatchesDirectRestriction) {
  const auto s = perturbed_tree_metric(12, 5, 0.01);
  const std::vector<std::size_t> outer{11, 2, 7, 4, 0, 9};
  const std::vector<std::size_t> inner{5, 1, 3};
  const auto twice = subspace(subspace(s, outer), inner);
  const auto once = subspace(s, {outer[5], outer[1], outer[3]});
  EXPECT_EQ(twice.matrix(), once.matrix());
  EXPECT_EQ(twice.labels(), once.labels());
}

TEST(Scaled, MultipliesDistances) {
  const auto s = scaled(equilateral(3), 2.5);
  EXPECT_EQ(s(0, 2), 2.5);
  EXPECT_EQ(s(1, 1), 0.0);
}

TEST(Tolerance, RelativeComparison) {
  const Tolerance<double> tol;
  EXPECT_TRUE(tol.equal(1e12, 1e12 + 100));
  EXPECT_FALSE(tol.equal(1.0, 1.0 + 1e-8));
  EXPECT_TRUE(tol.less_equal(1.0 + 1e-10, 1.0));
  EXPECT_FALSE(tol.less_equal(1.0 + 1e-8, 1.0));
}

TEST(ScalarTypes, FloatAndLongDoubleInstantiate) {
  const auto f = build_space<float>({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  EXPECT_TRUE(validate_metric(f).passed());
  EXPECT_FLOAT_EQ(gromov_product(f, 0, 2, 1), 0.0f);
  const auto l = build_space<long double>({"a", "b"}, {{0, 3}, {3, 0}});
  EXPECT_EQ(diameter(l), 3.0L);
}

TEST(ValidateMetric, GeneratedSpacesPass) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(validate_metric(perturbed_tree_metric(10, seed, 0.05)).passed());
    EXPECT_TRUE(validate_metric(all_pairs_shortest(random_connected_graph(10, 5, seed))).passed());
  }
}
