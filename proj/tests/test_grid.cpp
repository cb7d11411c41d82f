#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gridsets/grid.hpp"
#include "test_support.hpp"

namespace gridsets {
namespace {

using testing::bfs_components;
using testing::random_masks;
using testing::rows;

TEST(ComponentCount, PathColumnSplitsNonadjacentRows) {
  EXPECT_EQ(component_count({3, 1, Family::PathColumn}, VertexSet{{rows({1, 3})}}), 2);
}

TEST(ComponentCount, CompleteColumnJoinsAnyRows) {
  EXPECT_EQ(component_count({3, 1, Family::CompleteColumn}, VertexSet{{rows({1, 3})}}), 1);
}

TEST(ComponentCount, TwoColumnGrid) {
  const GridSpec spec{3, 2, Family::PathColumn};
  const std::vector<ColumnMask> masks{rows({1, 3}), rows({1, 2, 3})};
  EXPECT_EQ(component_count(spec, masks), 1);
  EXPECT_EQ(bfs_components(spec, masks), 1);
}

TEST(ComponentCount, EmptySetHasNoComponents) {
  EXPECT_EQ(component_count({4, 3, Family::PathColumn}, VertexSet{{0, 0, 0}}), 0);
}

TEST(ComponentCount, RejectsBitsAboveRowM) {
  EXPECT_THROW(component_count({3, 1, Family::PathColumn}, VertexSet{{0b1000}}), std::invalid_argument);
  EXPECT_THROW(component_count({3, 2, Family::PathColumn}, VertexSet{{1}}), std::invalid_argument);
}

TEST(IsConnected, Basics) {
  EXPECT_TRUE(is_connected({5, 4, Family::PathColumn}, VertexSet{{0, rows({3}), 0, 0}}));
  EXPECT_FALSE(is_connected({5, 4, Family::PathColumn}, VertexSet{{0, 0, 0, 0}}));
  EXPECT_TRUE(is_connected({4, 1, Family::PathColumn}, VertexSet{{rows({1, 2, 3})}}));
}

TEST(GridSpec, Validation) {
  EXPECT_THROW(GridSpec({0, 3}).validate(), std::invalid_argument);
  EXPECT_THROW(GridSpec({3, 0}).validate(), std::invalid_argument);
  EXPECT_THROW(GridSpec({32, 1}).validate(), std::invalid_argument);
  EXPECT_EQ(parse_family("k"), Family::CompleteColumn);
  EXPECT_THROW(parse_family("torus"), std::invalid_argument);
}

TEST(Reflect, RowsReverse) {
  EXPECT_EQ(reflect_rows(rows({1}), 4), rows({4}));
  EXPECT_EQ(reflect_rows(rows({1, 2, 4}), 4), rows({1, 3, 4}));
  EXPECT_EQ(column_runs(rows({1, 2, 4})), 2);
  EXPECT_EQ(column_runs(0), 0);
}

class ComponentProperties : public ::testing::TestWithParam<Family> {};

TEST_P(ComponentProperties, UnionFindMatchesBreadthFirstSearch) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const GridSpec spec{1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6), GetParam()};
    const auto masks = random_masks(rng, spec.m, spec.n);
    ASSERT_EQ(component_count(spec, masks), bfs_components(spec, masks));
  }
}

TEST_P(ComponentProperties, InvariantUnderRowAndColumnReflection) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const GridSpec spec{1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 7), GetParam()};
    auto masks = random_masks(rng, spec.m, spec.n);
    const int base = component_count(spec, masks);
    auto flipped_rows = masks;
    for (auto& c : flipped_rows) c = reflect_rows(c, spec.m);
    auto flipped_cols = masks;
    std::reverse(flipped_cols.begin(), flipped_cols.end());
    ASSERT_EQ(component_count(spec, flipped_rows), base);
    ASSERT_EQ(component_count(spec, flipped_cols), base);
  }
}

TEST_P(ComponentProperties, SeparatedBlocksAddUp) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int left = 1 + static_cast<int>(rng() % 4);
    const int right = 1 + static_cast<int>(rng() % 4);
    const auto a = random_masks(rng, m, left);
    const auto b = random_masks(rng, m, right);
    std::vector<ColumnMask> joined = a;
    joined.push_back(0);  // empty separator column
    joined.insert(joined.end(), b.begin(), b.end());
    ASSERT_EQ(component_count({m, left + right + 1, GetParam()}, joined),
              component_count({m, left, GetParam()}, a) + component_count({m, right, GetParam()}, b));
  }
}

INSTANTIATE_TEST_SUITE_P(BothFamilies, ComponentProperties,
                         ::testing::Values(Family::CompleteColumn, Family::PathColumn));

TEST(ComponentProperties, CompleteColumnNeverHasMoreComponents) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto masks = random_masks(rng, m, n);
    ASSERT_LE(component_count({m, n, Family::CompleteColumn}, masks),
              component_count({m, n, Family::PathColumn}, masks));
  }
}

}  // namespace
}  // namespace gridsets
