#include <gtest/gtest.h>

#include <random>

#include "mthv/linalg.hpp"
#include "oracles.hpp"

using namespace mthv;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int rank_hint) {
  // Product of random rows x cols factors so that the rank is controlled.
  std::vector<RationalVector> left(rows, RationalVector(rank_hint));
  std::vector<RationalVector> right(rank_hint, RationalVector(cols));
  for (auto& r : left)
    for (auto& x : r) x = mthv::testing::random_scalar(rng, 4);
  for (auto& r : right)
    for (auto& x : r) x = mthv::testing::random_scalar(rng, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int k = 0; k < rank_hint; ++k) m(i, j) += left[i][k] * right[k][j];
  return m;
}

std::vector<RationalVector> rows_of(const RationalMatrix& m) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

TEST(Linalg, RankOfSmallMatrices) {
  const auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, Scalar(1, 2)}}, 3);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RationalMatrix(3, 5)), 0u);
  EXPECT_EQ(rank(RationalMatrix(0, 0)), 0u);
}

TEST(Linalg, RankAgreesWithNaiveGauss) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 7;
    const std::size_t c = 1 + rng() % 7;
    const int k = 1 + static_cast<int>(rng() % std::min(r, c));
    const RationalMatrix m = random_matrix(rng, r, c, k);
    ASSERT_EQ(rank(m), mthv::testing::naive_rank(rows_of(m)));
  }
}

TEST(Linalg, RrefIsReduced) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5, 6, 3);
    const Echelon e = row_echelon(m);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      for (std::size_t k = 0; k < e.rank(); ++k) EXPECT_EQ(e.rref(k, e.pivots[i]), i == k ? 1 : 0);
    }
    for (std::size_t i = e.rank(); i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(e.rref(i, j), 0);
    // Row space is preserved.
    auto stacked = rows_of(m);
    for (std::size_t i = 0; i < e.rank(); ++i) stacked.push_back(e.rref.row(i));
    EXPECT_EQ(mthv::testing::naive_rank(stacked), e.rank());
  }
}

TEST(Linalg, ColumnOrderControlsPivots) {
  const auto m = RationalMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 3);
  const std::vector<std::size_t> order = {2, 1, 0};
  const Echelon e = row_echelon(m, order);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(e.rref(0, 2), 1);
  EXPECT_EQ(e.rref(0, 1), 0);
}

TEST(Linalg, KernelVectorsAreAnnihilated) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = random_matrix(rng, 4, 7, 1 + static_cast<int>(rng() % 4));
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size(), m.cols() - rank(m));
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
    }
    if (!ker.empty()) EXPECT_EQ(mthv::testing::naive_rank(ker), ker.size());
  }
}

TEST(Linalg, MembershipCertificate) {
  const std::vector<RationalVector> span = {{1, 0, 1}, {0, 1, 1}};
  const auto x = member(RationalVector{2, 3, 5}, span);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (RationalVector{2, 3}));
  EXPECT_FALSE(member(RationalVector{1, 1, 1}, span).has_value());
  EXPECT_THROW(member(RationalVector{1, 1}, span), std::invalid_argument);
  EXPECT_TRUE(member(RationalVector{0, 0, 0}, {}).has_value());
  EXPECT_FALSE(member(RationalVector{0, 1, 0}, {}).has_value());
}

TEST(Linalg, MembershipRecombinesExactly) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<RationalVector> span(3, RationalVector(6));
    for (auto& v : span)
      for (auto& x : v) x = mthv::testing::random_scalar(rng);
    RationalVector target(6);
    const Scalar a = mthv::testing::random_scalar(rng), b = mthv::testing::random_scalar(rng);
    for (std::size_t j = 0; j < 6; ++j) target[j] = a * span[0][j] + b * span[2][j];
    const auto x = member(target, span);
    ASSERT_TRUE(x.has_value());
    for (std::size_t j = 0; j < 6; ++j) {
      Scalar acc = 0;
      for (std::size_t i = 0; i < 3; ++i) acc += (*x)[i] * span[i][j];
      EXPECT_EQ(acc, target[j]);
    }
  }
}

TEST(Linalg, SubspaceReducer) {
  SubspaceReducer red(3);
  EXPECT_TRUE(red.insert({1, 1, 0}));
  EXPECT_TRUE(red.insert({0, 1, 1}));
  EXPECT_FALSE(red.insert({1, 2, 1}));
  EXPECT_EQ(red.rank(), 2u);
  EXPECT_TRUE(red.contains({2, 0, -2}));
  EXPECT_FALSE(red.contains({0, 0, 1}));
  const RationalVector r = red.reduce({0, 0, 5});
  EXPECT_EQ(r[0], 0);
  EXPECT_EQ(r[1], 0);
}
