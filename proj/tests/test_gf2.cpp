#include <random>

#include <gtest/gtest.h>

#include "floqsim/gf2.hpp"

using namespace floqsim;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density = 2) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % density == 0) m.set(i, j, true);
  return m;
}

// Plain elimination on vector<vector<int>>, kept separate from the packed code.
std::size_t naive_rank(const BitMatrix& m) {
  std::vector<std::vector<int>> a(m.row_count(), std::vector<int>(m.col_count()));
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j) a[i][j] = m.get(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.col_count() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != rank && a[i][c])
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return rank;
}

// Low-rank product A*B so kernels are large.
BitMatrix low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k) * random_matrix(rng, k, c);
}

}  // namespace

TEST(gf2, rref_examples) {
  EXPECT_EQ(f2_rref(BitMatrix(3, 5)).rank, 0u);
  auto id = f2_rref(BitMatrix::identity(4));
  EXPECT_EQ(id.rank, 4u);
  EXPECT_EQ(id.pivot_columns, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(gf2, rank_matches_naive_elimination) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto m = random_matrix(rng, 50, 100);
    EXPECT_EQ(f2_rank(m), naive_rank(m));
    EXPECT_EQ(f2_rref(m).rank, naive_rank(m));
    auto lr = low_rank(rng, 60, 90, 17);
    EXPECT_EQ(f2_rank(lr), naive_rank(lr));
  }
}

TEST(gf2, rref_idempotent_and_row_permutation_invariant) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto m = low_rank(rng, 40, 70, 12);
    auto r1 = f2_rref(m);
    EXPECT_EQ(f2_rref(r1.matrix).matrix, r1.matrix);
    auto rows = m.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    auto r2 = f2_rref(BitMatrix::from_rows(rows, m.col_count()));
    EXPECT_EQ(r2.matrix, r1.matrix);
  }
}

TEST(gf2, kernel_examples) {
  EXPECT_EQ(f2_kernel(BitMatrix::identity(5)).row_count(), 0u);
  auto m = BitMatrix::from_strings({"1011", "1011", "0110"});
  auto k = f2_kernel(m);
  ASSERT_EQ(k.row_count(), 1u);
  EXPECT_EQ(k.to_strings()[0], "110");
}

TEST(gf2, rank_nullity) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto m = low_rank(rng, 30 + rng() % 30, 20 + rng() % 60, 1 + rng() % 20);
    std::size_t r = f2_rank(m);
    auto left = f2_kernel(m);
    EXPECT_EQ(left.row_count(), m.row_count() - r);
    EXPECT_EQ(f2_rank(left), left.row_count());
    auto prod = left * m;
    for (std::size_t i = 0; i < prod.row_count(); ++i) EXPECT_FALSE(prod.row(i).any());
    auto right = f2_nullspace(m);
    EXPECT_EQ(right.row_count() + r, m.col_count());
    auto mr = m * right.transpose();
    for (std::size_t i = 0; i < mr.row_count(); ++i) EXPECT_FALSE(mr.row(i).any());
  }
}

TEST(gf2, solve_examples) {
  BitVec b = BitVec::from_string("1011");
  auto x = f2_solve(BitMatrix::identity(4), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
  EXPECT_FALSE(f2_solve(BitMatrix(4, 4), b));
}

TEST(gf2, solve_random_consistent_systems) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    auto m = low_rank(rng, 40, 50, 25);
    BitVec x0(m.row_count());
    for (std::size_t i = 0; i < x0.size(); ++i)
      if (rng() & 1) x0.set(i);
    BitVec b(m.col_count());
    for (std::size_t i = 0; i < m.row_count(); ++i)
      if (x0.get(i)) b ^= m.row(i);
    auto x = f2_solve(m, b);
    ASSERT_TRUE(x);
    BitVec check(m.col_count());
    for (std::size_t i = 0; i < m.row_count(); ++i)
      if (x->get(i)) check ^= m.row(i);
    EXPECT_EQ(check, b);
  }
}
