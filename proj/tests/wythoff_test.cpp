#include <gtest/gtest.h>

#include <vector>

#include "fibhuff/wythoff.hpp"

using namespace fibhuff;

namespace {

std::vector<Nat> nats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Wythoff, Entries) {
  EXPECT_EQ(wythoff_entry(1, 1), 3);
  EXPECT_EQ(wythoff_entry(2, 2), 6);
  EXPECT_EQ(wythoff_entry(8, 1), 14);
  EXPECT_EQ(wythoff_entry(8, 3), 36);
}

TEST(Wythoff, Rows) {
  EXPECT_EQ(wythoff_row(0, 5), nats({0, 1, 1, 2, 3}));
  EXPECT_EQ(wythoff_row(1, 4), nats({1, 3, 4, 7}));
  EXPECT_EQ(wythoff_row(12345, 1), nats({12345}));
  EXPECT_EQ(wythoff_row(8, 4), nats({8, 14, 22, 36}));
  EXPECT_THROW(wythoff_row(3, 0), Error);
}

// Rows 0..13 of the printed table, generalized columns 0 and 1 plus the
// classical part through its twelfth column.
TEST(Wythoff, PrintedTable) {
  const std::vector<std::vector<int>> table = {
      {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144},
      {1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521},
      {2, 4, 6, 10, 16, 26, 42, 68, 110, 178, 288, 466, 754},
      {3, 6, 9, 15, 24, 39, 63, 102, 165, 267, 432, 699, 1131},
      {4, 8, 12, 20, 32, 52, 84, 136, 220, 356, 576, 932, 1508},
      {5, 9, 14, 23, 37, 60, 97, 157, 254, 411, 665, 1076, 1741},
      {6, 11, 17, 28, 45, 73, 118, 191, 309, 500, 809, 1309, 2118},
      {7, 12, 19, 31, 50, 81, 131, 212, 343, 555, 898, 1453, 2351},
      {8, 14, 22, 36, 58, 94, 152, 246, 398, 644, 1042, 1686, 2728},
      {9, 16, 25, 41, 66, 107, 173, 280, 453, 733, 1186, 1919, 3105},
      {10, 17, 27, 44, 71, 115, 186, 301, 487, 788, 1275, 2063, 3338},
      {11, 19, 30, 49, 79, 128, 207, 335, 542, 877, 1419, 2296, 3715},
      {12, 21, 33, 54, 87, 141, 228, 369, 597, 966, 1563, 2529, 4092},
      {13, 22, 35, 57, 92, 149, 241, 390, 631, 1021, 1652, 2673, 4325},
  };
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto row = wythoff_row(i, table[i].size());
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      EXPECT_EQ(row[j], table[i][j]) << "row " << i << " col " << j;
      EXPECT_EQ(wythoff_entry(i, j), table[i][j]);
    }
  }
}

TEST(Wythoff, FibonacciRule) {
  for (int i = 0; i <= 50; ++i) {
    for (std::size_t j = 2; j <= 30; ++j) {
      ASSERT_EQ(wythoff_entry(i, j), wythoff_entry(i, j - 1) + wythoff_entry(i, j - 2));
    }
  }
}

TEST(Wythoff, RowZeroIsFibonacci) {
  const auto row = wythoff_row(0, 60);
  for (std::size_t j = 0; j < row.size(); ++j) ASSERT_EQ(row[j], fib(j));
}

TEST(Wythoff, FibRowIdentity) {
  EXPECT_TRUE(check_fib_row_identity(2, 3));
  EXPECT_TRUE(check_fib_row_identity(5, 1));
  EXPECT_TRUE(check_fib_row_identity(6, 3));
  EXPECT_EQ(wythoff_entry(fib(5), 1), fib(6) + fib(1));
  EXPECT_EQ(wythoff_entry(fib(6), 3), 36);
  for (std::size_t i = 2; i <= 15; ++i) {
    ASSERT_TRUE(check_fib_row_identity(i, 20));
    for (std::size_t j = 0; j <= 20; ++j) ASSERT_EQ(wythoff_entry(fib(i), j), fib(i + j) + fib(j));
  }
  EXPECT_THROW(check_fib_row_identity(1, 3), Error);
}

TEST(Wythoff, IdentityDoesNotHoldForRowsOutsideTheFamily) {
  // Row 4 is not a Fibonacci row; the identity shape should not accidentally fit.
  EXPECT_NE(wythoff_entry(4, 1), fib(5) + fib(1));
}

TEST(Wythoff, BigRowIndex) {
  const Nat row = fib(150);
  const auto r = wythoff_row(row, 5);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(r[j], fib(150 + j) + fib(j));
}

TEST(Wythoff, ViewRowsFollowTheInvariants) {
  const auto view = wythoff_view(3, 20, 12);
  ASSERT_EQ(view.rows.size(), 20u);
  for (const auto& row : view.rows) {
    ASSERT_EQ(row.entries.size(), 12u);
    EXPECT_EQ(row.entries[0], row.index);
    EXPECT_EQ(row.entries[1], lower_wythoff(row.index));
    for (std::size_t j = 2; j < row.entries.size(); ++j) EXPECT_EQ(row.entries[j], row.entries[j - 1] + row.entries[j - 2]);
  }
  EXPECT_EQ(view.rows[5].index, 8);
}
