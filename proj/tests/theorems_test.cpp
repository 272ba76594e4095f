#include <gtest/gtest.h>

#include "fibhuff/theorems.hpp"
#include "test_util.hpp"

using namespace fibhuff;
using fibhuff::test::seq;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

// Direct sum over the left-sided tree: depths n-1, n-1, n-2, ..., 1.
Nat left_sided_cost(const WeightSeq& p) {
  const std::size_t n = p.size();
  Nat total = p[0] * (n - 1);
  for (std::size_t i = 2; i <= n; ++i) total += p[i - 1] * (n - i + 1);
  return total;
}

}  // namespace

TEST(MinAbs, Sequences) {
  EXPECT_EQ(min_abs_sequence(10), seq({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
  EXPECT_EQ(min_abs_sequence(3), seq({1, 1, 2}));
  EXPECT_EQ(min_abs_sequence(12), seq({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144}));
  EXPECT_EQ(error_of([] { min_abs_sequence(2); }), ErrorCode::SizeTooSmall);
}

TEST(MinAbs, Costs) {
  EXPECT_EQ(min_abs_cost(10), 363);
  EXPECT_EQ(min_abs_cost(3), 6);
  EXPECT_EQ(min_abs_cost(20), 46344);
  EXPECT_EQ(left_sided_cost(min_abs_sequence(10)), 363);
  EXPECT_EQ(wepl(build_tree(seq({1, 1, 2}))), 6);
  EXPECT_EQ(wepl(build_tree(min_abs_sequence(20))), 46344);
  EXPECT_EQ(error_of([] { min_abs_cost(1); }), ErrorCode::SizeTooSmall);
}

TEST(MinK, Sequences) {
  EXPECT_EQ(min_k_sequence(10, 0), seq({1, 1, 1, 3, 4, 7, 11, 18, 29, 47}));
  EXPECT_EQ(min_k_sequence(10, 1), seq({1, 1, 1, 2, 4, 6, 10, 16, 26, 42}));
  EXPECT_EQ(min_k_sequence(10, 4), seq({1, 1, 1, 2, 3, 5, 8, 14, 22, 36}));
  EXPECT_EQ(min_k_sequence(10, 7), seq({1, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
  EXPECT_EQ(min_k_sequence(3, 0), seq({1, 1, 1}));
  EXPECT_EQ(error_of([] { min_k_sequence(2, 0); }), ErrorCode::SizeTooSmall);
  EXPECT_EQ(error_of([] { min_k_sequence(10, 8); }), ErrorCode::KOutOfRange);
}

TEST(MinK, Costs) {
  EXPECT_EQ(min_k_cost(10, 0), 309);
  EXPECT_EQ(min_k_cost(10, 1), 276);
  EXPECT_EQ(min_k_cost(10, 7), 230);
  EXPECT_EQ(min_k_cost(3, 0), 5);
  EXPECT_EQ(left_sided_cost(min_k_sequence(10, 0)), 309);
  EXPECT_EQ(left_sided_cost(min_k_sequence(10, 1)), 276);
  EXPECT_EQ(left_sided_cost(min_k_sequence(10, 7)), 230);
  EXPECT_EQ(wepl(build_tree(seq({1, 1, 1}))), 5);
  EXPECT_EQ(error_of([] { min_k_cost(5, 3); }), ErrorCode::KOutOfRange);
}

TEST(MinK, FibonacciFormAgrees) {
  for (std::size_t n = 3; n <= 60; ++n) {
    for (std::size_t k = 0; k <= n - 3; ++k) ASSERT_EQ(min_k_sequence(n, k), min_k_sequence_fibonacci_form(n, k));
  }
}

TEST(MinK, ConstructionMatchesCost) {
  for (std::size_t n = 3; n <= 40; ++n) {
    ASSERT_EQ(wepl(build_tree(min_abs_sequence(n))), min_abs_cost(n)) << n;
    for (std::size_t k = 0; k <= n - 3; ++k) {
      const auto P = min_k_sequence(n, k);
      const auto tree = build_tree(P);
      ASSERT_EQ(wepl(tree), min_k_cost(n, k)) << n << "," << k;
      ASSERT_EQ(left_sided_cost(P), min_k_cost(n, k));
      ASSERT_TRUE(is_left_sided(tree));
    }
  }
}

TEST(MinK, MembershipAndOrder) {
  for (std::size_t n = 4; n <= 25; ++n) {
    for (std::size_t k = 0; k <= n - 3; ++k) {
      const auto P = min_k_sequence(n, k);
      ASSERT_EQ(classify_order(P), OrderClass::ordered(k)) << n << "," << k;
      ASSERT_TRUE(is_elongated(build_tree(P)));
      ASSERT_TRUE(check_elongated_inequality(run_huffman(P)));
    }
  }
  for (std::size_t n = 3; n <= 30; ++n) ASSERT_EQ(classify_order(min_abs_sequence(n)), OrderClass::absolute());
}

TEST(MinK, LargeSizeStaysExact) {
  const std::size_t n = 200;
  EXPECT_EQ(wepl(build_tree(min_abs_sequence(n))), min_abs_cost(n));
  EXPECT_EQ(wepl(build_tree(min_k_sequence(n, 50))), min_k_cost(n, 50));
  EXPECT_EQ(wepl(build_tree(min_k_sequence(n, n - 3))), min_k_cost(n, n - 3));
}

TEST(Corollaries, Sequences) {
  const auto c10 = corollary_sequences(10);
  EXPECT_EQ(c10.lucas_shifted, seq({1, 1, 1, 3, 4, 7, 11, 18, 29, 47}));
  EXPECT_EQ(c10.fib_shifted, seq({1, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
  const auto c3 = corollary_sequences(3);
  EXPECT_EQ(c3.lucas_shifted, seq({1, 1, 1}));
  EXPECT_EQ(c3.fib_shifted, seq({1, 1, 1}));
  EXPECT_EQ(error_of([] { corollary_sequences(2); }), ErrorCode::SizeTooSmall);
}

TEST(Corollaries, Specializations) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto c = corollary_sequences(n);
    ASSERT_EQ(min_k_sequence(n, 0), c.lucas_shifted);
    ASSERT_EQ(min_k_sequence(n, n - 3), c.fib_shifted);
    ASSERT_EQ(min_k_cost(n, 0), fib(n + 3) + fib(n + 1) - (n + 3));
    ASSERT_EQ(min_k_cost(n, n - 3), fib(n + 3) - 3);
  }
}

TEST(MinSeqSpec, Validation) {
  EXPECT_EQ(error_of([] { MinSeqSpec::ordered(5, 3); }), ErrorCode::KOutOfRange);
  EXPECT_EQ(error_of([] { MinSeqSpec::abs(2); }), ErrorCode::SizeTooSmall);
  EXPECT_EQ(min_sequence(MinSeqSpec::abs(5)), min_abs_sequence(5));
  EXPECT_EQ(min_cost(MinSeqSpec::ordered(5, 2)), min_k_cost(5, 2));
}
