#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fibhuff/huffman.hpp"
#include "fibhuff/numbers.hpp"
#include "fibhuff/wythoff.hpp"

namespace fibhuff {

// Closed-form minimizing sequences for elongated Huffman trees and their costs.

namespace detail {

inline void require_size(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "sequence size must be at least 3, got " + std::to_string(n));
}

inline void require_k(std::size_t n, std::size_t k) {
  require_size(n);
  if (k > n - 3) {
    throw Error(ErrorCode::KOutOfRange, "k must lie in [0, " + std::to_string(n - 3) + "], got " + std::to_string(k));
  }
}

}  // namespace detail

// Either the absolutely ordered class or the k-ordered class, for size n.
struct MinSeqSpec {
  std::size_t n;
  bool absolute;
  std::size_t k;

  static MinSeqSpec abs(std::size_t n) {
    detail::require_size(n);
    return {n, true, 0};
  }
  static MinSeqSpec ordered(std::size_t n, std::size_t k) {
    detail::require_k(n, k);
    return {n, false, k};
  }

  OrderClass order_class() const { return absolute ? OrderClass::absolute() : OrderClass::ordered(k); }
};

// {F(1), ..., F(n)}
inline WeightSeq min_abs_sequence(std::size_t n) {
  detail::require_size(n);
  auto fibs = fib_prefix(n + 1);
  return WeightSeq(std::vector<Nat>(fibs.begin() + 1, fibs.end()));
}

// F(n + 4) - (n + 4)
inline Nat min_abs_cost(std::size_t n) {
  detail::require_size(n);
  return fib(n + 4) - (n + 4);
}

// p1 = 1, p_i = F(i-1) for i in [2, k+2], then row F(k+2) of the generalized
// Wythoff array from column 0 for p_{k+3} .. p_n.
inline WeightSeq min_k_sequence(std::size_t n, std::size_t k) {
  detail::require_k(n, k);
  const auto fibs = fib_prefix(k + 3);
  std::vector<Nat> p;
  p.reserve(n);
  p.push_back(1);
  for (std::size_t i = 2; i <= k + 2; ++i) p.push_back(fibs[i - 1]);
  auto tail = wythoff_row(fibs[k + 2], n - k - 2);
  for (auto& w : tail) p.push_back(std::move(w));
  return WeightSeq(std::move(p));
}

// Same sequence through p_i = F(i-1) + F(i-k-3) for i >= k+4; kept as an
// independent route to catch indexing drift in the Wythoff form.
inline WeightSeq min_k_sequence_fibonacci_form(std::size_t n, std::size_t k) {
  detail::require_k(n, k);
  const auto fibs = fib_prefix(n);
  std::vector<Nat> p;
  p.reserve(n);
  p.push_back(1);
  for (std::size_t i = 2; i <= k + 3; ++i) p.push_back(fibs[i - 1]);
  for (std::size_t i = k + 4; i <= n; ++i) p.push_back(fibs[i - 1] + fibs[i - k - 3]);
  return WeightSeq(std::move(p));
}

// F(n + 3) + F(n - k + 1) - (n - k + 3)
inline Nat min_k_cost(std::size_t n, std::size_t k) {
  detail::require_k(n, k);
  return fib(n + 3) + fib(n - k + 1) - (n - k + 3);
}

inline WeightSeq min_sequence(const MinSeqSpec& spec) {
  return spec.absolute ? min_abs_sequence(spec.n) : min_k_sequence(spec.n, spec.k);
}

inline Nat min_cost(const MinSeqSpec& spec) {
  return spec.absolute ? min_abs_cost(spec.n) : min_k_cost(spec.n, spec.k);
}

struct CorollarySequences {
  WeightSeq lucas_shifted;  // {1, 1, L(1), ..., L(n-2)}
  WeightSeq fib_shifted;    // {1, F(1), ..., F(n-1)}
};

inline CorollarySequences corollary_sequences(std::size_t n) {
  detail::require_size(n);
  std::vector<Nat> lucas_seq{1, 1};
  for (std::size_t i = 1; i <= n - 2; ++i) lucas_seq.push_back(lucas(i));
  std::vector<Nat> fib_seq{1};
  for (std::size_t i = 1; i <= n - 1; ++i) fib_seq.push_back(fib(i));
  return {WeightSeq(std::move(lucas_seq)), WeightSeq(std::move(fib_seq))};
}

}  // namespace fibhuff
