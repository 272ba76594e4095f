#pragma once

#include <cstddef>
#include <vector>

#include "fibhuff/numbers.hpp"

namespace fibhuff {

// Generalized Wythoff array.
//
// Column 0 holds the row index itself and column 1 the lower Wythoff term
// floor((row + 1) * phi); every later column follows the Fibonacci rule. The
// classical array is what remains from column 2 onwards, so row 0 of the
// generalized array is the Fibonacci sequence F(0), F(1), F(2), ...
//
// Rows are computed on demand; nothing is cached between calls.

inline std::vector<Nat> wythoff_row(const Nat& row, std::size_t len) {
  if (len == 0) throw Error(ErrorCode::InvalidIndex, "Wythoff row length must be at least 1");
  std::vector<Nat> out;
  out.reserve(len);
  out.push_back(row);
  if (len > 1) out.push_back(lower_wythoff(row));
  for (std::size_t j = 2; j < len; ++j) out.push_back(out[j - 1] + out[j - 2]);
  return out;
}

inline Nat wythoff_entry(const Nat& row, std::size_t col) {
  if (col == 0) return row;
  Nat prev = row;
  Nat cur = lower_wythoff(row);
  for (std::size_t j = 1; j < col; ++j) {
    Nat next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// A block of consecutive rows, each starting at column 0.
struct WythoffView {
  struct Row {
    Nat index;
    std::vector<Nat> entries;
  };
  std::vector<Row> rows;
};

inline WythoffView wythoff_view(const Nat& first_row, std::size_t row_count, std::size_t cols) {
  WythoffView view;
  view.rows.reserve(row_count);
  for (std::size_t r = 0; r < row_count; ++r) {
    const Nat index = first_row + r;
    view.rows.push_back({index, wythoff_row(index, cols)});
  }
  return view;
}

// Checks w(F(i), j) = F(i + j) + F(j) for all j in [0, j_max]; defined for i >= 2.
inline bool check_fib_row_identity(std::size_t i, std::size_t j_max) {
  if (i < 2) throw Error(ErrorCode::InvalidIndex, "Fibonacci-row identity needs i >= 2");
  const auto fibs = fib_prefix(i + j_max + 1);
  const auto row = wythoff_row(fibs[i], j_max + 1);
  for (std::size_t j = 0; j <= j_max; ++j) {
    if (row[j] != fibs[i + j] + fibs[j]) return false;
  }
  return true;
}

}  // namespace fibhuff
