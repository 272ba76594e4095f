#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibhuff/error.hpp"

namespace fibhuff {

// Unbounded integer. Every weight, cost and array entry in the library is a Nat;
// values are never negative. Expression templates are off so `auto` always
// holds a value.
using Nat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Nat& value) { return value.str(); }

// Parses a non-negative decimal literal of any length.
inline Nat parse_nat(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "not a decimal integer: '" + text + "'");
  }
  return Nat(text);
}

// F(0), F(1), ..., F(count - 1).
inline std::vector<Nat> fib_prefix(std::size_t count) {
  std::vector<Nat> out;
  out.reserve(count);
  Nat a = 0, b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(a);
    Nat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

// F(0) = 0, F(1) = 1, F(i) = F(i-1) + F(i-2).
inline Nat fib(std::size_t i) {
  Nat a = 0, b = 1;
  for (std::size_t step = 0; step < i; ++step) {
    Nat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

// L(1) = 1, L(2) = 3, L(i) = L(i-1) + L(i-2). Index 0 is undefined.
inline Nat lucas(std::size_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidIndex, "Lucas numbers start at index 1");
  Nat a = 1, b = 3;
  for (std::size_t step = 1; step < i; ++step) {
    Nat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

// Largest r with r * r <= x.
inline Nat isqrt(const Nat& x) {
  if (x < 0) throw Error(ErrorCode::InvalidIndex, "isqrt of a negative value");
  if (x < 2) return x;
  // Newton iteration from an overestimate decreases monotonically to the floor root.
  Nat r = Nat(1) << ((boost::multiprecision::msb(x) / 2) + 1);
  while (true) {
    Nat next = (r + x / r) >> 1;
    if (next >= r) return r;
    r = std::move(next);
  }
}

// floor((n + 1) * phi) with phi the golden ratio, via floor(m * phi) = (m + isqrt(5 m^2)) / 2.
inline Nat lower_wythoff(const Nat& n) {
  if (n < 0) throw Error(ErrorCode::InvalidIndex, "negative Wythoff index");
  const Nat m = n + 1;
  return (m + isqrt(5 * m * m)) / 2;
}

inline Nat lower_wythoff(std::size_t n) { return lower_wythoff(Nat(n)); }

}  // namespace fibhuff
