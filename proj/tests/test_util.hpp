// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "memoroid/rng.hpp"
#include "memoroid/scan.hpp"

namespace memo::test {

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
  const double diff = std::fabs(a - b);
  return diff <= abs_floor + rel * std::max(std::fabs(a), std::fabs(b));
}

// 2x2 row-major matrix payload for floating-point scan checks.
struct Mat2 {
  std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    r.m = {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
    return r;
  }
};

inline Monoid<long> int_add_monoid() {
  return {0L, [](const long& a, const long& b) { return a + b; }};
}

inline Monoid<long> int_max_monoid() {
  // max with identity at the smallest representable value.
  return {static_cast<long>(-0x7fffffffffffffffL) - 1L,
          [](const long& a, const long& b) { return a > b ? a : b; }};
}

inline Monoid<Mat2> mat2_monoid() {
  return {Mat2{}, [](const Mat2& a, const Mat2& b) { return a * b; }};
}

inline Mat2 random_mat2(Rng& rng) {
  Mat2 m;
  for (auto& x : m.m) x = rng.uniform(-1.0, 1.0);
  return m;
}

// Fibonacci-style length ladder used by the scan equivalence suites.
inline std::vector<std::size_t> scan_lengths(std::size_t max_len = 4096) {
  std::vector<std::size_t> lens = {0, 1, 2, 3};
  std::size_t a = 3, b = 5;
  while (b <= max_len) {
    lens.push_back(b);
    const std::size_t next = a + b;
    a = b;
    b = next;
  }
  if (lens.back() != max_len) lens.push_back(max_len);
  return lens;
}

}  // namespace memo::test
