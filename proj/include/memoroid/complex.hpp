// Copyright 2026 The memoroid Authors. Apache 2.0 License.
#pragma once

#include <cmath>

namespace memo {

// Complex scalar stored as an explicit (re, im) pair. Kept deliberately
// minimal: the recurrent state algebra only needs add/mul/|.|, and an
// explicit pair keeps serialized layouts trivial.
struct Cplx {
  double re{0.0};
  double im{0.0};

  friend Cplx operator+(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator*(Cplx a, Cplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator*(double s, Cplx a) { return {s * a.re, s * a.im}; }

  double abs() const { return std::hypot(re, im); }
};

// exp(x + iy) = e^x (cos y + i sin y).
inline Cplx cexp(Cplx z) {
  const double r = std::exp(z.re);
  return {r * std::cos(z.im), r * std::sin(z.im)};
}

inline Cplx polar(double mag, double phase) {
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace memo
