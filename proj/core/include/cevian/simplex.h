// Copyright 2026 The Cevian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Triangles up to similarity, represented by their interior angles.
//
// A triangle with angles (alpha, beta, gamma) is a point of the closed simplex
// P = {x >= 0, x0 + x1 + x2 = pi}. Coordinates are ordered: the same triangle
// with its vertices relabelled is a different point of P. The canonical metric
// is the Euclidean norm in the ambient 3-space; the planar embedding below is
// used for binning and plotting only and scales all distances by sqrt(2/3).

#ifndef CEVIAN_SIMPLEX_H_
#define CEVIAN_SIMPLEX_H_

#include <array>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>

namespace cevian {

inline constexpr double kPi = std::numbers::pi;

// Allowed deviation of alpha + beta + gamma from pi, in radians. Coordinates in
// [-kSumTolerance, 0) are clamped to 0 by MakeTriple.
inline constexpr double kSumTolerance = 1e-9;

// Ambient diameter of P: the distance between two of its corners.
inline constexpr double kSimplexDiameter = kPi * std::numbers::sqrt2;

class AngleTriple {
 public:
  // Equilateral.
  constexpr AngleTriple() = default;

  // No validation. For kernels whose output is in P by construction (the
  // subdivision maps have nonnegative entries and unit column sums).
  static constexpr AngleTriple Unchecked(double alpha, double beta,
                                         double gamma) {
    AngleTriple t;
    t.c_ = {alpha, beta, gamma};
    return t;
  }

  constexpr double alpha() const { return c_[0]; }
  constexpr double beta() const { return c_[1]; }
  constexpr double gamma() const { return c_[2]; }
  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr const std::array<double, 3>& coords() const { return c_; }

  // True when some angle is exactly zero (a point of the boundary of P).
  bool is_degenerate() const;

  friend constexpr bool operator==(const AngleTriple&,
                                   const AngleTriple&) = default;

 private:
  std::array<double, 3> c_ = {kPi / 3, kPi / 3, kPi / 3};
};

struct PlanePoint2D {
  double u = 0;
  double v = 0;
};

// Validates without renormalizing. Throws Error with kNonFinite,
// kSumViolation (|sum - pi| > kSumTolerance) or kNegativeAngle (a coordinate
// below -kSumTolerance).
AngleTriple MakeTriple(double alpha, double beta, double gamma);

double MinAngle(const AngleTriple& t);
double MaxAngle(const AngleTriple& t);

double Distance(const AngleTriple& t, const AngleTriple& s);

// ((alpha + 2 beta) / sqrt(3), alpha). Corner (0, 0, pi) maps to the origin.
PlanePoint2D Embed2D(const AngleTriple& t);

// Coordinates in ascending order.
AngleTriple Sorted(const AngleTriple& t);

// Same triangle up to relabelling: sorted coordinates agree within tol.
bool Similar(const AngleTriple& t, const AngleTriple& s, double tol);

// "a,b,c" with 17 significant digits.
std::string FormatTriple(const AngleTriple& t);

// Parses "a,b,c" (radians, or degrees when `degrees` is set) and validates.
// When the sum misses pi by at most `rescale_within`, the angles are first
// scaled by pi / sum; this absorbs rounding in hand-typed decimals. Throws
// Error(kParseError) on malformed text.
AngleTriple ParseTriple(std::string_view text, bool degrees = false,
                        double rescale_within = 0);

// Formats a double with 17 significant digits, shortest round-trip form.
std::string FormatReal(double x);

}  // namespace cevian

#endif  // CEVIAN_SIMPLEX_H_
