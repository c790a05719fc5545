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

// Cevian subdivision in Cartesian coordinates for an arbitrary interior
// point.
//
// The centers are computed from normalized barycentric coordinates on the
// vertices (A, B, C), with a, b, c the side lengths opposite them and s the
// semiperimeter:
//
//   centroid   1 : 1 : 1
//   incenter   a : b : c
//   gergonne   1/(s-a) : 1/(s-b) : 1/(s-c)   (cevians to the incircle contact
//                                             points)
//   lemoine    a^2 : b^2 : c^2               (medians reflected in the angle
//                                             bisectors)
//   weighted   p0 : p1 : p2
//
// The Gergonne and Lemoine rows are the standard closed forms of the
// contact-point and reflected-median constructions.

#ifndef CEVIAN_GEOMETRY_H_
#define CEVIAN_GEOMETRY_H_

#include <array>
#include <string>
#include <string_view>

#include "cevian/simplex.h"

namespace cevian {

enum class CenterKind { kCentroid, kIncenter, kGergonne, kLemoine, kWeighted };

class CenterStrategy {
 public:
  static CenterStrategy Centroid() { return CenterStrategy(CenterKind::kCentroid); }
  static CenterStrategy Incenter() { return CenterStrategy(CenterKind::kIncenter); }
  static CenterStrategy Gergonne() { return CenterStrategy(CenterKind::kGergonne); }
  static CenterStrategy Lemoine() { return CenterStrategy(CenterKind::kLemoine); }
  // Each weight > 0 and p0 + p1 + p2 == 1 within 1e-9, otherwise throws
  // Error(kInvalidArgument).
  static CenterStrategy Weighted(double p0, double p1, double p2);

  // Named kinds only; "weighted" needs weights, see ParseStrategy.
  static CenterStrategy FromName(std::string_view name);

  CenterKind kind() const { return kind_; }
  // Meaningful for kWeighted only.
  const std::array<double, 3>& weights() const { return weights_; }

  // "incenter", or "weighted(p0,p1,p2)".
  std::string name() const;

  friend bool operator==(const CenterStrategy&,
                         const CenterStrategy&) = default;

 private:
  explicit CenterStrategy(CenterKind kind) : kind_(kind) {}

  CenterKind kind_;
  std::array<double, 3> weights_ = {1.0 / 3, 1.0 / 3, 1.0 / 3};
};

// Accepts the five kind names; `weights` ("p0,p1,p2") is required for
// "weighted" and rejected otherwise.
CenterStrategy ParseStrategy(std::string_view name,
                             std::string_view weights = {});

struct Point2 {
  double x = 0;
  double y = 0;
};

struct TriangleXY {
  Point2 a;
  Point2 b;
  Point2 c;
};

// Angles at or below this are treated as degenerate.
inline constexpr double kDegenerateAngle = 1e-9;

// A = (0,0), B = (1,0), C = (b cos alpha, b sin alpha) with
// b = sin(beta) / sin(gamma). Throws Error(kDegenerateTriangle) if some angle
// is <= kDegenerateAngle.
TriangleXY VerticesFromAngles(const AngleTriple& t);

// Interior angles at a, b, c. Invariant under similarity transforms.
AngleTriple AnglesOf(const TriangleXY& tri);

double SignedArea(const TriangleXY& tri);

// Normalized barycentric coordinates of the strategy's center.
std::array<double, 3> BarycentricWeights(const CenterStrategy& strategy,
                                         const TriangleXY& tri);

Point2 CenterPoint(const CenterStrategy& strategy, const TriangleXY& tri);

// The six daughters A-F-X, F-B-X, B-D-X, D-C-X, C-E-X, E-A-X, where X is the
// center and D, E, F are the feet of the cevians through X on BC, CA, AB.
// Throws Error(kCevianFailure) if a foot is not strictly inside its edge.
std::array<TriangleXY, 6> SubdivideXY(const CenterStrategy& strategy,
                                      const TriangleXY& tri);

// Same, as angle triples (angles listed in the daughter's vertex order).
std::array<AngleTriple, 6> Subdivide(const CenterStrategy& strategy,
                                     const AngleTriple& t);

// Translates a to the origin and scales the longest edge to 1. Used to keep
// long subdivision chains well scaled.
TriangleXY Normalized(const TriangleXY& tri);

}  // namespace cevian

#endif  // CEVIAN_GEOMETRY_H_
