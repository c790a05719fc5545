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

#include "cevian/geometry.h"

#include <algorithm>
#include <cmath>

#include "cevian/error.h"

namespace cevian {
namespace {

Point2 Sub(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
double Cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
double Dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
double Length(Point2 p) { return std::hypot(p.x, p.y); }

double AngleAt(Point2 vertex, Point2 p, Point2 q) {
  const Point2 u = Sub(p, vertex);
  const Point2 v = Sub(q, vertex);
  return std::atan2(std::abs(Cross(u, v)), Dot(u, v));
}

// Intersection of the line from `from` through `through` with segment q-r.
Point2 CevianFoot(Point2 from, Point2 through, Point2 q, Point2 r) {
  const Point2 d = Sub(through, from);
  const Point2 e = Sub(r, q);
  const double denom = Cross(d, e);
  const double u = Cross(Sub(q, from), d) / denom;
  constexpr double kEdgeTol = 1e-9;
  if (!(u > kEdgeTol && u < 1 - kEdgeTol)) {
    throw Error(ErrorCode::kCevianFailure,
                "cevian foot outside its edge (parameter " + FormatReal(u) +
                    "); center is not interior");
  }
  return {q.x + u * e.x, q.y + u * e.y};
}

}  // namespace

CenterStrategy CenterStrategy::Weighted(double p0, double p1, double p2) {
  if (!(p0 > 0 && p1 > 0 && p2 > 0) || std::abs(p0 + p1 + p2 - 1) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "weights must be positive and sum to 1");
  }
  CenterStrategy s(CenterKind::kWeighted);
  s.weights_ = {p0, p1, p2};
  return s;
}

CenterStrategy CenterStrategy::FromName(std::string_view name) {
  if (name == "centroid") return Centroid();
  if (name == "incenter") return Incenter();
  if (name == "gergonne") return Gergonne();
  if (name == "lemoine") return Lemoine();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown strategy '" + std::string(name) + "'");
}

std::string CenterStrategy::name() const {
  switch (kind_) {
    case CenterKind::kCentroid:
      return "centroid";
    case CenterKind::kIncenter:
      return "incenter";
    case CenterKind::kGergonne:
      return "gergonne";
    case CenterKind::kLemoine:
      return "lemoine";
    case CenterKind::kWeighted:
      return "weighted(" + FormatReal(weights_[0]) + "," +
             FormatReal(weights_[1]) + "," + FormatReal(weights_[2]) + ")";
  }
  return "unknown";
}

CenterStrategy ParseStrategy(std::string_view name, std::string_view weights) {
  if (name == "weighted") {
    if (weights.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weighted strategy needs weights p0,p1,p2");
    }
    double p[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const std::size_t comma = weights.find(',', start);
      if ((i < 2) != (comma != std::string_view::npos)) {
        throw Error(ErrorCode::kParseError,
                    "weights must be three comma-separated numbers");
      }
      const std::string field(weights.substr(start, comma - start));
      try {
        std::size_t used = 0;
        p[i] = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad weight '" + field + "'");
      }
      start = comma + 1;
    }
    return CenterStrategy::Weighted(p[0], p[1], p[2]);
  }
  if (!weights.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weights only apply to the weighted strategy");
  }
  return CenterStrategy::FromName(name);
}

TriangleXY VerticesFromAngles(const AngleTriple& t) {
  if (MinAngle(t) <= kDegenerateAngle) {
    throw Error(ErrorCode::kDegenerateTriangle,
                "triangle " + FormatTriple(t) + " is degenerate");
  }
  const double b = std::sin(t.beta()) / std::sin(t.gamma());
  return {{0, 0}, {1, 0}, {b * std::cos(t.alpha()), b * std::sin(t.alpha())}};
}

AngleTriple AnglesOf(const TriangleXY& tri) {
  return MakeTriple(AngleAt(tri.a, tri.b, tri.c), AngleAt(tri.b, tri.c, tri.a),
                    AngleAt(tri.c, tri.a, tri.b));
}

double SignedArea(const TriangleXY& tri) {
  return 0.5 * Cross(Sub(tri.b, tri.a), Sub(tri.c, tri.a));
}

std::array<double, 3> BarycentricWeights(const CenterStrategy& strategy,
                                         const TriangleXY& tri) {
  const double a = Length(Sub(tri.c, tri.b));
  const double b = Length(Sub(tri.a, tri.c));
  const double c = Length(Sub(tri.b, tri.a));
  std::array<double, 3> w{};
  switch (strategy.kind()) {
    case CenterKind::kCentroid:
      w = {1, 1, 1};
      break;
    case CenterKind::kIncenter:
      w = {a, b, c};
      break;
    case CenterKind::kGergonne: {
      // s - a = (b + c - a) / 2, and so on.
      w = {2 / (b + c - a), 2 / (c + a - b), 2 / (a + b - c)};
      break;
    }
    case CenterKind::kLemoine:
      w = {a * a, b * b, c * c};
      break;
    case CenterKind::kWeighted:
      w = strategy.weights();
      break;
  }
  const double total = w[0] + w[1] + w[2];
  for (double& x : w) x /= total;
  return w;
}

Point2 CenterPoint(const CenterStrategy& strategy, const TriangleXY& tri) {
  const auto w = BarycentricWeights(strategy, tri);
  return {w[0] * tri.a.x + w[1] * tri.b.x + w[2] * tri.c.x,
          w[0] * tri.a.y + w[1] * tri.b.y + w[2] * tri.c.y};
}

std::array<TriangleXY, 6> SubdivideXY(const CenterStrategy& strategy,
                                      const TriangleXY& tri) {
  const Point2 x = CenterPoint(strategy, tri);
  const Point2 d = CevianFoot(tri.a, x, tri.b, tri.c);
  const Point2 e = CevianFoot(tri.b, x, tri.c, tri.a);
  const Point2 f = CevianFoot(tri.c, x, tri.a, tri.b);
  return {{
      {tri.a, f, x},
      {f, tri.b, x},
      {tri.b, d, x},
      {d, tri.c, x},
      {tri.c, e, x},
      {e, tri.a, x},
  }};
}

std::array<AngleTriple, 6> Subdivide(const CenterStrategy& strategy,
                                     const AngleTriple& t) {
  const auto daughters = SubdivideXY(strategy, VerticesFromAngles(t));
  std::array<AngleTriple, 6> out;
  std::transform(daughters.begin(), daughters.end(), out.begin(), AnglesOf);
  return out;
}

TriangleXY Normalized(const TriangleXY& tri) {
  const Point2 b = Sub(tri.b, tri.a);
  const Point2 c = Sub(tri.c, tri.a);
  const double scale =
      std::max({Length(b), Length(c), Length(Sub(tri.c, tri.b))});
  return {{0, 0}, {b.x / scale, b.y / scale}, {c.x / scale, c.y / scale}};
}

}  // namespace cevian
