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

// The six linear maps of incenter subdivision.
//
// Cutting a triangle t = (alpha, beta, gamma) along its three angle bisectors
// yields six daughters whose angles are linear in t: daughter i is M_i t. Each
// M_i has entries in {0, 1/2, 1} and unit column sums, so it maps P into P,
// and it contracts ambient distances by at least sqrt(3)/2. The images M_i P
// cover P, which makes every triangle reachable to arbitrary precision by
// running preimages backwards.
//
// A MapWord [i1, ..., ik] denotes the product M_i1 M_i2 ... M_ik; acting on a
// triple, the rightmost map is applied first.

#ifndef CEVIAN_MAPS_H_
#define CEVIAN_MAPS_H_

#include <array>
#include <compare>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "cevian/error.h"
#include "cevian/simplex.h"

namespace cevian {

class MapIndex {
 public:
  constexpr explicit MapIndex(int i) : i_(i) {
    if (i < 1 || i > 6) {
      throw Error(ErrorCode::kInvalidArgument,
                  "map index must be in 1..6, got " + std::to_string(i));
    }
  }
  constexpr int value() const { return i_; }
  friend constexpr auto operator<=>(MapIndex, MapIndex) = default;

 private:
  int i_;
};

inline constexpr std::array<MapIndex, 6> kAllMaps = {
    MapIndex(1), MapIndex(2), MapIndex(3),
    MapIndex(4), MapIndex(5), MapIndex(6)};

using MapWord = std::vector<MapIndex>;

// Row-major 3x3.
using Matrix3 = std::array<std::array<double, 3>, 3>;

// (sigma t)[r] = t[sigma[r]].
using Permutation = std::array<int, 3>;

const Matrix3& MapMatrix(MapIndex i);
// Exact: every entry is a small multiple of 1/2.
const Matrix3& InverseMapMatrix(MapIndex i);
// M_i1 M_i2 ... M_ik; identity for the empty word.
Matrix3 WordMatrix(const MapWord& w);

Matrix3 Multiply(const Matrix3& a, const Matrix3& b);
AngleTriple Transform(const Matrix3& m, const AngleTriple& t);

AngleTriple Apply(MapIndex i, const AngleTriple& t);
AngleTriple ApplyWord(const MapWord& w, const AngleTriple& t);

// "123" <-> [1, 2, 3]. Throws Error(kParseError) on other characters.
std::string FormatWord(const MapWord& w);
MapWord ParseWord(std::string_view text);

struct Preimage {
  MapIndex index;
  AngleTriple preimage;
};

// Returns (i, s) with s in P and M_i s = t. The index depends only on the
// ordering of t's coordinates, ties broken in favour of the earlier
// coordinate.
Preimage PreimageStep(const AngleTriple& t);

// The ordering -> map table used by PreimageStep, keyed by the stable
// ascending argsort of a triple (ties: lower coordinate index first).
MapIndex PreimageIndexFor(const Permutation& ascending_order);

// [i1, ..., ik] from k successive preimage steps, so that
// ApplyWord(w, t_k) == t where t_k is the k-th preimage.
MapWord PreimageWord(const AngleTriple& t, int k);

// Images of the corners (pi,0,0), (0,pi,0), (0,0,pi) of P under the word. The
// region w P is exactly their convex hull.
struct RegionImage {
  MapWord word;
  std::array<AngleTriple, 3> vertices;
};

RegionImage MakeRegionImage(const MapWord& w);
RegionImage RegionFromMatrix(const MapWord& w, const Matrix3& m);

struct MinAngleBounds {
  double min_min = 0;  // smallest minimum angle over the region
  double max_min = 0;  // largest minimum angle over the region
  bool degenerate = false;  // vertices collinear; bounds are over the segment
};

// Exact over the region: min_min is attained at a vertex; max_min at a vertex,
// at an intersection of an edge with one of the loci alpha=beta, beta=gamma,
// alpha=gamma, or at the equilateral point if it lies inside.
MinAngleBounds RegionMinAngleBounds(const RegionImage& r);

// |M_i t - M_i s| / |t - s|. Never exceeds sqrt(3)/2. Throws
// Error(kInvalidArgument) when t == s.
double ContractionRatio(MapIndex i, const AngleTriple& t, const AngleTriple& s);

inline constexpr double kContraction = std::numbers::sqrt3 / 2;

// { i : M_i t is similar to t within tol }, ascending.
std::vector<MapIndex> SelfSimilarIndices(const AngleTriple& t, double tol);

struct SelfSimilarSolution {
  MapIndex index;
  Permutation permutation;  // sigma with sigma(M_i t) == t
  AngleTriple triple;
};

// Solves sigma M_i t = t over all 36 (i, sigma) pairs for interior t. One
// entry per (i, triple); a triple fixed by several permutations of the same
// map is reported with the first one in lexicographic order.
std::vector<SelfSimilarSolution> SolveAllSelfSimilar();

// Distinct similarity classes (sorted triples) among the solutions.
std::vector<AngleTriple> SimilarityClasses(
    const std::vector<SelfSimilarSolution>& solutions, double tol = 1e-8);

}  // namespace cevian

#endif  // CEVIAN_MAPS_H_
