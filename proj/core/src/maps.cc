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

#include "cevian/maps.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cevian {
namespace {

constexpr std::array<Matrix3, 6> kMaps = {{
    {{{0.5, 0, 0}, {0.5, 0.5, 0}, {0, 0.5, 1}}},
    {{{0.5, 0.5, 0}, {0, 0.5, 0}, {0.5, 0, 1}}},
    {{{1, 0, 0.5}, {0, 0.5, 0}, {0, 0.5, 0.5}}},
    {{{1, 0.5, 0}, {0, 0.5, 0.5}, {0, 0, 0.5}}},
    {{{0.5, 0, 0.5}, {0.5, 1, 0}, {0, 0, 0.5}}},
    {{{0.5, 0, 0}, {0, 1, 0.5}, {0.5, 0, 0.5}}},
}};

constexpr Matrix3 kIdentity = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

// Adjugate over determinant. With entries in {0, 1/2, 1} the determinant is a
// power of two, so the division is exact.
Matrix3 Invert(const Matrix3& m) {
  const auto& a = m;
  Matrix3 adj;
  adj[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  adj[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
  adj[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
  adj[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  adj[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
  adj[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
  adj[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  adj[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
  adj[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double det =
      a[0][0] * adj[0][0] + a[0][1] * adj[1][0] + a[0][2] * adj[2][0];
  for (auto& row : adj) {
    for (double& x : row) x /= det;
  }
  return adj;
}

const std::array<Matrix3, 6>& Inverses() {
  static const std::array<Matrix3, 6> inv = [] {
    std::array<Matrix3, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = Invert(kMaps[i]);
    return out;
  }();
  return inv;
}

int PermutationCode(const Permutation& p) {
  return p[0] * 9 + p[1] * 3 + p[2];
}

Permutation AscendingOrder(const AngleTriple& t) {
  Permutation p = {0, 1, 2};
  std::stable_sort(p.begin(), p.end(),
                   [&](int a, int b) { return t[a] < t[b]; });
  return p;
}

// For each ordering chamber {t[p0] <= t[p1] <= t[p2]} find the inverse map
// sending the whole chamber into P. The chamber is the triangle spanned by
// the corner, edge midpoint and centre below, and the inverses are linear, so
// checking those three points suffices.
struct PreimageTable {
  std::array<int, 27> index_by_code{};

  PreimageTable() {
    std::array<int, 3> p = {0, 1, 2};
    do {
      const std::array<std::array<double, 3>, 3> sorted_vertices = {{
          {0, 0, kPi},
          {0, kPi / 2, kPi / 2},
          {kPi / 3, kPi / 3, kPi / 3},
      }};
      std::vector<int> found;
      for (int i = 0; i < 6; ++i) {
        bool inside = true;
        for (const auto& sv : sorted_vertices) {
          std::array<double, 3> c{};
          for (int k = 0; k < 3; ++k) c[p[k]] = sv[k];
          const AngleTriple pre = Transform(
              Inverses()[i], AngleTriple::Unchecked(c[0], c[1], c[2]));
          if (MinAngle(pre) < -1e-12) inside = false;
        }
        if (inside) found.push_back(i + 1);
      }
      if (found.size() != 1) {
        throw std::logic_error("preimage table: ordering chamber is not "
                               "covered by exactly one map");
      }
      index_by_code[PermutationCode(p)] = found.front();
    } while (std::next_permutation(p.begin(), p.end()));
  }
};

const PreimageTable& Table() {
  static const PreimageTable table;
  return table;
}

}  // namespace

const Matrix3& MapMatrix(MapIndex i) { return kMaps[i.value() - 1]; }

const Matrix3& InverseMapMatrix(MapIndex i) {
  return Inverses()[i.value() - 1];
}

Matrix3 Multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c] + a[r][2] * b[2][c];
    }
  }
  return out;
}

Matrix3 WordMatrix(const MapWord& w) {
  Matrix3 m = kIdentity;
  for (MapIndex i : w) m = Multiply(m, MapMatrix(i));
  return m;
}

AngleTriple Transform(const Matrix3& m, const AngleTriple& t) {
  return AngleTriple::Unchecked(
      m[0][0] * t[0] + m[0][1] * t[1] + m[0][2] * t[2],
      m[1][0] * t[0] + m[1][1] * t[1] + m[1][2] * t[2],
      m[2][0] * t[0] + m[2][1] * t[1] + m[2][2] * t[2]);
}

AngleTriple Apply(MapIndex i, const AngleTriple& t) {
  return Transform(MapMatrix(i), t);
}

AngleTriple ApplyWord(const MapWord& w, const AngleTriple& t) {
  AngleTriple out = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = Apply(*it, out);
  return out;
}

std::string FormatWord(const MapWord& w) {
  std::string s;
  s.reserve(w.size());
  for (MapIndex i : w) s += static_cast<char>('0' + i.value());
  return s;
}

MapWord ParseWord(std::string_view text) {
  MapWord w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '6') {
      throw Error(ErrorCode::kParseError,
                  "map word must use digits 1-6, got '" + std::string(text) +
                      "'");
    }
    w.emplace_back(c - '0');
  }
  return w;
}

MapIndex PreimageIndexFor(const Permutation& ascending_order) {
  return MapIndex(Table().index_by_code[PermutationCode(ascending_order)]);
}

Preimage PreimageStep(const AngleTriple& t) {
  const MapIndex i = PreimageIndexFor(AscendingOrder(t));
  const AngleTriple raw = Transform(InverseMapMatrix(i), t);
  // Boundary points can come back a few ulps outside P.
  std::array<double, 3> c = raw.coords();
  for (double& x : c) x = std::max(x, 0.0);
  return {i, AngleTriple::Unchecked(c[0], c[1], c[2])};
}

MapWord PreimageWord(const AngleTriple& t, int k) {
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "preimage depth must be >= 0");
  }
  MapWord w;
  w.reserve(k);
  AngleTriple current = t;
  for (int step = 0; step < k; ++step) {
    const Preimage p = PreimageStep(current);
    w.push_back(p.index);
    current = p.preimage;
  }
  return w;
}

RegionImage RegionFromMatrix(const MapWord& w, const Matrix3& m) {
  RegionImage r{w, {}};
  for (int c = 0; c < 3; ++c) {
    r.vertices[c] = AngleTriple::Unchecked(kPi * m[0][c], kPi * m[1][c],
                                           kPi * m[2][c]);
  }
  return r;
}

RegionImage MakeRegionImage(const MapWord& w) {
  return RegionFromMatrix(w, WordMatrix(w));
}

MinAngleBounds RegionMinAngleBounds(const RegionImage& r) {
  const auto& v = r.vertices;
  MinAngleBounds out;
  out.min_min = std::min({MinAngle(v[0]), MinAngle(v[1]), MinAngle(v[2])});
  out.max_min = std::max({MinAngle(v[0]), MinAngle(v[1]), MinAngle(v[2])});

  const PlanePoint2D p0 = Embed2D(v[0]);
  const PlanePoint2D p1 = Embed2D(v[1]);
  const PlanePoint2D p2 = Embed2D(v[2]);
  const double e01u = p1.u - p0.u, e01v = p1.v - p0.v;
  const double e02u = p2.u - p0.u, e02v = p2.v - p0.v;
  const double cross = e01u * e02v - e01v * e02u;
  double longest = 0;
  for (int a = 0; a < 3; ++a) {
    longest = std::max(longest, Distance(v[a], v[(a + 1) % 3]));
  }
  out.degenerate = std::abs(cross) <= 1e-12 * longest * longest;

  // Edge crossings of the loci x_i == x_j.
  for (int a = 0; a < 3; ++a) {
    const AngleTriple& va = v[a];
    const AngleTriple& vb = v[(a + 1) % 3];
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const double da = va[i] - va[j];
      const double db = vb[i] - vb[j];
      if (da == db) continue;
      const double s = da / (da - db);
      if (!(s >= 0 && s <= 1)) continue;
      const AngleTriple q = AngleTriple::Unchecked(
          va[0] + s * (vb[0] - va[0]), va[1] + s * (vb[1] - va[1]),
          va[2] + s * (vb[2] - va[2]));
      out.max_min = std::max(out.max_min, MinAngle(q));
    }
  }

  // Equilateral point, via barycentric coordinates in the embedding.
  if (!out.degenerate) {
    const PlanePoint2D e = Embed2D(AngleTriple());
    const double qu = e.u - p0.u, qv = e.v - p0.v;
    const double l1 = (qu * e02v - qv * e02u) / cross;
    const double l2 = (e01u * qv - e01v * qu) / cross;
    const double eps = 1e-12;
    if (l1 >= -eps && l2 >= -eps && l1 + l2 <= 1 + eps) {
      out.max_min = kPi / 3;
    }
  }
  out.max_min = std::min(out.max_min, kPi / 3);
  return out;
}

double ContractionRatio(MapIndex i, const AngleTriple& t,
                        const AngleTriple& s) {
  const double d = Distance(t, s);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "contraction ratio needs two distinct triples");
  }
  return Distance(Apply(i, t), Apply(i, s)) / d;
}

std::vector<MapIndex> SelfSimilarIndices(const AngleTriple& t, double tol) {
  std::vector<MapIndex> out;
  for (MapIndex i : kAllMaps) {
    if (Similar(Apply(i, t), t, tol)) out.push_back(i);
  }
  return out;
}

std::vector<SelfSimilarSolution> SolveAllSelfSimilar() {
  constexpr double kResidualTol = 1e-10;
  constexpr double kDedupTol = 1e-8;
  std::vector<SelfSimilarSolution> out;
  for (MapIndex i : kAllMaps) {
    const Matrix3& m = MapMatrix(i);
    Permutation sigma = {0, 1, 2};
    do {
      Matrix3 a;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          a[r][c] = m[sigma[r]][c] - (r == c ? 1.0 : 0.0);
        }
      }
      // A 3x3 system of rank 2 has its kernel spanned by the cross product of
      // any two independent rows; take the best-conditioned pair.
      std::array<double, 3> best{};
      double best_norm = 0;
      for (int r0 = 0; r0 < 3; ++r0) {
        const auto& x = a[r0];
        const auto& y = a[(r0 + 1) % 3];
        const std::array<double, 3> n = {x[1] * y[2] - x[2] * y[1],
                                         x[2] * y[0] - x[0] * y[2],
                                         x[0] * y[1] - x[1] * y[0]};
        const double norm = std::hypot(n[0], n[1], n[2]);
        if (norm > best_norm) {
          best_norm = norm;
          best = n;
        }
      }
      if (best_norm <= kResidualTol) {
        // Kernel of dimension >= 2 would make the fixed set a continuum.
        throw std::logic_error("self-similarity system has rank below 2");
      }
      for (double& x : best) x /= best_norm;
      double residual = 0;
      for (int r = 0; r < 3; ++r) {
        residual = std::max(residual, std::abs(a[r][0] * best[0] +
                                               a[r][1] * best[1] +
                                               a[r][2] * best[2]));
      }
      const double sum = best[0] + best[1] + best[2];
      if (residual <= kResidualTol && std::abs(sum) > kResidualTol) {
        const AngleTriple t = AngleTriple::Unchecked(
            kPi * best[0] / sum, kPi * best[1] / sum, kPi * best[2] / sum);
        if (MinAngle(t) > kResidualTol) {
          const bool duplicate = std::any_of(
              out.begin(), out.end(), [&](const SelfSimilarSolution& s) {
                return s.index == i && Distance(s.triple, t) <= kDedupTol;
              });
          if (!duplicate) out.push_back({i, sigma, t});
        }
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

std::vector<AngleTriple> SimilarityClasses(
    const std::vector<SelfSimilarSolution>& solutions, double tol) {
  std::vector<AngleTriple> classes;
  for (const auto& s : solutions) {
    const AngleTriple key = Sorted(s.triple);
    const bool seen =
        std::any_of(classes.begin(), classes.end(),
                    [&](const AngleTriple& c) { return Similar(c, key, tol); });
    if (!seen) classes.push_back(key);
  }
  std::sort(classes.begin(), classes.end(),
            [](const AngleTriple& a, const AngleTriple& b) {
              return a.coords() < b.coords();
            });
  return classes;
}

}  // namespace cevian
