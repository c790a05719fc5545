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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.h"

namespace cevian {
namespace {

constexpr double kTol = 1e-12;

void ExpectTripleNear(const AngleTriple& got, const AngleTriple& want,
                      double tol = kTol) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(got[i], want[i], tol) << "coordinate " << i << ": got "
                                      << FormatTriple(got) << " want "
                                      << FormatTriple(want);
  }
}

AngleTriple T(double a, double b, double c) {
  return AngleTriple::Unchecked(a * kPi, b * kPi, c * kPi);
}

MapWord W(std::string_view s) { return ParseWord(s); }

TEST(MapMatrixTest, UnitColumnSumsAndExactInverses) {
  for (MapIndex i : kAllMaps) {
    const Matrix3& m = MapMatrix(i);
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(m[0][c] + m[1][c] + m[2][c], 1.0);
    }
    const Matrix3 prod = Multiply(m, InverseMapMatrix(i));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        EXPECT_EQ(prod[r][c], r == c ? 1.0 : 0.0);
        // Inverse entries are integer multiples of 1/2.
        const double twice = 2 * InverseMapMatrix(i)[r][c];
        EXPECT_EQ(twice, std::round(twice));
      }
    }
  }
}

TEST(MapIndexTest, RejectsOutOfRange) {
  EXPECT_THROW(MapIndex(0), Error);
  EXPECT_THROW(MapIndex(7), Error);
  EXPECT_THROW(ParseWord("127"), Error);
  EXPECT_EQ(FormatWord(W("123456")), "123456");
}

TEST(ApplyTest, Examples) {
  ExpectTripleNear(Apply(MapIndex(1), T(1. / 3, 1. / 3, 1. / 3)),
                   T(1. / 6, 1. / 3, 1. / 2));
  ExpectTripleNear(Apply(MapIndex(3), T(0.2, 0.4, 0.4)), T(0.4, 0.2, 0.4));
  ExpectTripleNear(Apply(MapIndex(1), T(0.5, 0, 0.5)), T(0.25, 0.25, 0.5));
}

TEST(ApplyTest, PreservesSum) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 10000; ++k) {
    const AngleTriple t = testing::RandomTriple(rng);
    for (MapIndex i : kAllMaps) {
      const AngleTriple s = Apply(i, t);
      EXPECT_NEAR(s[0] + s[1] + s[2], kPi, kTol);
      EXPECT_GE(MinAngle(s), 0);
    }
  }
}

TEST(ApplyWordTest, Examples) {
  const AngleTriple t = T(0.1, 0.3, 0.6);
  EXPECT_EQ(ApplyWord({}, t), t);
  ExpectTripleNear(ApplyWord(W("123"), T(1, 0, 0)), T(0.25, 0.25, 0.5));
  ExpectTripleNear(ApplyWord(W("123"), T(0, 0, 1)), T(0.125, 0.125, 0.75));
}

TEST(ApplyWordTest, FoldsRightmostFirst) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> idx(1, 6);
  std::uniform_int_distribution<int> len(1, 12);
  for (int k = 0; k < 2000; ++k) {
    MapWord w;
    for (int j = len(rng); j > 0; --j) w.emplace_back(idx(rng));
    const AngleTriple t = testing::RandomTriple(rng);
    const MapWord rest(w.begin() + 1, w.end());
    ExpectTripleNear(ApplyWord(w, t), Apply(w.front(), ApplyWord(rest, t)));
    ExpectTripleNear(ApplyWord(w, t), Transform(WordMatrix(w), t), 1e-12);
  }
}

TEST(PreimageTest, TableMatchesBruteForce) {
  // Chamber -> map, from an independent brute-force check of which inverse
  // maps each ordering chamber into P.
  const std::vector<std::pair<Permutation, int>> expected = {
      {{0, 1, 2}, 1}, {{0, 2, 1}, 6}, {{1, 0, 2}, 2},
      {{1, 2, 0}, 3}, {{2, 0, 1}, 5}, {{2, 1, 0}, 4}};
  for (const auto& [order, index] : expected) {
    EXPECT_EQ(PreimageIndexFor(order).value(), index);
  }
}

TEST(PreimageTest, Examples) {
  Preimage p = PreimageStep(T(0.25, 0.25, 0.5));
  EXPECT_EQ(p.index.value(), 1);
  ExpectTripleNear(p.preimage, T(0.5, 0, 0.5));

  p = PreimageStep(T(1. / 6, 1. / 3, 1. / 2));
  EXPECT_EQ(p.index.value(), 1);
  ExpectTripleNear(p.preimage, T(1. / 3, 1. / 3, 1. / 3));

  p = PreimageStep(T(1. / 3, 1. / 3, 1. / 3));
  EXPECT_EQ(p.index.value(), 1);
  ExpectTripleNear(p.preimage, T(2. / 3, 0, 1. / 3));
}

TEST(PreimageTest, SortedCaseMatchesClosedForm) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10000; ++k) {
    const AngleTriple t = testing::RandomSortedTriple(rng);
    const Preimage p = PreimageStep(t);
    EXPECT_EQ(p.index.value(), 1);
    ExpectTripleNear(p.preimage,
                     AngleTriple::Unchecked(2 * t[0], 2 * t[1] - 2 * t[0],
                                            t[0] - t[1] + t[2]));
  }
}

TEST(PreimageTest, CoversP) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100000; ++k) {
    const AngleTriple t = testing::RandomTriple(rng);
    const Preimage p = PreimageStep(t);
    EXPECT_NO_THROW(MakeTriple(p.preimage[0], p.preimage[1], p.preimage[2]));
    ASSERT_LE(Distance(Apply(p.index, p.preimage), t), kTol);
  }
}

TEST(PreimageTest, BoundaryTiesAreDeterministic) {
  // (0, pi/2, pi/2): beta smallest, then alpha before gamma on the tie.
  const Preimage p = PreimageStep(T(0.5, 0, 0.5));
  EXPECT_EQ(p.index, PreimageIndexFor({1, 0, 2}));
  ExpectTripleNear(Apply(p.index, p.preimage), T(0.5, 0, 0.5));
}

TEST(PreimageWordTest, Examples) {
  EXPECT_TRUE(PreimageWord(T(0.2, 0.3, 0.5), 0).empty());
  EXPECT_EQ(FormatWord(PreimageWord(T(0.2, 0.3, 0.5), 1)), "1");

  const AngleTriple t = T(0.25, 0.25, 0.5);
  const MapWord w = PreimageWord(t, 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].value(), 1);
  EXPECT_EQ(w[1], PreimageIndexFor({1, 0, 2}));
  const Preimage first = PreimageStep(t);
  const Preimage second = PreimageStep(first.preimage);
  ExpectTripleNear(ApplyWord(w, second.preimage), t);
  EXPECT_THROW(PreimageWord(t, -1), Error);
}

TEST(PreimageWordTest, RecoversTargetAtDepth) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 500; ++k) {
    const AngleTriple t = testing::RandomTriple(rng);
    AngleTriple pre = t;
    const MapWord w = PreimageWord(t, 20);
    for (int j = 0; j < 20; ++j) pre = PreimageStep(pre).preimage;
    ExpectTripleNear(ApplyWord(w, pre), t, 1e-9);
  }
}

TEST(RegionImageTest, Examples) {
  RegionImage r = MakeRegionImage(W("123"));
  ExpectTripleNear(r.vertices[0], T(0.25, 0.25, 0.5));
  ExpectTripleNear(r.vertices[1], T(0.125, 0.25, 0.625));
  ExpectTripleNear(r.vertices[2], T(0.125, 0.125, 0.75));

  r = MakeRegionImage({});
  ExpectTripleNear(r.vertices[0], T(1, 0, 0));
  ExpectTripleNear(r.vertices[1], T(0, 1, 0));
  ExpectTripleNear(r.vertices[2], T(0, 0, 1));

  r = MakeRegionImage(W("1"));
  ExpectTripleNear(r.vertices[0], T(0.5, 0.5, 0));
  ExpectTripleNear(r.vertices[1], T(0, 0.5, 0.5));
  ExpectTripleNear(r.vertices[2], T(0, 0, 1));
}

// Barycentric coordinates of p in the embedded triangle.
std::array<double, 3> Barycentric(const RegionImage& r, const AngleTriple& t) {
  const PlanePoint2D a = Embed2D(r.vertices[0]);
  const PlanePoint2D b = Embed2D(r.vertices[1]);
  const PlanePoint2D c = Embed2D(r.vertices[2]);
  const PlanePoint2D p = Embed2D(t);
  const double det = (b.u - a.u) * (c.v - a.v) - (c.u - a.u) * (b.v - a.v);
  const double l1 = ((p.u - a.u) * (c.v - a.v) - (c.u - a.u) * (p.v - a.v)) / det;
  const double l2 = ((b.u - a.u) * (p.v - a.v) - (p.u - a.u) * (b.v - a.v)) / det;
  return {1 - l1 - l2, l1, l2};
}

TEST(RegionImageTest, PrefixRegionsNest) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> idx(1, 6);
  for (int k = 0; k < 2000; ++k) {
    MapWord w;
    for (int j = 0; j < 6; ++j) w.emplace_back(idx(rng));
    const RegionImage parent = MakeRegionImage(MapWord(w.begin(), w.end() - 1));
    const RegionImage child = MakeRegionImage(w);
    for (const AngleTriple& v : child.vertices) {
      for (double l : Barycentric(parent, v)) EXPECT_GE(l, -1e-12);
    }
  }
}

// Independent oracle: max and min of the min-angle over a fine barycentric
// lattice of the region.
MinAngleBounds SampledBounds(const RegionImage& r, int steps) {
  MinAngleBounds b{1e9, -1e9, false};
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const double l0 = double(i) / steps, l1 = double(j) / steps;
      const double l2 = 1 - l0 - l1;
      std::array<double, 3> c{};
      for (int k = 0; k < 3; ++k) {
        c[k] = l0 * r.vertices[0][k] + l1 * r.vertices[1][k] +
               l2 * r.vertices[2][k];
      }
      const double mn = std::min({c[0], c[1], c[2]});
      b.min_min = std::min(b.min_min, mn);
      b.max_min = std::max(b.max_min, mn);
    }
  }
  return b;
}

TEST(RegionBoundsTest, Examples) {
  MinAngleBounds b = RegionMinAngleBounds(MakeRegionImage(W("123")));
  EXPECT_NEAR(b.min_min, kPi / 8, kTol);
  EXPECT_GE(b.max_min, kPi / 4 - kTol);
  EXPECT_FALSE(b.degenerate);

  b = RegionMinAngleBounds(MakeRegionImage({}));
  EXPECT_EQ(b.min_min, 0);
  EXPECT_NEAR(b.max_min, kPi / 3, kTol);
}

TEST(RegionBoundsTest, AgreesWithDenseSampling) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> idx(1, 6);
  std::uniform_int_distribution<int> len(0, 4);
  for (int k = 0; k < 300; ++k) {
    MapWord w;
    for (int j = len(rng); j > 0; --j) w.emplace_back(idx(rng));
    const RegionImage r = MakeRegionImage(w);
    const MinAngleBounds exact = RegionMinAngleBounds(r);
    const MinAngleBounds sampled = SampledBounds(r, 300);
    EXPECT_LE(exact.min_min, exact.max_min);
    EXPECT_LE(exact.max_min, kPi / 3 + kTol);
    // Lattice contains the vertices, so min_min is matched exactly; max_min
    // is bracketed by the lattice resolution.
    EXPECT_NEAR(exact.min_min, sampled.min_min, kTol) << FormatWord(w);
    EXPECT_GE(exact.max_min, sampled.max_min - kTol) << FormatWord(w);
    EXPECT_LE(exact.max_min - sampled.max_min, kPi / 300) << FormatWord(w);
  }
}

TEST(RegionBoundsTest, FlagsCollinearVertices) {
  RegionImage r;
  r.vertices = {T(1, 0, 0), T(0.5, 0.5, 0), T(0, 1, 0)};
  const MinAngleBounds b = RegionMinAngleBounds(r);
  EXPECT_TRUE(b.degenerate);
  EXPECT_EQ(b.min_min, 0);
  EXPECT_EQ(b.max_min, 0);
}

TEST(ContractionTest, Examples) {
  // Equal beta: the defect vanishes and the bound is attained.
  const AngleTriple t = T(0.1, 0.3, 0.6);
  const AngleTriple s = T(0.4, 0.3, 0.3);
  EXPECT_NEAR(ContractionRatio(MapIndex(1), t, s), std::sqrt(3.0) / 2, kTol);
  EXPECT_NEAR(ContractionRatio(MapIndex(1), T(1, 0, 0), T(0, 1, 0)), 0.5,
              kTol);
  EXPECT_THROW(ContractionRatio(MapIndex(1), t, t), Error);
}

TEST(ContractionTest, BoundAndDefectIdentity) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20000; ++k) {
    const AngleTriple t = testing::RandomTriple(rng);
    const AngleTriple s = testing::RandomTriple(rng);
    for (MapIndex i : kAllMaps) {
      const double r = ContractionRatio(i, t, s);
      EXPECT_GT(r, 0);
      EXPECT_LE(r, kContraction + kTol);
    }
    const double d = Distance(t, s);
    const double dm = Distance(Apply(MapIndex(1), t), Apply(MapIndex(1), s));
    const double defect = 0.75 * d * d - dm * dm;
    const double db = t.beta() - s.beta();
    EXPECT_NEAR(defect, db * db, 1e-9 * std::max(1.0, d * d));
  }
}

TEST(SelfSimilarTest, IndicesExamples) {
  auto values = [](const std::vector<MapIndex>& v) {
    std::vector<int> out;
    for (MapIndex i : v) out.push_back(i.value());
    return out;
  };
  EXPECT_EQ(values(SelfSimilarIndices(T(0.2, 0.4, 0.4), 1e-9)),
            (std::vector<int>{3, 4}));
  EXPECT_EQ(values(SelfSimilarIndices(T(2. / 9, 3. / 9, 4. / 9), 1e-9)),
            (std::vector<int>{5}));
  EXPECT_TRUE(SelfSimilarIndices(T(1. / 3, 1. / 3, 1. / 3), 1e-9).empty());
}

TEST(SelfSimilarTest, SolveAllFindsExactlyTwoClasses) {
  const auto solutions = SolveAllSelfSimilar();
  for (const auto& s : solutions) {
    const AngleTriple image = Apply(s.index, s.triple);
    for (int r = 0; r < 3; ++r) {
      EXPECT_NEAR(image[s.permutation[r]], s.triple[r], 1e-12);
    }
    EXPECT_FALSE(Similar(s.triple, AngleTriple(), 1e-6));
  }
  const bool has_golden = std::any_of(
      solutions.begin(), solutions.end(), [](const SelfSimilarSolution& s) {
        return s.index.value() == 3 && s.permutation == Permutation{1, 0, 2} &&
               Distance(s.triple, T(0.2, 0.4, 0.4)) < 1e-12;
      });
  EXPECT_TRUE(has_golden);

  const auto classes = SimilarityClasses(solutions);
  ASSERT_EQ(classes.size(), 2u);
  ExpectTripleNear(classes[0], T(0.2, 0.4, 0.4), 1e-12);
  ExpectTripleNear(classes[1], T(2. / 9, 3. / 9, 4. / 9), 1e-12);
  // Brute force found 18 (map, permutation) pairs and 12 distinct
  // (map, triple) solutions.
  EXPECT_EQ(solutions.size(), 12u);
}

}  // namespace
}  // namespace cevian
