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

// Iterated subdivision statistics: full generation enumeration, Monte-Carlo
// walks toward the limiting distribution, triangular histograms over P,
// bounds on the CDF of the smallest angle, and flatness fractions.
//
// Incenter subdivision runs on the exact linear maps; the other strategies run
// the Cartesian engine, carrying a normalized TriangleXY so long chains never
// pass through the angle-space degeneracy guard.
//
// Reproducibility: a sampling run with seed S uses kSampleStreams streams;
// stream j is a std::mt19937_64 seeded with S + j and produces a contiguous
// block of the m walks. Each step picks daughter 1 + (draw mod 6). Results do
// not depend on the thread count.

#ifndef CEVIAN_DYNAMICS_H_
#define CEVIAN_DYNAMICS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "cevian/geometry.h"
#include "cevian/maps.h"
#include "cevian/simplex.h"

namespace cevian {

inline constexpr std::string_view kGeneratorName = "mt19937_64";
inline constexpr int kSampleStreams = 64;

struct EnumerationBudget {
  // 6^n triples held in memory by EnumerateGeneration.
  int max_materialized_generation = 9;
  // 6^n region images visited by CdfBounds.
  int max_region_generation = 8;
};

// 0 means std::thread::hardware_concurrency().
struct ParallelOptions {
  int threads = 0;
};

// Daughters after n subdivisions, with multiplicity, in depth-first order of
// daughter choices (first subdivision outermost). Throws
// Error(kDegenerateTriangle) for a degenerate start and
// Error(kBudgetExceeded) when n exceeds the budget.
std::vector<AngleTriple> EnumerateGeneration(const AngleTriple& start,
                                             const CenterStrategy& strategy,
                                             int n,
                                             EnumerationBudget budget = {},
                                             ParallelOptions parallel = {});

// Streaming form without a budget; same order, single-threaded.
void ForEachInGeneration(const AngleTriple& start,
                         const CenterStrategy& strategy, int n,
                         const std::function<void(const AngleTriple&)>& visit);

// m independent walks of n uniformly random subdivision steps.
std::vector<AngleTriple> SampleWalks(const AngleTriple& start,
                                     const CenterStrategy& strategy, int n,
                                     int m, std::uint64_t seed,
                                     ParallelOptions parallel = {});

enum class CellOrientation { kUp, kDown };

// Cell of the triangular grid over P. Row is the alpha band
// (floor-like index of N alpha / pi), col the beta band; within a row the
// upright cell (col) touches the lower-left, the inverted one sits between
// upright cells col and col + 1.
struct HistogramCell {
  int row = 0;
  int col = 0;
  CellOrientation orientation = CellOrientation::kUp;

  friend bool operator==(const HistogramCell&, const HistogramCell&) = default;
};

// N^2 cells tiling P: row r holds N - r upright and N - r - 1 inverted cells.
// Points on a shared cell boundary go to the cell with the smaller index
// (lower row, lower column, upright before inverted).
class HistogramGrid {
 public:
  explicit HistogramGrid(int bins_per_side);

  int bins_per_side() const { return bins_; }
  std::uint64_t total() const { return total_; }
  std::size_t cell_count() const { return counts_.size(); }
  std::span<const std::uint64_t> counts() const { return counts_; }

  std::size_t IndexOf(const HistogramCell& cell) const;
  HistogramCell CellAt(std::size_t index) const;
  bool IsValid(const HistogramCell& cell) const;

  HistogramCell Locate(const AngleTriple& t) const;
  AngleTriple CellCenter(const HistogramCell& cell) const;

  std::uint64_t count(const HistogramCell& cell) const {
    return counts_[IndexOf(cell)];
  }

  void Add(const AngleTriple& t) { AddCount(Locate(t), 1); }
  void AddCount(const HistogramCell& cell, std::uint64_t n);
  // Requires equal bins_per_side.
  void Merge(const HistogramGrid& other);

  // Lowest-index cell with the largest count.
  HistogramCell ModalCell() const;

  friend bool operator==(const HistogramGrid&, const HistogramGrid&) = default;

 private:
  int bins_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

HistogramGrid Histogram(std::span<const AngleTriple> samples,
                        int bins_per_side);

struct CdfBounds {
  int generation = 0;
  std::vector<double> thetas;
  std::vector<double> lower;
  std::vector<double> upper;
  // Exact numerators of lower/upper over 6^generation.
  std::vector<std::uint64_t> lower_count;
  std::vector<std::uint64_t> upper_count;
};

// `points` uniform values on [0, pi/3], endpoints included.
std::vector<double> UniformThetaGrid(int points = 512);

// Visits every word of length n with its product matrix, depth first in
// lexicographic word order.
void ForEachRegion(
    int n, const std::function<void(const MapWord&, const Matrix3&)>& visit);

// lower(theta) = #{words : max_min <= theta} / 6^n and
// upper(theta) = #{words : min_min <= theta} / 6^n over all 6^n regions.
// thetas must be ascending. Throws Error(kBudgetExceeded) past the budget.
CdfBounds ComputeCdfBounds(int n, std::span<const double> thetas,
                           EnumerationBudget budget = {},
                           ParallelOptions parallel = {});

// Fraction of m sampled n-th generation daughters whose largest angle exceeds
// pi - delta. delta must be in (0, pi).
double FlatnessFraction(const AngleTriple& start,
                        const CenterStrategy& strategy, int n, int m,
                        double delta, std::uint64_t seed,
                        ParallelOptions parallel = {});

}  // namespace cevian

#endif  // CEVIAN_DYNAMICS_H_
