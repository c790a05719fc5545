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

#include "cevian/dynamics.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "cevian/error.h"

namespace cevian {
namespace {

// Runs task(0..num_tasks-1) on up to `threads` workers; rethrows the first
// failure.
void RunParallel(int num_tasks, ParallelOptions parallel,
                 const std::function<void(int)>& task) {
  int threads = parallel.threads > 0
                    ? parallel.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(num_tasks, 1));
  if (threads == 1) {
    for (int i = 0; i < num_tasks; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < num_tasks; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = num_tasks;
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

void RequireNondegenerate(const AngleTriple& start) {
  if (MinAngle(start) <= kDegenerateAngle) {
    throw Error(ErrorCode::kDegenerateTriangle,
                "start triangle " + FormatTriple(start) + " is degenerate");
  }
}

void RequireGeneration(int n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "generation must be >= 0");
  }
}

std::uint64_t PowerOfSix(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 6;
  return p;
}

bool IsIncenter(const CenterStrategy& s) {
  return s.kind() == CenterKind::kIncenter;
}

void VisitMaps(const AngleTriple& t, int depth,
               const std::function<void(const AngleTriple&)>& visit) {
  if (depth == 0) {
    visit(t);
    return;
  }
  for (MapIndex i : kAllMaps) VisitMaps(Apply(i, t), depth - 1, visit);
}

void VisitXY(const CenterStrategy& strategy, const TriangleXY& tri, int depth,
             const std::function<void(const AngleTriple&)>& visit) {
  if (depth == 0) {
    visit(AnglesOf(tri));
    return;
  }
  for (const TriangleXY& d : SubdivideXY(strategy, tri)) {
    VisitXY(strategy, Normalized(d), depth - 1, visit);
  }
}

// Depth-first over the subtree below first-level daughter `first`, or the
// whole tree when first < 0.
void VisitSubtree(const AngleTriple& start, const CenterStrategy& strategy,
                  int n, int first,
                  const std::function<void(const AngleTriple&)>& visit) {
  if (n == 0) {
    visit(start);
    return;
  }
  if (IsIncenter(strategy)) {
    if (first < 0) {
      VisitMaps(start, n, visit);
    } else {
      VisitMaps(Apply(kAllMaps[first], start), n - 1, visit);
    }
    return;
  }
  const TriangleXY root = VerticesFromAngles(start);
  if (first < 0) {
    VisitXY(strategy, root, n, visit);
  } else {
    VisitXY(strategy, Normalized(SubdivideXY(strategy, root)[first]), n - 1,
            visit);
  }
}

}  // namespace

std::vector<AngleTriple> EnumerateGeneration(const AngleTriple& start,
                                             const CenterStrategy& strategy,
                                             int n, EnumerationBudget budget,
                                             ParallelOptions parallel) {
  RequireGeneration(n);
  RequireNondegenerate(start);
  if (n > budget.max_materialized_generation) {
    throw Error(ErrorCode::kBudgetExceeded,
                "generation " + std::to_string(n) + " exceeds the budget of " +
                    std::to_string(budget.max_materialized_generation) +
                    "; use the streaming form");
  }
  if (n == 0) return {start};
  std::array<std::vector<AngleTriple>, 6> parts;
  RunParallel(6, parallel, [&](int first) {
    auto& part = parts[first];
    part.reserve(PowerOfSix(n - 1));
    VisitSubtree(start, strategy, n, first,
                 [&](const AngleTriple& t) { part.push_back(t); });
  });
  std::vector<AngleTriple> out;
  out.reserve(PowerOfSix(n));
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

void ForEachInGeneration(const AngleTriple& start,
                         const CenterStrategy& strategy, int n,
                         const std::function<void(const AngleTriple&)>& visit) {
  RequireGeneration(n);
  RequireNondegenerate(start);
  VisitSubtree(start, strategy, n, -1, visit);
}

std::vector<AngleTriple> SampleWalks(const AngleTriple& start,
                                     const CenterStrategy& strategy, int n,
                                     int m, std::uint64_t seed,
                                     ParallelOptions parallel) {
  RequireGeneration(n);
  RequireNondegenerate(start);
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 1");
  }
  std::vector<AngleTriple> out(m);
  const TriangleXY root =
      IsIncenter(strategy) ? TriangleXY{} : VerticesFromAngles(start);
  const auto total = static_cast<std::uint64_t>(m);
  RunParallel(kSampleStreams, parallel, [&](int stream) {
    const std::uint64_t begin = total * stream / kSampleStreams;
    const std::uint64_t end = total * (stream + 1) / kSampleStreams;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(stream));
    for (std::uint64_t s = begin; s < end; ++s) {
      if (n == 0) {
        out[s] = start;
      } else if (IsIncenter(strategy)) {
        AngleTriple t = start;
        for (int step = 0; step < n; ++step) {
          t = Apply(MapIndex(static_cast<int>(1 + rng() % 6)), t);
        }
        out[s] = t;
      } else {
        TriangleXY tri = root;
        for (int step = 0; step < n; ++step) {
          tri = Normalized(SubdivideXY(strategy, tri)[rng() % 6]);
        }
        out[s] = AnglesOf(tri);
      }
    }
  });
  return out;
}

HistogramGrid::HistogramGrid(int bins_per_side) : bins_(bins_per_side) {
  if (bins_per_side < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bins_per_side must be >= 1");
  }
  counts_.assign(static_cast<std::size_t>(bins_) * bins_, 0);
}

bool HistogramGrid::IsValid(const HistogramCell& cell) const {
  if (cell.row < 0 || cell.row >= bins_ || cell.col < 0) return false;
  const int ups = bins_ - cell.row;
  return cell.orientation == CellOrientation::kUp ? cell.col < ups
                                                  : cell.col < ups - 1;
}

std::size_t HistogramGrid::IndexOf(const HistogramCell& cell) const {
  if (!IsValid(cell)) {
    throw Error(ErrorCode::kInvalidArgument,
                "histogram cell (" + std::to_string(cell.row) + "," +
                    std::to_string(cell.col) + ") is outside the grid");
  }
  const std::size_t i = cell.row;
  const std::size_t row_offset = 2 * bins_ * i - i * i;
  return row_offset + 2 * cell.col +
         (cell.orientation == CellOrientation::kDown ? 1 : 0);
}

HistogramCell HistogramGrid::CellAt(std::size_t index) const {
  if (index >= counts_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cell index out of range");
  }
  int row = 0;
  std::size_t offset = 0;
  while (true) {
    const std::size_t width = 2 * (bins_ - row) - 1;
    if (index < offset + width) break;
    offset += width;
    ++row;
  }
  const std::size_t within = index - offset;
  return {row, static_cast<int>(within / 2),
          within % 2 == 0 ? CellOrientation::kUp : CellOrientation::kDown};
}

HistogramCell HistogramGrid::Locate(const AngleTriple& t) const {
  const double n = bins_;
  const double x = std::clamp(n * t.alpha() / kPi, 0.0, n);
  const double y = std::clamp(n * t.beta() / kPi, 0.0, n);
  const int row = std::clamp(static_cast<int>(std::ceil(x)) - 1, 0, bins_ - 1);
  const int col =
      std::clamp(static_cast<int>(std::ceil(y)) - 1, 0, bins_ - 1 - row);
  const bool down = x + y > row + col + 1 && row + col <= bins_ - 2;
  return {row, col, down ? CellOrientation::kDown : CellOrientation::kUp};
}

AngleTriple HistogramGrid::CellCenter(const HistogramCell& cell) const {
  const double offset =
      cell.orientation == CellOrientation::kUp ? 1.0 / 3 : 2.0 / 3;
  const double alpha = kPi * (cell.row + offset) / bins_;
  const double beta = kPi * (cell.col + offset) / bins_;
  return AngleTriple::Unchecked(alpha, beta, kPi - alpha - beta);
}

void HistogramGrid::AddCount(const HistogramCell& cell, std::uint64_t n) {
  counts_[IndexOf(cell)] += n;
  total_ += n;
}

void HistogramGrid::Merge(const HistogramGrid& other) {
  if (other.bins_ != bins_) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot merge histograms with different bins");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

HistogramCell HistogramGrid::ModalCell() const {
  const auto it = std::max_element(counts_.begin(), counts_.end());
  return CellAt(static_cast<std::size_t>(it - counts_.begin()));
}

HistogramGrid Histogram(std::span<const AngleTriple> samples,
                        int bins_per_side) {
  HistogramGrid grid(bins_per_side);
  for (const AngleTriple& t : samples) grid.Add(t);
  return grid;
}

std::vector<double> UniformThetaGrid(int points) {
  if (points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "theta grid needs >= 2 points");
  }
  std::vector<double> thetas(points);
  for (int k = 0; k < points; ++k) {
    thetas[k] = (kPi / 3) * k / (points - 1);
  }
  thetas.back() = kPi / 3;
  return thetas;
}

namespace {

void VisitRegions(
    MapWord& word, const Matrix3& m, int depth,
    const std::function<void(const MapWord&, const Matrix3&)>& visit) {
  if (depth == 0) {
    visit(word, m);
    return;
  }
  for (MapIndex i : kAllMaps) {
    word.push_back(i);
    VisitRegions(word, Multiply(m, MapMatrix(i)), depth - 1, visit);
    word.pop_back();
  }
}

}  // namespace

void ForEachRegion(
    int n, const std::function<void(const MapWord&, const Matrix3&)>& visit) {
  RequireGeneration(n);
  MapWord word;
  word.reserve(n);
  VisitRegions(word, WordMatrix({}), n, visit);
}

CdfBounds ComputeCdfBounds(int n, std::span<const double> thetas,
                           EnumerationBudget budget,
                           ParallelOptions parallel) {
  RequireGeneration(n);
  if (n > budget.max_region_generation) {
    throw Error(ErrorCode::kBudgetExceeded,
                "generation " + std::to_string(n) +
                    " exceeds the region budget of " +
                    std::to_string(budget.max_region_generation));
  }
  if (thetas.empty() || !std::is_sorted(thetas.begin(), thetas.end())) {
    throw Error(ErrorCode::kInvalidArgument,
                "theta grid must be nonempty and ascending");
  }
  const std::size_t g = thetas.size();

  // Tasks are the length-`split` prefixes; each counts into its own buckets.
  const int split = std::min(n, 2);
  const int tasks = static_cast<int>(PowerOfSix(split));
  std::vector<std::vector<std::uint64_t>> lower_hits(
      tasks, std::vector<std::uint64_t>(g + 1, 0));
  std::vector<std::vector<std::uint64_t>> upper_hits = lower_hits;

  RunParallel(tasks, parallel, [&](int task) {
    MapWord prefix;
    for (int k = split - 1, code = task; k >= 0; --k, code /= 6) {
      prefix.insert(prefix.begin(), MapIndex(1 + code % 6));
    }
    auto& lo = lower_hits[task];
    auto& up = upper_hits[task];
    MapWord word = prefix;
    VisitRegions(word, WordMatrix(prefix), n - split,
                 [&](const MapWord&, const Matrix3& m) {
                   const MinAngleBounds b =
                       RegionMinAngleBounds(RegionFromMatrix({}, m));
                   lo[std::lower_bound(thetas.begin(), thetas.end(),
                                       b.max_min) -
                      thetas.begin()]++;
                   up[std::lower_bound(thetas.begin(), thetas.end(),
                                       b.min_min) -
                      thetas.begin()]++;
                 });
  });

  CdfBounds out;
  out.generation = n;
  out.thetas.assign(thetas.begin(), thetas.end());
  out.lower_count.assign(g, 0);
  out.upper_count.assign(g, 0);
  std::uint64_t lo_run = 0;
  std::uint64_t up_run = 0;
  for (std::size_t k = 0; k < g; ++k) {
    for (int task = 0; task < tasks; ++task) {
      lo_run += lower_hits[task][k];
      up_run += upper_hits[task][k];
    }
    out.lower_count[k] = lo_run;
    out.upper_count[k] = up_run;
  }
  const double denom = static_cast<double>(PowerOfSix(n));
  out.lower.resize(g);
  out.upper.resize(g);
  for (std::size_t k = 0; k < g; ++k) {
    out.lower[k] = static_cast<double>(out.lower_count[k]) / denom;
    out.upper[k] = static_cast<double>(out.upper_count[k]) / denom;
  }
  return out;
}

double FlatnessFraction(const AngleTriple& start,
                        const CenterStrategy& strategy, int n, int m,
                        double delta, std::uint64_t seed,
                        ParallelOptions parallel) {
  if (!(delta > 0 && delta < kPi)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be in (0, pi)");
  }
  const auto samples = SampleWalks(start, strategy, n, m, seed, parallel);
  const auto flat =
      std::count_if(samples.begin(), samples.end(), [&](const AngleTriple& t) {
        return MaxAngle(t) > kPi - delta;
      });
  return static_cast<double>(flat) / m;
}

}  // namespace cevian
