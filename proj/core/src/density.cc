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

#include "cevian/density.h"

#include <cmath>

#include "cevian/error.h"

namespace cevian {

int RequiredDepth(double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must be positive and finite");
  }
  int k = 0;
  double bound = kSimplexDiameter;
  while (!(bound < epsilon)) {
    bound *= kContraction;
    ++k;
  }
  return k;
}

DensityCertificate Approximate(const AngleTriple& start,
                               const AngleTriple& target, double epsilon,
                               ApproximateOptions options) {
  const int k = RequiredDepth(epsilon);
  if (MinAngle(start) <= 0) {
    throw Error(ErrorCode::kDegenerateStart,
                "start triangle must be nondegenerate");
  }
  const MapWord full = PreimageWord(target, k);

  DensityCertificate cert{start, target, epsilon, full, 0, k};
  if (options.early_exit) {
    for (int len = 0; len <= k; ++len) {
      MapWord prefix(full.begin(), full.begin() + len);
      const double err = Distance(ApplyWord(prefix, start), target);
      if (err < epsilon) {
        cert.word = std::move(prefix);
        cert.achieved_error = err;
        return cert;
      }
    }
  }
  cert.achieved_error = Distance(ApplyWord(full, start), target);
  return cert;
}

bool Verify(const DensityCertificate& cert) {
  if (!(cert.epsilon > 0) || !std::isfinite(cert.epsilon)) return false;
  if (cert.k_bound != RequiredDepth(cert.epsilon)) return false;
  if (static_cast<int>(cert.word.size()) > cert.k_bound) return false;
  const double err = Distance(ApplyWord(cert.word, cert.start), cert.target);
  return std::abs(err - cert.achieved_error) <= 1e-12 && err < cert.epsilon;
}

}  // namespace cevian
