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

// Constructive approximation of a target triangle by incenter subdivision.
//
// Running preimages of the target k steps back gives a word w with
// |w start - target| <= (sqrt(3)/2)^k |start - t_k| <= (sqrt(3)/2)^k D, where D
// is the ambient diameter of P. Choosing k with D (sqrt(3)/2)^k < epsilon makes
// the daughter w(start) an epsilon-approximation, for any start.

#ifndef CEVIAN_DENSITY_H_
#define CEVIAN_DENSITY_H_

#include "cevian/maps.h"
#include "cevian/simplex.h"

namespace cevian {

struct DensityCertificate {
  AngleTriple start;
  AngleTriple target;
  double epsilon = 0;
  MapWord word;
  double achieved_error = 0;
  int k_bound = 0;
};

// Smallest k >= 0 with kSimplexDiameter * (sqrt(3)/2)^k < epsilon. Throws
// Error(kInvalidArgument) unless epsilon > 0.
int RequiredDepth(double epsilon);

struct ApproximateOptions {
  // Stop at the first prefix of the preimage word whose error is < epsilon.
  bool early_exit = true;
};

// Throws Error(kDegenerateStart) if start has a zero angle and
// Error(kInvalidArgument) unless epsilon > 0.
DensityCertificate Approximate(const AngleTriple& start,
                               const AngleTriple& target, double epsilon,
                               ApproximateOptions options = {});

// Recomputes the error from scratch. True iff the stored error matches
// (1e-12), it is below epsilon, the word fits in k_bound and k_bound is the
// a-priori depth for epsilon.
bool Verify(const DensityCertificate& cert);

}  // namespace cevian

#endif  // CEVIAN_DENSITY_H_
