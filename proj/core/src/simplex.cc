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

#include "cevian/simplex.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "cevian/error.h"

namespace cevian {

bool AngleTriple::is_degenerate() const {
  return c_[0] == 0 || c_[1] == 0 || c_[2] == 0;
}

AngleTriple MakeTriple(double alpha, double beta, double gamma) {
  std::array<double, 3> c = {alpha, beta, gamma};
  for (double x : c) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFinite, "angle is not finite");
    }
  }
  const double sum = c[0] + c[1] + c[2];
  if (std::abs(sum - kPi) > kSumTolerance) {
    throw Error(ErrorCode::kSumViolation,
                "angles sum to " + FormatReal(sum) + ", expected pi");
  }
  for (double& x : c) {
    if (x < -kSumTolerance) {
      throw Error(ErrorCode::kNegativeAngle,
                  "negative angle " + FormatReal(x));
    }
    if (x < 0) x = 0;
  }
  return AngleTriple::Unchecked(c[0], c[1], c[2]);
}

double MinAngle(const AngleTriple& t) {
  return std::min({t.alpha(), t.beta(), t.gamma()});
}

double MaxAngle(const AngleTriple& t) {
  return std::max({t.alpha(), t.beta(), t.gamma()});
}

double Distance(const AngleTriple& t, const AngleTriple& s) {
  const double d0 = t[0] - s[0];
  const double d1 = t[1] - s[1];
  const double d2 = t[2] - s[2];
  return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
}

PlanePoint2D Embed2D(const AngleTriple& t) {
  return {(t.alpha() + 2 * t.beta()) / std::numbers::sqrt3, t.alpha()};
}

AngleTriple Sorted(const AngleTriple& t) {
  std::array<double, 3> c = t.coords();
  std::sort(c.begin(), c.end());
  return AngleTriple::Unchecked(c[0], c[1], c[2]);
}

bool Similar(const AngleTriple& t, const AngleTriple& s, double tol) {
  const AngleTriple a = Sorted(t);
  const AngleTriple b = Sorted(s);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(std::abs(a[i] - b[i]) <= tol)) return false;
  }
  return true;
}

std::string FormatReal(double x) {
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, end);
}

std::string FormatTriple(const AngleTriple& t) {
  return FormatReal(t[0]) + "," + FormatReal(t[1]) + "," + FormatReal(t[2]);
}

namespace {

double ParseReal(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double x = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "not a number: '" + std::string(text) + "'");
  }
  return x;
}

}  // namespace

AngleTriple ParseTriple(std::string_view text, bool degrees,
                        double rescale_within) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(ParseReal(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 3) {
    throw Error(ErrorCode::kParseError,
                "expected three comma-separated angles, got '" +
                    std::string(text) + "'");
  }
  if (degrees) {
    for (double& v : values) v *= kPi / 180;
  }
  const double sum = values[0] + values[1] + values[2];
  if (std::abs(sum - kPi) <= rescale_within) {
    for (double& v : values) v *= kPi / sum;
  }
  return MakeTriple(values[0], values[1], values[2]);
}

}  // namespace cevian
