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

#ifndef CEVIAN_TOOLS_CLI_H_
#define CEVIAN_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cevian/dynamics.h"
#include "cevian/geometry.h"
#include "cevian/simplex.h"

namespace cevian::cli {

enum class Command {
  kSubdivide,
  kDensity,
  kEnumerate,
  kSample,
  kHist,
  kCdf,
  kSelfsim,
  kFlatness,
};

enum class Format { kCsv, kJson, kPgm };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitIo = 4,
};

struct RunConfig {
  Command command = Command::kSelfsim;
  CenterStrategy strategy = CenterStrategy::Incenter();
  std::optional<AngleTriple> start;
  std::optional<AngleTriple> target;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> bins;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<double> delta;  // radians
  int grid = 512;
  bool early_exit = true;
  bool enumerate_all = false;  // hist: full generation instead of sampling
  bool regions = false;        // enumerate: region images instead of triples
  std::string input;           // hist: triples CSV to bin
  std::optional<int> budget;   // overrides both enumeration caps
  int threads = 0;
  Format format = Format::kCsv;
  std::string out;  // empty: standard output
};

struct ParseResult {
  std::optional<RunConfig> config;
  std::string help;  // set when --help was requested
};

// Throws Error(kUsageError) for unknown commands, bad flags, missing required
// flags and out-of-range values.
ParseResult ParseArgs(const std::vector<std::string>& args);

// Writes the command's output to config.out or `out`. Returns an ExitCode;
// module errors propagate as cevian::Error.
int Run(const RunConfig& config, std::ostream& out);

// Full front end: parse, run, map errors to one-line messages on `err`.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace cevian::cli

#endif  // CEVIAN_TOOLS_CLI_H_
