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

#include "cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cevian/density.h"
#include "cevian/error.h"
#include "cevian/io.h"
#include "cevian/maps.h"

namespace cevian::cli {
namespace {

struct CommandInfo {
  Command command;
  const char* name;
  const char* description;
  Format default_format;
  std::vector<Format> formats;
};

const std::vector<CommandInfo>& Commands() {
  static const std::vector<CommandInfo> commands = {
      {Command::kSubdivide, "subdivide",
       "Subdivide one triangle about the strategy's center; prints the six "
       "daughters (A-F-X, F-B-X, B-D-X, D-C-X, C-E-X, E-A-X).",
       Format::kJson, {Format::kJson, Format::kCsv}},
      {Command::kDensity, "density",
       "Build and verify a density certificate: a map word whose daughter of "
       "--start is within --epsilon of --target. Exit 0 iff it verifies.",
       Format::kJson, {Format::kJson}},
      {Command::kEnumerate, "enumerate",
       "All 6^n daughters of generation n, or with --regions the 6^n region "
       "images of the simplex.",
       Format::kCsv, {Format::kCsv, Format::kJson}},
      {Command::kSample, "sample",
       "Monte-Carlo walks: m daughters after n uniformly random steps.",
       Format::kCsv, {Format::kCsv, Format::kJson}},
      {Command::kHist, "hist",
       "Triangular histogram over the angle simplex of sampled, enumerated or "
       "loaded triples.",
       Format::kCsv, {Format::kCsv, Format::kPgm}},
      {Command::kCdf, "cdf",
       "Lower/upper bounds on the CDF of the smallest angle under incenter "
       "subdivision from the 6^n region images.",
       Format::kCsv, {Format::kCsv}},
      {Command::kSelfsim, "selfsim",
       "Triangles similar to one of their own incenter daughters.",
       Format::kJson, {Format::kJson}},
      {Command::kFlatness, "flatness",
       "Fraction of sampled generation-n daughters whose largest angle "
       "exceeds pi - delta.",
       Format::kJson, {Format::kJson, Format::kCsv}},
  };
  return commands;
}

const CommandInfo& InfoFor(Command c) {
  for (const auto& info : Commands()) {
    if (info.command == c) return info;
  }
  throw std::logic_error("unknown command");
}

std::string FormatName(Format f) {
  switch (f) {
    case Format::kCsv:
      return "csv";
    case Format::kJson:
      return "json";
    case Format::kPgm:
      return "pgm";
  }
  return "?";
}

// Command-line triples whose sum is this close to pi are rescaled onto P, so
// four-decimal input such as 1.0472,1.0472,1.0472 is accepted.
constexpr double kInputRescale = 1e-4;

[[noreturn]] void Usage(const std::string& message) {
  throw Error(ErrorCode::kUsageError, message);
}

struct RawFlags {
  std::string strategy = "incenter";
  std::string weights;
  std::string start;
  std::string target;
  int n = 0;
  int m = 0;
  int bins = 0;
  std::uint64_t seed = 0;
  double epsilon = 0;
  double delta = 0;
  int grid = 512;
  int budget = 0;
  int threads = 0;
  bool degrees = false;
  bool no_early_exit = false;
  bool enumerate_all = false;
  bool regions = false;
  std::string input;
  std::string format;
  std::string out;
};

struct Flags {
  CLI::Option* strategy = nullptr;
  CLI::Option* start = nullptr;
  CLI::Option* target = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* m = nullptr;
  CLI::Option* bins = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* epsilon = nullptr;
  CLI::Option* delta = nullptr;
  CLI::Option* budget = nullptr;
};

bool Given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

void Require(const CLI::Option* o, const char* flag, const char* command) {
  if (!Given(o)) {
    Usage(std::string(command) + " requires " + flag);
  }
}

Provenance MakeProvenance(const RunConfig& c) {
  auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  auto opt_real = [](const std::optional<double>& v) {
    return v ? FormatReal(*v) : std::string("none");
  };
  Provenance p;
  p.Set("tool", "cevian");
  p.Set("command", InfoFor(c.command).name);
  p.Set("strategy", c.strategy.name());
  p.Set("start", c.start ? FormatTriple(*c.start) : "none");
  p.Set("target", c.target ? FormatTriple(*c.target) : "none");
  p.Set("n", opt_int(c.n));
  p.Set("m", opt_int(c.m));
  p.Set("seed", c.seed ? std::to_string(*c.seed) : "none");
  p.Set("generator", c.seed ? std::string(kGeneratorName) : "none");
  p.Set("streams", c.seed ? std::to_string(kSampleStreams) : "none");
  p.Set("bins", opt_int(c.bins));
  p.Set("epsilon", opt_real(c.epsilon));
  p.Set("delta", opt_real(c.delta));
  if (c.command == Command::kCdf) p.Set("grid", std::to_string(c.grid));
  if (!c.input.empty()) p.Set("input", c.input);
  p.Set("format", FormatName(c.format));
  return p;
}

EnumerationBudget BudgetFor(const RunConfig& c) {
  EnumerationBudget b;
  if (c.budget) {
    b.max_materialized_generation = *c.budget;
    b.max_region_generation = *c.budget;
  }
  return b;
}

std::string TriplesJson(const Provenance& p,
                        std::span<const AngleTriple> triples) {
  std::string s = "{\"provenance\":" + p.ToJson() + ",\"triples\":[";
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (i > 0) s += ',';
    s += JsonTriple(triples[i]);
  }
  return s + "]}\n";
}

void WriteTriples(std::ostream& out, const RunConfig& c,
                  std::span<const AngleTriple> triples) {
  const Provenance p = MakeProvenance(c);
  if (c.format == Format::kJson) {
    out << TriplesJson(p, triples);
  } else {
    WriteTriplesCsv(out, triples, p);
  }
}

int RunSubdivide(const RunConfig& c, std::ostream& out) {
  const auto daughters = Subdivide(c.strategy, *c.start);
  const Provenance p = MakeProvenance(c);
  if (c.format == Format::kCsv) {
    WriteTriplesCsv(out, daughters, p);
    return kExitOk;
  }
  std::string s = "{\"provenance\":" + p.ToJson() +
                  ",\"strategy\":" + JsonString(c.strategy.name()) +
                  ",\"start\":" + JsonTriple(*c.start) +
                  ",\"order\":[\"AFX\",\"FBX\",\"BDX\",\"DCX\",\"CEX\",\"EAX\"]"
                  ",\"daughters\":[";
  for (std::size_t i = 0; i < daughters.size(); ++i) {
    if (i > 0) s += ',';
    s += JsonTriple(daughters[i]);
  }
  s += "]";
  if (c.strategy.kind() == CenterKind::kIncenter) {
    s += ",\"map_images\":[";
    for (MapIndex i : kAllMaps) {
      if (i.value() > 1) s += ',';
      s += JsonTriple(Apply(i, *c.start));
    }
    s += "]";
  }
  out << s << "}\n";
  return kExitOk;
}

int RunDensity(const RunConfig& c, std::ostream& out) {
  const DensityCertificate cert =
      Approximate(*c.start, *c.target, *c.epsilon, {c.early_exit});
  const bool ok = Verify(cert);
  out << CertificateToJson(cert,
                           std::string("\"verified\":") +
                               (ok ? "true" : "false") + ",\"provenance\":" +
                               MakeProvenance(c).ToJson())
      << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int RunEnumerate(const RunConfig& c, std::ostream& out, int threads) {
  if (c.regions) {
    const EnumerationBudget budget = BudgetFor(c);
    if (*c.n > budget.max_region_generation) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "region generation exceeds the budget of " +
                      std::to_string(budget.max_region_generation));
    }
    out << "{\"provenance\":" << MakeProvenance(c).ToJson()
        << ",\"regions\":[";
    bool first = true;
    ForEachRegion(*c.n, [&](const MapWord& w, const Matrix3& m) {
      if (!first) out << ',';
      first = false;
      out << RegionImageToJson(RegionFromMatrix(w, m));
    });
    out << "]}\n";
    return kExitOk;
  }
  const auto triples =
      EnumerateGeneration(*c.start, c.strategy, *c.n, BudgetFor(c), {threads});
  WriteTriples(out, c, triples);
  return kExitOk;
}

int RunHist(const RunConfig& c, std::ostream& out, int threads) {
  std::vector<AngleTriple> samples;
  Provenance p = MakeProvenance(c);
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + c.input);
    TriplesFile file = ReadTriplesCsv(in);
    for (const auto& [k, v] : file.provenance.entries()) {
      p.Set("input." + k, v);
    }
    samples = std::move(file.triples);
  } else if (c.enumerate_all) {
    samples =
        EnumerateGeneration(*c.start, c.strategy, *c.n, BudgetFor(c), {threads});
  } else {
    samples = SampleWalks(*c.start, c.strategy, *c.n, *c.m, *c.seed, {threads});
  }
  const HistogramGrid grid = Histogram(samples, *c.bins);
  if (c.format == Format::kPgm) {
    WriteHistogramPgm(out, grid, p);
  } else {
    WriteHistogramCsv(out, grid, p);
  }
  return kExitOk;
}

int RunSelfsim(const RunConfig& c, std::ostream& out) {
  const auto solutions = SolveAllSelfSimilar();
  std::string s = "{\"provenance\":" + MakeProvenance(c).ToJson() +
                  ",\"solutions\":[";
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const auto& sol = solutions[i];
    if (i > 0) s += ',';
    s += "{\"map\":" + std::to_string(sol.index.value()) +
         ",\"permutation\":[" + std::to_string(sol.permutation[0]) + "," +
         std::to_string(sol.permutation[1]) + "," +
         std::to_string(sol.permutation[2]) +
         "],\"triple\":" + JsonTriple(sol.triple) + "}";
  }
  s += "],\"classes\":[";
  const auto classes = SimilarityClasses(solutions);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) s += ',';
    s += "{\"triple\":" + JsonTriple(classes[i]) + ",\"self_similar_maps\":[";
    const auto maps = SelfSimilarIndices(classes[i], 1e-9);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (k > 0) s += ',';
      s += std::to_string(maps[k].value());
    }
    s += "]}";
  }
  out << s << "]}\n";
  return kExitOk;
}

int RunFlatness(const RunConfig& c, std::ostream& out, int threads) {
  const double fraction = FlatnessFraction(*c.start, c.strategy, *c.n, *c.m,
                                           *c.delta, *c.seed, {threads});
  const Provenance p = MakeProvenance(c);
  if (c.format == Format::kCsv) {
    p.WriteComments(out);
    out << "n,m,delta,fraction\n"
        << *c.n << ',' << *c.m << ',' << FormatReal(*c.delta) << ','
        << FormatReal(fraction) << '\n';
  } else {
    out << "{\"provenance\":" << p.ToJson() << ",\"n\":" << *c.n
        << ",\"m\":" << *c.m << ",\"delta\":" << FormatReal(*c.delta)
        << ",\"fraction\":" << FormatReal(fraction) << "}\n";
  }
  return kExitOk;
}

}  // namespace

ParseResult ParseArgs(const std::vector<std::string>& args) {
  CLI::App app{"Iterated cevian subdivision of triangles on the angle simplex.",
               "cevian"};
  app.require_subcommand(1, 1);
  RawFlags raw;
  std::vector<std::pair<CLI::App*, Flags>> subs;

  for (const CommandInfo& info : Commands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.description);
    Flags f;
    const Command cmd = info.command;
    const bool geometric = cmd == Command::kSubdivide ||
                           cmd == Command::kEnumerate ||
                           cmd == Command::kSample || cmd == Command::kHist ||
                           cmd == Command::kFlatness;
    if (geometric) {
      f.strategy = sub->add_option(
          "--strategy", raw.strategy,
          "Center: centroid | incenter | gergonne | lemoine | weighted "
          "(default incenter)");
      sub->add_option("--weights", raw.weights,
                      "p0,p1,p2 for --strategy weighted; each > 0, sum 1");
    }
    if (cmd != Command::kCdf && cmd != Command::kSelfsim) {
      f.start = sub->add_option(
          "--start", raw.start,
          "Start triangle a,b,c; angles >= 0 summing to pi (sums within 1e-4 "
          "are rescaled), all > 1e-9");
    }
    if (cmd == Command::kDensity) {
      f.target = sub->add_option(
          "--target", raw.target,
          "Target triangle a,b,c; angles >= 0 summing to pi (sums within 1e-4 "
          "are rescaled)");
      f.epsilon = sub->add_option(
          "--epsilon", raw.epsilon,
          "Approximation tolerance (ambient distance, radians); > 0");
      sub->add_flag("--no-early-exit", raw.no_early_exit,
                    "Always use the full a-priori depth");
    }
    if (cmd == Command::kEnumerate || cmd == Command::kSample ||
        cmd == Command::kHist || cmd == Command::kCdf ||
        cmd == Command::kFlatness) {
      f.n = sub->add_option("--n", raw.n, "Generation; >= 0");
    }
    if (cmd == Command::kSample || cmd == Command::kHist ||
        cmd == Command::kFlatness) {
      f.m = sub->add_option("--m", raw.m, "Number of sampled walks; >= 1");
      f.seed = sub->add_option(
          "--seed", raw.seed,
          "RNG seed (required for sampling); stream j uses seed + j");
      sub->add_option("--threads", raw.threads,
                      "Worker threads; 0 = all cores (output is unaffected)");
    }
    if (cmd == Command::kEnumerate || cmd == Command::kHist ||
        cmd == Command::kCdf) {
      f.budget = sub->add_option(
          "--budget", raw.budget,
          "Largest generation allowed (default 9 for triples, 8 for regions)");
    }
    if (cmd == Command::kEnumerate) {
      sub->add_flag("--regions", raw.regions,
                    "Emit the 6^n region images (JSON) instead of triples");
    }
    if (cmd == Command::kHist) {
      f.bins = sub->add_option("--bins", raw.bins,
                               "Cells per side of the triangular grid; >= 1");
      sub->add_flag("--enumerate", raw.enumerate_all,
                    "Bin the full generation n instead of sampling");
      sub->add_option("--input", raw.input,
                      "Bin the triples of an existing triples CSV");
    }
    if (cmd == Command::kCdf) {
      sub->add_option("--grid", raw.grid,
                      "Number of uniform theta points on [0, pi/3]; >= 2");
    }
    if (cmd == Command::kFlatness) {
      f.delta = sub->add_option(
          "--delta", raw.delta,
          "Flatness margin: count max angle > pi - delta; in (0, pi)");
    }
    if (f.start != nullptr || cmd == Command::kFlatness) {
      sub->add_flag("--degrees", raw.degrees,
                    "Read angle flags (--start, --target, --delta) in degrees");
    }
    std::string formats;
    for (Format fmt : info.formats) {
      formats += (formats.empty() ? "" : " | ") + FormatName(fmt);
    }
    sub->add_option("--format", raw.format,
                    "Output format: " + formats + " (default " +
                        FormatName(info.default_format) + ")");
    sub->add_option("--out", raw.out, "Output file (default: stdout)");
    subs.emplace_back(sub, f);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [sub, f] : subs) {
      if (sub->parsed()) return {std::nullopt, sub->help()};
    }
    return {std::nullopt, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    Usage(e.what());
  }

  RunConfig c;
  const CommandInfo* info = nullptr;
  const Flags* f = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].first->parsed()) {
      info = &Commands()[i];
      f = &subs[i].second;
    }
  }
  if (info == nullptr) Usage("no command given");
  c.command = info->command;
  const char* name = info->name;

  try {
    if (Given(f->strategy) || !raw.weights.empty()) {
      c.strategy = ParseStrategy(raw.strategy, raw.weights);
    }
    if (Given(f->start)) {
      c.start = ParseTriple(raw.start, raw.degrees, kInputRescale);
    }
    if (Given(f->target)) {
      c.target = ParseTriple(raw.target, raw.degrees, kInputRescale);
    }
  } catch (const Error& e) {
    Usage(e.what());
  }
  if (Given(f->n)) {
    if (raw.n < 0) Usage("--n must be >= 0");
    c.n = raw.n;
  }
  if (Given(f->m)) {
    if (raw.m < 1) Usage("--m must be >= 1");
    c.m = raw.m;
  }
  if (Given(f->bins)) {
    if (raw.bins < 1) Usage("--bins must be >= 1");
    c.bins = raw.bins;
  }
  if (Given(f->seed)) c.seed = raw.seed;
  if (Given(f->epsilon)) {
    if (!(raw.epsilon > 0)) Usage("--epsilon must be > 0");
    c.epsilon = raw.epsilon;
  }
  if (Given(f->delta)) {
    const double d = raw.degrees ? raw.delta * kPi / 180 : raw.delta;
    if (!(d > 0 && d < kPi)) Usage("--delta must be in (0, pi)");
    c.delta = d;
  }
  if (Given(f->budget)) {
    if (raw.budget < 0) Usage("--budget must be >= 0");
    c.budget = raw.budget;
  }
  if (raw.grid < 2) Usage("--grid must be >= 2");
  c.grid = raw.grid;
  c.threads = std::max(raw.threads, 0);
  c.early_exit = !raw.no_early_exit;
  c.enumerate_all = raw.enumerate_all;
  c.regions = raw.regions;
  c.input = raw.input;
  c.out = raw.out;

  c.format = info->default_format;
  if (!raw.format.empty()) {
    bool known = false;
    for (Format fmt : info->formats) {
      if (FormatName(fmt) == raw.format) {
        c.format = fmt;
        known = true;
      }
    }
    if (!known) Usage(std::string(name) + " does not support --format " + raw.format);
  }

  switch (c.command) {
    case Command::kSubdivide:
      Require(f->start, "--start", name);
      break;
    case Command::kDensity:
      Require(f->start, "--start", name);
      Require(f->target, "--target", name);
      Require(f->epsilon, "--epsilon", name);
      break;
    case Command::kEnumerate:
      Require(f->n, "--n", name);
      if (c.regions) {
        if (!raw.format.empty() && c.format != Format::kJson) {
          Usage("enumerate --regions writes json");
        }
        c.format = Format::kJson;
      } else {
        Require(f->start, "--start", name);
      }
      break;
    case Command::kSample:
      Require(f->start, "--start", name);
      Require(f->n, "--n", name);
      Require(f->m, "--m", name);
      Require(f->seed, "--seed", name);
      break;
    case Command::kHist:
      Require(f->bins, "--bins", name);
      if (c.input.empty()) {
        Require(f->start, "--start", name);
        Require(f->n, "--n", name);
        if (!c.enumerate_all) {
          Require(f->m, "--m", name);
          Require(f->seed, "--seed", name);
        }
      } else if (c.enumerate_all) {
        Usage("hist takes either --input or --enumerate, not both");
      }
      break;
    case Command::kCdf:
      Require(f->n, "--n", name);
      break;
    case Command::kSelfsim:
      break;
    case Command::kFlatness:
      Require(f->start, "--start", name);
      Require(f->n, "--n", name);
      Require(f->m, "--m", name);
      Require(f->delta, "--delta", name);
      Require(f->seed, "--seed", name);
      break;
  }
  return {c, {}};
}

int Run(const RunConfig& c, std::ostream& out) {
  std::ostringstream buf;
  int code = kExitOk;
  switch (c.command) {
    case Command::kSubdivide:
      code = RunSubdivide(c, buf);
      break;
    case Command::kDensity:
      code = RunDensity(c, buf);
      break;
    case Command::kEnumerate:
      code = RunEnumerate(c, buf, c.threads);
      break;
    case Command::kSample:
      WriteTriples(buf, c,
                   SampleWalks(*c.start, c.strategy, *c.n, *c.m, *c.seed,
                               {c.threads}));
      break;
    case Command::kHist:
      code = RunHist(c, buf, c.threads);
      break;
    case Command::kCdf: {
      const auto thetas = UniformThetaGrid(c.grid);
      WriteCdfCsv(buf,
                  ComputeCdfBounds(*c.n, thetas, BudgetFor(c), {c.threads}),
                  MakeProvenance(c));
      break;
    }
    case Command::kSelfsim:
      code = RunSelfsim(c, buf);
      break;
    case Command::kFlatness:
      code = RunFlatness(c, buf, c.threads);
      break;
  }
  if (c.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIoError, "cannot open " + c.out);
    file << buf.str();
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + c.out);
  }
  return code;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  try {
    const ParseResult parsed = ParseArgs(args);
    if (!parsed.config) {
      out << parsed.help;
      return kExitOk;
    }
    return Run(*parsed.config, out);
  } catch (const Error& e) {
    err << FormatError(e) << '\n';
    switch (e.code()) {
      case ErrorCode::kUsageError:
        return kExitUsage;
      case ErrorCode::kIoError:
        return kExitIo;
      default:
        return kExitDomain;
    }
  }
}

}  // namespace cevian::cli
