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

#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cevian/density.h"
#include "cevian/io.h"

namespace cevian::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("cevian_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(CliTest, SelfsimListsTwoClasses) {
  const Outcome r = RunCli({"selfsim"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("classes").size(), 2u);
  EXPECT_EQ(j["classes"][0]["self_similar_maps"], nlohmann::json({3, 4}));
  EXPECT_EQ(j["classes"][1]["self_similar_maps"], nlohmann::json({5}));
  EXPECT_EQ(j.at("provenance").at("command"), "selfsim");
}

TEST(CliTest, DensityCertificateVerifies) {
  const Outcome r =
      RunCli({"density", "--start", "1.0472,1.0472,1.0472", "--target",
              "0.7854,0.7854,1.5708", "--epsilon", "0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rounded = nlohmann::json::parse(r.out);
  EXPECT_TRUE(rounded.at("verified").get<bool>());
  EXPECT_EQ(rounded.at("k_bound"), 43);

  // Sums further than 1e-4 from pi are still rejected.
  const Outcome bad = RunCli({"density", "--start", "1.047,1.047,1.047",
                              "--target", "0.7854,0.7854,1.5708",
                              "--epsilon", "0.01"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_EQ(bad.err.rfind("error: UsageError: ", 0), 0u) << bad.err;

  const Outcome ok = RunCli(
      {"density", "--start", "60,60,60", "--target", "45,45,90", "--degrees",
       "--epsilon", "0.01"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(j.at("verified").get<bool>());
  const DensityCertificate cert = CertificateFromJson(ok.out);
  EXPECT_TRUE(Verify(cert));
  EXPECT_LE(cert.word.size(), 43u);
}

TEST(CliTest, CdfAtGenerationThreeRespectsPiOverEight) {
  const Outcome r = RunCli({"cdf", "--n", "3", "--grid", "512"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const CdfFile cdf = ReadCdfCsv(in);
  ASSERT_EQ(cdf.thetas.size(), 512u);
  EXPECT_EQ(cdf.provenance.Get("n"), "3");
  for (std::size_t k = 0; k < cdf.thetas.size(); ++k) {
    if (cdf.thetas[k] <= 0.39) EXPECT_LE(cdf.upper[k], 215.0 / 216.0);
  }
  EXPECT_EQ(cdf.upper.back(), 1.0);
}

TEST(CliTest, RandomizedCommandsRequireSeed) {
  const std::vector<std::string> common = {"--start", "1,1,1.1415926535897931",
                                           "--n", "3", "--m", "10"};
  for (const std::string cmd : {"sample", "hist", "flatness"}) {
    std::vector<std::string> args = {cmd};
    args.insert(args.end(), common.begin(), common.end());
    if (cmd == "hist") args.insert(args.end(), {"--bins", "4"});
    if (cmd == "flatness") args.insert(args.end(), {"--delta", "0.3"});
    const Outcome r = RunCli(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("--seed"), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  }
}

TEST(CliTest, UsageAndDomainErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cdf"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cdf", "--n", "-1"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"selfsim", "--format", "csv"}).code, kExitUsage);
  const Outcome budget = RunCli({"cdf", "--n", "9"});
  EXPECT_EQ(budget.code, kExitDomain);
  EXPECT_EQ(budget.err.rfind("error: BudgetExceeded: ", 0), 0u);
  const Outcome degenerate =
      RunCli({"subdivide", "--start", "180,0,0", "--degrees"});
  EXPECT_EQ(degenerate.code, kExitDomain);
  EXPECT_EQ(degenerate.err.rfind("error: DegenerateTriangle: ", 0), 0u);
}

TEST(CliTest, HelpDocumentsFlags) {
  const Outcome top = RunCli({"--help"});
  EXPECT_EQ(top.code, 0);
  EXPECT_NE(top.out.find("flatness"), std::string::npos);
  const Outcome sub = RunCli({"flatness", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--delta"), std::string::npos);
  EXPECT_NE(sub.out.find("(0, pi)"), std::string::npos);
}

TEST(CliTest, SameConfigIsByteIdentical) {
  const std::vector<std::string> args = {
      "hist", "--start", "60,60,60", "--degrees", "--n", "8", "--m", "2000",
      "--seed", "11", "--bins", "12"};
  const Outcome a = RunCli(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Outcome b = RunCli(threaded);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# generator: mt19937_64\n"), std::string::npos);
  EXPECT_NE(a.out.find("# seed: 11\n"), std::string::npos);
  EXPECT_NE(a.out.find("# bins: 12\n"), std::string::npos);
  std::istringstream in(a.out);
  EXPECT_EQ(ReadHistogramCsv(in).grid.total(), 2000u);
}

TEST(CliTest, OutputFilesRoundTrip) {
  const auto samples = TempPath("samples.csv");
  const auto pgm = TempPath("hist.pgm");
  Outcome r = RunCli({"sample", "--strategy", "centroid", "--start",
                      "0.5,1,1.6415926535897931", "--n", "6", "--m", "300",
                      "--seed", "3", "--out", samples.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(samples);
  const TriplesFile file = ReadTriplesCsv(in);
  EXPECT_EQ(file.triples.size(), 300u);
  EXPECT_EQ(file.provenance.Get("strategy"), "centroid");

  r = RunCli({"hist", "--input", samples.string(), "--bins", "5", "--format",
              "pgm", "--out", pgm.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream pin(pgm);
  const PgmImage img = ReadPgm(pin);
  EXPECT_EQ(img.provenance.Get("input.strategy"), "centroid");
  EXPECT_GT(img.width, 0);

  std::filesystem::remove(samples);
  std::filesystem::remove(pgm);
  EXPECT_EQ(RunCli({"selfsim", "--out", "/nonexistent/dir/x.json"}).code,
            kExitIo);
}

TEST(CliTest, SubdivideEnumerateAndFlatness) {
  Outcome r = RunCli({"subdivide", "--start", "60,60,60", "--degrees"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("daughters").size(), 6u);
  EXPECT_EQ(j.at("map_images").size(), 6u);

  r = RunCli({"subdivide", "--strategy", "weighted", "--weights", "0.2,0.3,0.5",
              "--start", "60,60,60", "--degrees", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(ReadTriplesCsv(in).triples.size(), 6u);

  r = RunCli({"enumerate", "--regions", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("regions").size(), 36u);
  EXPECT_EQ(j["regions"][0]["word"], "11");

  r = RunCli({"enumerate", "--start", "60,60,60", "--degrees", "--n", "2",
              "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("triples").size(), 36u);

  r = RunCli({"flatness", "--strategy", "centroid", "--start", "60,60,60",
              "--degrees", "--n", "10", "--m", "1000", "--delta", "20",
              "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_GT(j.at("fraction").get<double>(), 0.0);
  EXPECT_NEAR(j.at("delta").get<double>(), 20 * kPi / 180, 1e-15);
}

}  // namespace
}  // namespace cevian::cli
