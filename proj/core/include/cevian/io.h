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

// File formats. Every file starts with provenance: "# key: value" comment
// lines for CSV and PGM, a "provenance" object for JSON. Reals are written
// with 17 significant digits so files round-trip exactly.
//
//   triples CSV     alpha,beta,gamma
//   histogram CSV   row,col,orientation,count   (orientation: up | down)
//   CDF CSV         theta,lower,upper
//   histogram PGM   plain P2 raster of the embedded simplex, maxval 255,
//                   scaled by the largest count
//   certificate     {"start":[..],"target":[..],"epsilon":e,"word":"..",
//                    "achieved_error":e,"k_bound":n}
//   region image    {"word":"123","vertices":[[..],[..],[..]]}

#ifndef CEVIAN_IO_H_
#define CEVIAN_IO_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cevian/density.h"
#include "cevian/dynamics.h"
#include "cevian/maps.h"
#include "cevian/simplex.h"

namespace cevian {

class Provenance {
 public:
  Provenance& Set(std::string key, std::string value);
  // Empty string when absent.
  std::string Get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  void WriteComments(std::ostream& out) const;
  std::string ToJson() const;

  friend bool operator==(const Provenance&, const Provenance&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string JsonString(std::string_view s);
std::string JsonTriple(const AngleTriple& t);

void WriteTriplesCsv(std::ostream& out, std::span<const AngleTriple> triples,
                     const Provenance& provenance);
struct TriplesFile {
  Provenance provenance;
  std::vector<AngleTriple> triples;
};
TriplesFile ReadTriplesCsv(std::istream& in);

void WriteHistogramCsv(std::ostream& out, const HistogramGrid& grid,
                       const Provenance& provenance);
struct HistogramFile {
  Provenance provenance;
  HistogramGrid grid;
};
HistogramFile ReadHistogramCsv(std::istream& in);

void WriteCdfCsv(std::ostream& out, const CdfBounds& cdf,
                 const Provenance& provenance);
struct CdfFile {
  Provenance provenance;
  std::vector<double> thetas;
  std::vector<double> lower;
  std::vector<double> upper;
};
CdfFile ReadCdfCsv(std::istream& in);

// Square raster of the embedded simplex, `width` pixels wide. Pixels outside P
// are 0; inside, count * 255 / max_count rounded to nearest.
void WriteHistogramPgm(std::ostream& out, const HistogramGrid& grid,
                       const Provenance& provenance, int width = 0);
struct PgmImage {
  Provenance provenance;
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::vector<int> pixels;  // row-major, top row first
};
PgmImage ReadPgm(std::istream& in);

// `extra` is spliced in verbatim as additional members (e.g. provenance),
// without a leading comma; empty for the bare schema.
std::string CertificateToJson(const DensityCertificate& cert,
                              std::string_view extra = {});
DensityCertificate CertificateFromJson(std::string_view json);

std::string RegionImageToJson(const RegionImage& region);
RegionImage RegionImageFromJson(std::string_view json);

}  // namespace cevian

#endif  // CEVIAN_IO_H_
