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

#include "cevian/io.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cevian/error.h"

namespace cevian {
namespace {

using nlohmann::json;

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double ToReal(const std::string& s) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParseError, "not a number: '" + s + "'");
}

long long ToInteger(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParseError, "not an integer: '" + s + "'");
}

// Consumes leading "# key: value" lines and the header; returns the data rows.
std::vector<std::vector<std::string>> ReadCsvBody(
    std::istream& in, std::string_view header, std::size_t columns,
    Provenance& provenance) {
  std::string line;
  bool seen_header = false;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!seen_header && line.rfind("# ", 0) == 0) {
      const std::size_t colon = line.find(": ", 2);
      if (colon != std::string::npos) {
        provenance.Set(line.substr(2, colon - 2), line.substr(colon + 2));
      }
      continue;
    }
    if (!seen_header) {
      if (line != header) {
        throw Error(ErrorCode::kParseError, "expected CSV header '" +
                                                std::string(header) +
                                                "', got '" + line + "'");
      }
      seen_header = true;
      continue;
    }
    auto fields = SplitCsv(line);
    if (fields.size() != columns) {
      throw Error(ErrorCode::kParseError, "bad CSV row '" + line + "'");
    }
    rows.push_back(std::move(fields));
  }
  if (!seen_header) {
    throw Error(ErrorCode::kParseError, "missing CSV header");
  }
  return rows;
}

AngleTriple TripleFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::kParseError, "expected a 3-element array");
  }
  return MakeTriple(j[0].get<double>(), j[1].get<double>(),
                    j[2].get<double>());
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

Provenance& Provenance::Set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string Provenance::Get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return {};
}

void Provenance::WriteComments(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << "# " << k << ": " << v << '\n';
}

std::string Provenance::ToJson() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) s += ',';
    s += JsonString(entries_[i].first) + ":" + JsonString(entries_[i].second);
  }
  return s + "}";
}

std::string JsonString(std::string_view s) { return json(s).dump(); }

std::string JsonTriple(const AngleTriple& t) {
  return "[" + FormatTriple(t) + "]";
}

void WriteTriplesCsv(std::ostream& out, std::span<const AngleTriple> triples,
                     const Provenance& provenance) {
  provenance.WriteComments(out);
  out << "alpha,beta,gamma\n";
  for (const AngleTriple& t : triples) out << FormatTriple(t) << '\n';
}

TriplesFile ReadTriplesCsv(std::istream& in) {
  TriplesFile file;
  for (const auto& row :
       ReadCsvBody(in, "alpha,beta,gamma", 3, file.provenance)) {
    file.triples.push_back(
        MakeTriple(ToReal(row[0]), ToReal(row[1]), ToReal(row[2])));
  }
  return file;
}

void WriteHistogramCsv(std::ostream& out, const HistogramGrid& grid,
                       const Provenance& provenance) {
  provenance.WriteComments(out);
  out << "row,col,orientation,count\n";
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const HistogramCell c = grid.CellAt(i);
    out << c.row << ',' << c.col << ','
        << (c.orientation == CellOrientation::kUp ? "up" : "down") << ','
        << grid.counts()[i] << '\n';
  }
}

HistogramFile ReadHistogramCsv(std::istream& in) {
  Provenance provenance;
  const auto rows =
      ReadCsvBody(in, "row,col,orientation,count", 4, provenance);
  long long max_row = -1;
  for (const auto& row : rows) max_row = std::max(max_row, ToInteger(row[0]));
  if (max_row < 0) throw Error(ErrorCode::kParseError, "empty histogram");
  HistogramGrid grid(static_cast<int>(max_row + 1));
  for (const auto& row : rows) {
    HistogramCell cell;
    cell.row = static_cast<int>(ToInteger(row[0]));
    cell.col = static_cast<int>(ToInteger(row[1]));
    if (row[2] == "up") {
      cell.orientation = CellOrientation::kUp;
    } else if (row[2] == "down") {
      cell.orientation = CellOrientation::kDown;
    } else {
      throw Error(ErrorCode::kParseError, "bad orientation '" + row[2] + "'");
    }
    if (!grid.IsValid(cell)) {
      throw Error(ErrorCode::kParseError, "histogram cell outside the grid");
    }
    const long long count = ToInteger(row[3]);
    if (count < 0) throw Error(ErrorCode::kParseError, "negative count");
    grid.AddCount(cell, static_cast<std::uint64_t>(count));
  }
  return {std::move(provenance), std::move(grid)};
}

void WriteCdfCsv(std::ostream& out, const CdfBounds& cdf,
                 const Provenance& provenance) {
  provenance.WriteComments(out);
  out << "theta,lower,upper\n";
  for (std::size_t k = 0; k < cdf.thetas.size(); ++k) {
    out << FormatReal(cdf.thetas[k]) << ',' << FormatReal(cdf.lower[k]) << ','
        << FormatReal(cdf.upper[k]) << '\n';
  }
}

CdfFile ReadCdfCsv(std::istream& in) {
  CdfFile file;
  for (const auto& row : ReadCsvBody(in, "theta,lower,upper", 3,
                                     file.provenance)) {
    file.thetas.push_back(ToReal(row[0]));
    file.lower.push_back(ToReal(row[1]));
    file.upper.push_back(ToReal(row[2]));
  }
  return file;
}

void WriteHistogramPgm(std::ostream& out, const HistogramGrid& grid,
                       const Provenance& provenance, int width) {
  if (width <= 0) width = std::max(64, 4 * grid.bins_per_side());
  const int height = static_cast<int>(
      std::lround(width * std::numbers::sqrt3 / 2));
  const double side = 2 * kPi / std::numbers::sqrt3;
  const auto counts = grid.counts();
  const std::uint64_t max_count =
      counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());

  out << "P2\n";
  provenance.WriteComments(out);
  out << width << ' ' << height << "\n255\n";
  for (int py = 0; py < height; ++py) {
    for (int px = 0; px < width; ++px) {
      const double u = (px + 0.5) / width * side;
      const double alpha = kPi * (1 - (py + 0.5) / height);
      const double beta = (u * std::numbers::sqrt3 - alpha) / 2;
      const double gamma = kPi - alpha - beta;
      int value = 0;
      if (beta >= 0 && gamma >= 0 && max_count > 0) {
        const auto c =
            grid.count(grid.Locate(AngleTriple::Unchecked(alpha, beta, gamma)));
        value = static_cast<int>((c * 255 + max_count / 2) / max_count);
      }
      out << value << (px + 1 == width ? '\n' : ' ');
    }
  }
}

PgmImage ReadPgm(std::istream& in) {
  PgmImage image;
  std::string line;
  if (!std::getline(in, line) || line != "P2") {
    throw Error(ErrorCode::kParseError, "not a plain PGM (P2) file");
  }
  std::string body;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      if (line.rfind("# ", 0) == 0) {
        const std::size_t colon = line.find(": ", 2);
        if (colon != std::string::npos) {
          image.provenance.Set(line.substr(2, colon - 2),
                               line.substr(colon + 2));
        }
      }
      continue;
    }
    body += line;
    body += '\n';
  }
  std::istringstream ss(body);
  if (!(ss >> image.width >> image.height >> image.maxval) ||
      image.width <= 0 || image.height <= 0 || image.maxval <= 0) {
    throw Error(ErrorCode::kParseError, "bad PGM header");
  }
  image.pixels.resize(static_cast<std::size_t>(image.width) * image.height);
  for (int& p : image.pixels) {
    if (!(ss >> p) || p < 0 || p > image.maxval) {
      throw Error(ErrorCode::kParseError, "bad PGM pixel data");
    }
  }
  return image;
}

std::string CertificateToJson(const DensityCertificate& cert,
                              std::string_view extra) {
  std::string s = "{\"start\":" + JsonTriple(cert.start) +
                  ",\"target\":" + JsonTriple(cert.target) +
                  ",\"epsilon\":" + FormatReal(cert.epsilon) +
                  ",\"word\":" + JsonString(FormatWord(cert.word)) +
                  ",\"achieved_error\":" + FormatReal(cert.achieved_error) +
                  ",\"k_bound\":" + std::to_string(cert.k_bound);
  if (!extra.empty()) {
    s += ',';
    s += extra;
  }
  return s + "}";
}

DensityCertificate CertificateFromJson(std::string_view text) {
  const json j = ParseJson(text);
  try {
    DensityCertificate cert;
    cert.start = TripleFromJson(j.at("start"));
    cert.target = TripleFromJson(j.at("target"));
    cert.epsilon = j.at("epsilon").get<double>();
    cert.word = ParseWord(j.at("word").get<std::string>());
    cert.achieved_error = j.at("achieved_error").get<double>();
    cert.k_bound = j.at("k_bound").get<int>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string RegionImageToJson(const RegionImage& region) {
  return "{\"word\":" + JsonString(FormatWord(region.word)) +
         ",\"vertices\":[" + JsonTriple(region.vertices[0]) + "," +
         JsonTriple(region.vertices[1]) + "," +
         JsonTriple(region.vertices[2]) + "]}";
}

RegionImage RegionImageFromJson(std::string_view text) {
  const json j = ParseJson(text);
  try {
    RegionImage r;
    r.word = ParseWord(j.at("word").get<std::string>());
    const json& v = j.at("vertices");
    if (!v.is_array() || v.size() != 3) {
      throw Error(ErrorCode::kParseError, "region needs three vertices");
    }
    for (int k = 0; k < 3; ++k) r.vertices[k] = TripleFromJson(v[k]);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace cevian
