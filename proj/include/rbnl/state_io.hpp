// Copyright 2026 The rbnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "rbnl/errors.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

// State file layout:
//   {"dims": [dA, dB],
//    "matrix": [[{"re": 0.5, "im": 0.0}, ...], ...]}   (row-major)

inline nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < rho.matrix().rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < rho.matrix().cols(); ++j) {
      const Complex z = rho.matrix()(i, j);
      row.push_back({{"re", z.real()}, {"im", z.imag()}});
    }
    rows.push_back(std::move(row));
  }
  return {{"dims", {rho.dims().a, rho.dims().b}}, {"matrix", std::move(rows)}};
}

/// Parses and validates; schema problems surface as DomainError("json").
inline DensityMatrix density_from_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& msg) -> DensityMatrix { throw DomainError("json", msg); };
  if (!doc.is_object()) return fail("state document must be an object");
  if (!doc.contains("dims") || !doc.contains("matrix")) {
    return fail("state document needs \"dims\" and \"matrix\"");
  }
  const auto& dims = doc["dims"];
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer()) {
    return fail("\"dims\" must be [dA, dB] with integer entries");
  }
  const Dims d{dims[0].get<int>(), dims[1].get<int>()};
  if (d.a < 1 || d.b < 1) return fail("dimensions must be positive");

  const auto& rows = doc["matrix"];
  if (!rows.is_array()) return fail("\"matrix\" must be an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw DomainError("square", "row " + std::to_string(i) + " does not have " +
                                      std::to_string(n) + " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& e = row[static_cast<std::size_t>(j)];
      if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() ||
          !e["im"].is_number()) {
        return fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") must be {\"re\": number, \"im\": number}");
      }
      m(i, j) = Complex(e["re"].get<double>(), e["im"].get<double>());
    }
  }
  return DensityMatrix(std::move(m), d);
}

inline DensityMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("json", std::string("malformed JSON: ") + e.what());
  }
  return density_from_json(doc);
}

inline void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file " + path.string());
  out << to_json(rho).dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace rbnl
