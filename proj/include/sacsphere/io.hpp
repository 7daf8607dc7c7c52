// Copyright 2026 The sacsphere Authors.
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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sacsphere/meshgen.hpp"
#include "sacsphere/metrics.hpp"

namespace sacsphere::io {

// One `x,y,z` line per point, 17 significant digits, no header.
void write_csv(std::ostream& os, const std::vector<UnitVector>& points);

/// Reads `x,y,z` lines. Blank lines, `#` comments and a leading non-numeric
/// header line are skipped. Points within 1e-12 of unit norm are kept
/// bit-exact; others within 1e-6 are renormalised; anything else is an
/// IoError naming the line.
std::vector<UnitVector> read_csv(std::istream& is);

// Wavefront OBJ: `v` lines followed by 1-based `f` lines.
void write_obj(std::ostream& os, const TriangulatedSphereMesh& mesh);

/// Provenance, N and optionally metrics as a JSON object; `points` adds the
/// coordinates under "points".
std::string metadata_json(const SphericalConfig& config, const std::optional<MetricsReport>& metrics,
                          bool with_points);

/// Key/value lines (`key=value`) with the mesh ratio at 17 significant digits.
std::string metrics_kv(const MetricsReport& m);
/// Header plus one data row.
std::string metrics_csv(const MetricsReport& m, const std::string& label);
std::string metrics_text(const MetricsReport& m);

std::vector<UnitVector> read_csv_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace sacsphere::io
