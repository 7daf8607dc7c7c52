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

#include "sacsphere/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sacsphere/errors.hpp"

namespace sacsphere::io {

namespace {

std::string fmt17(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<UnitVector>& points) {
  os << std::setprecision(17);
  for (const auto& p : points) os << p.x() << ',' << p.y() << ',' << p.z() << '\n';
}

std::vector<UnitVector> read_csv(std::istream& is) {
  std::vector<UnitVector> points;
  std::string line;
  std::size_t lineno = 0;
  bool first_record = true;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    double xyz[3];
    std::size_t field = 0;
    bool ok = true;
    std::size_t start = 0;
    while (ok) {
      const std::size_t comma = line.find(',', start);
      const std::string_view tok = std::string_view(line).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (field >= 3 || !parse_double(tok, xyz[field])) ok = false;
      ++field;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!ok || field != 3) {
      if (first_record) {
        first_record = false;  // header line
        continue;
      }
      throw IoError("line " + std::to_string(lineno) + ": expected three comma-separated numbers");
    }
    first_record = false;
    Vec3 p(xyz[0], xyz[1], xyz[2]);
    const double err = std::abs(p.norm() - 1.0);
    if (err > 1e-6 || !p.allFinite()) {
      throw IoError("line " + std::to_string(lineno) + ": point is not on the unit sphere");
    }
    if (err > 1e-12) p.normalize();
    points.push_back(p);
  }
  return points;
}

void write_obj(std::ostream& os, const TriangulatedSphereMesh& mesh) {
  os << std::setprecision(17);
  for (const auto& v : mesh.vertices) os << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

std::string metadata_json(const SphericalConfig& config, const std::optional<MetricsReport>& metrics,
                          bool with_points) {
  nlohmann::ordered_json j;
  j["base"] = config.base;
  if (config.sequence) {
    j["sequence"] = format_sequence(*config.sequence);
    j["sequence_pretty"] = describe_sequence(*config.sequence);
  }
  j["N"] = config.points.size();
  if (metrics) {
    j["metrics"] = {{"separation", metrics->separation},
                    {"covering", metrics->covering},
                    {"mesh_ratio", metrics->mesh_ratio},
                    {"edge_ratio_min", metrics->edge_ratio_min},
                    {"edge_ratio_mean", metrics->edge_ratio_mean},
                    {"edge_ratio_histogram", metrics->edge_ratio_histogram}};
  }
  if (with_points) {
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : config.points) pts.push_back({p.x(), p.y(), p.z()});
  }
  return j.dump(2) + "\n";
}

std::string metrics_kv(const MetricsReport& m) {
  std::ostringstream os;
  os << "N=" << m.n << '\n'
     << "separation=" << fmt17(m.separation) << '\n'
     << "covering=" << fmt17(m.covering) << '\n'
     << "mesh_ratio=" << fmt17(m.mesh_ratio) << '\n'
     << "edge_ratio_min=" << fmt17(m.edge_ratio_min) << '\n'
     << "edge_ratio_mean=" << fmt17(m.edge_ratio_mean) << '\n'
     << "edge_ratio_histogram=";
  for (std::size_t i = 0; i < m.edge_ratio_histogram.size(); ++i) {
    os << (i ? ";" : "") << m.edge_ratio_histogram[i];
  }
  os << '\n';
  return os.str();
}

std::string metrics_csv(const MetricsReport& m, const std::string& label) {
  std::ostringstream os;
  os << "label,N,separation,covering,mesh_ratio,edge_ratio_min,edge_ratio_mean\n"
     << '"' << label << '"' << ',' << m.n << ',' << fmt17(m.separation) << ','
     << fmt17(m.covering) << ',' << fmt17(m.mesh_ratio) << ',' << fmt17(m.edge_ratio_min)
     << ',' << fmt17(m.edge_ratio_mean) << '\n';
  return os.str();
}

std::string metrics_text(const MetricsReport& m) {
  std::ostringstream os;
  os << std::setprecision(8);
  os << "points            N = " << m.n << '\n'
     << "separation    delta = " << m.separation << '\n'
     << "covering        eta = " << m.covering << '\n'
     << "mesh ratio    gamma = " << m.mesh_ratio << '\n'
     << "edge ratio      min = " << m.edge_ratio_min << ", mean = " << m.edge_ratio_mean << '\n'
     << "edge ratio histogram:";
  const auto bins = m.edge_ratio_histogram.size();
  for (std::size_t i = 0; i < bins; ++i) {
    os << "\n  [" << std::setprecision(2) << std::fixed << static_cast<double>(i) / bins << ", "
       << static_cast<double>(i + 1) / bins << (i + 1 == bins ? "]" : ")") << "  "
       << m.edge_ratio_histogram[i];
  }
  os << '\n';
  return os.str();
}

std::vector<UnitVector> read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace sacsphere::io
