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

#include "sacsphere/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "sacsphere/errors.hpp"
#include "sacsphere/hull.hpp"
#include "predicates.hpp"

namespace sacsphere {

namespace {

constexpr double kSliverNormal = 1e-14;

double chord(const Vec3& a, const Vec3& b) noexcept { return (a - b).norm(); }

// Outward unit direction of the circumcentre of facet (a, b, c); NaN when the
// facet plane passes through the origin.
Vec3 voronoi_vertex(const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 n = (b - a).cross(c - a);
  const double len = n.norm();
  if (len >= kSliverNormal) {
    n /= len;
  } else {
    // x.a = x.b = x.c = 1 defines the facet plane; x is its normal.
    Eigen::Matrix3d m;
    m.row(0) = a.transpose();
    m.row(1) = b.transpose();
    m.row(2) = c.transpose();
    Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
    if (!lu.isInvertible()) return Vec3::Constant(std::numeric_limits<double>::quiet_NaN());
    n = lu.solve(Vec3::Ones()).normalized();
  }
  if (n.dot(a + b + c) < 0.0) n = -n;
  return n;
}

template <typename PerFace>
double reduce_max(const TriangulatedSphereMesh& mesh, Exec exec, PerFace&& per_face) {
  const auto nf = static_cast<std::int64_t>(mesh.faces.size());
  double best = -std::numeric_limits<double>::infinity();
  if (exec == Exec::kParallel) {
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::int64_t f = 0; f < nf; ++f) best = std::max(best, per_face(mesh.faces[f]));
  } else {
    for (std::int64_t f = 0; f < nf; ++f) best = std::max(best, per_face(mesh.faces[f]));
  }
  return best;
}

void require_hull(const TriangulatedSphereMesh& hull) {
  if (hull.vertices.size() < 4 || hull.faces.size() < 4) {
    throw GeometryError("metrics need a closed hull over at least 4 points");
  }
}

const TriangulatedSphereMesh& hull_of(const SphericalConfig& config,
                                      std::optional<TriangulatedSphereMesh>& storage) {
  if (config.hull) return *config.hull;
  storage = convex_hull_triangulation(config.points);
  return *storage;
}

}  // namespace

double separation(const TriangulatedSphereMesh& hull, Exec exec) {
  require_hull(hull);
  const auto& v = hull.vertices;
  return -reduce_max(hull, exec, [&](const Face& f) {
    return -std::min({chord(v[f[0]], v[f[1]]), chord(v[f[1]], v[f[2]]), chord(v[f[2]], v[f[0]])});
  });
}

double covering(const TriangulatedSphereMesh& hull, Exec exec) {
  require_hull(hull);
  const auto& v = hull.vertices;
  std::atomic<bool> degenerate{false};
  std::atomic<bool> hemispherical{false};
  const Vec3 origin = Vec3::Zero();
  const double eta = reduce_max(hull, exec, [&](const Face& f) {
    const Vec3& a = v[f[0]];
    const Vec3& b = v[f[1]];
    const Vec3& c = v[f[2]];
    // The origin must lie strictly inside every facet of an outward hull.
    if (detail::orient3d(a, b, c, origin) >= 0) {
      hemispherical.store(true, std::memory_order_relaxed);
      return 0.0;
    }
    const Vec3 y = voronoi_vertex(a, b, c);
    if (!y.allFinite()) {
      degenerate.store(true, std::memory_order_relaxed);
      return 0.0;
    }
    return std::max({chord(y, a), chord(y, b), chord(y, c)});
  });
  if (hemispherical.load()) throw GeometryError("covering radius: points lie in a closed hemisphere");
  if (degenerate.load()) throw GeometryError("degenerate hull facet through the origin");
  return eta;
}

std::vector<double> edge_ratios(const TriangulatedSphereMesh& mesh, Exec exec) {
  const auto nf = static_cast<std::int64_t>(mesh.faces.size());
  std::vector<double> out(mesh.faces.size());
  bool degenerate = false;
  auto body = [&](std::int64_t i) {
    const Face& f = mesh.faces[i];
    const auto& v = mesh.vertices;
    const double e0 = chord(v[f[0]], v[f[1]]);
    const double e1 = chord(v[f[1]], v[f[2]]);
    const double e2 = chord(v[f[2]], v[f[0]]);
    const double lo = std::min({e0, e1, e2});
    const double hi = std::max({e0, e1, e2});
    if (!(lo > 0.0)) return false;
    out[i] = lo / hi;
    return true;
  };
  if (exec == Exec::kParallel) {
#pragma omp parallel for reduction(|| : degenerate) schedule(static)
    for (std::int64_t i = 0; i < nf; ++i) degenerate = !body(i) || degenerate;
  } else {
    for (std::int64_t i = 0; i < nf; ++i) degenerate = !body(i) || degenerate;
  }
  if (degenerate) throw GeometryError("degenerate face with a zero-length edge");
  return out;
}

double separation(const SphericalConfig& config, Exec exec) {
  const auto& p = config.points;
  if (p.size() < 2) throw ParameterError("separation needs at least 2 points");
  if (p.size() < 4 && !config.hull) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) best = std::min(best, chord(p[i], p[j]));
    }
    return best;
  }
  std::optional<TriangulatedSphereMesh> storage;
  return separation(hull_of(config, storage), exec);
}

double covering(const SphericalConfig& config, Exec exec) {
  if (config.points.size() < 4) throw ParameterError("covering radius needs at least 4 points");
  std::optional<TriangulatedSphereMesh> storage;
  return covering(hull_of(config, storage), exec);
}

double mesh_ratio(const SphericalConfig& config, Exec exec) {
  if (config.points.size() < 4) throw ParameterError("mesh ratio needs at least 4 points");
  std::optional<TriangulatedSphereMesh> storage;
  const TriangulatedSphereMesh& hull = hull_of(config, storage);
  return covering(hull, exec) / separation(hull, exec);
}

MetricsReport compute_metrics(const TriangulatedSphereMesh& hull, Exec exec,
                              std::size_t histogram_bins) {
  MetricsReport r;
  r.n = hull.vertices.size();
  r.separation = separation(hull, exec);
  r.covering = covering(hull, exec);
  r.mesh_ratio = r.covering / r.separation;

  const std::vector<double> ratios = edge_ratios(hull, exec);
  r.edge_ratio_min = *std::min_element(ratios.begin(), ratios.end());
  double sum = 0.0;
  for (double x : ratios) sum += x;
  r.edge_ratio_mean = sum / static_cast<double>(ratios.size());
  r.edge_ratio_histogram.assign(std::max<std::size_t>(histogram_bins, 1), 0);
  const auto bins = r.edge_ratio_histogram.size();
  for (double x : ratios) {
    const auto b = std::min(bins - 1, static_cast<std::size_t>(x * static_cast<double>(bins)));
    ++r.edge_ratio_histogram[b];
  }
  return r;
}

MetricsReport compute_metrics(const SphericalConfig& config, Exec exec,
                              std::size_t histogram_bins) {
  if (config.points.size() < 4) throw ParameterError("metrics need at least 4 points");
  std::optional<TriangulatedSphereMesh> storage;
  return compute_metrics(hull_of(config, storage), exec, histogram_bins);
}

double mesh_ratio_lower_bound() noexcept { return 0.5 / std::cos(std::numbers::pi / 5.0); }

}  // namespace sacsphere
