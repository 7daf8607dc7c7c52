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

#include <cstddef>
#include <vector>

#include "sacsphere/mesh.hpp"
#include "sacsphere/meshgen.hpp"
#include "sacsphere/parallel.hpp"

namespace sacsphere {

/// Quality measures of one configuration. Distances are Euclidean chords.
struct MetricsReport {
  std::size_t n = 0;
  double separation = 0.0;  // delta: min pairwise distance
  double covering = 0.0;    // eta: max over the sphere of the nearest-point distance
  double mesh_ratio = 0.0;  // gamma = eta / delta
  double edge_ratio_min = 0.0;
  double edge_ratio_mean = 0.0;
  std::vector<std::size_t> edge_ratio_histogram;  // equal-width bins over [0, 1]
};

/// Minimum hull edge length. Nearest neighbours on the sphere are Delaunay
/// neighbours, so this equals the pairwise minimum.
double separation(const TriangulatedSphereMesh& hull, Exec exec = Exec::kParallel);

/// Largest distance from a spherical Voronoi vertex (the outward facet normal)
/// to the corners of its facet. Exact for the hull of points on the sphere.
double covering(const TriangulatedSphereMesh& hull, Exec exec = Exec::kParallel);

/// Per-face shortest over longest edge.
std::vector<double> edge_ratios(const TriangulatedSphereMesh& mesh, Exec exec = Exec::kParallel);

/// Config-level entry points; the hull is built when the config has none.
/// Throw ParameterError when N is too small (2 for separation, 4 otherwise).
double separation(const SphericalConfig& config, Exec exec = Exec::kParallel);
double covering(const SphericalConfig& config, Exec exec = Exec::kParallel);
double mesh_ratio(const SphericalConfig& config, Exec exec = Exec::kParallel);

MetricsReport compute_metrics(const TriangulatedSphereMesh& hull, Exec exec = Exec::kParallel,
                              std::size_t histogram_bins = 10);
MetricsReport compute_metrics(const SphericalConfig& config, Exec exec = Exec::kParallel,
                              std::size_t histogram_bins = 10);

/// The asymptotic lower bound sec(pi/5)/2 on the mesh ratio of a sequence.
double mesh_ratio_lower_bound() noexcept;

}  // namespace sacsphere
