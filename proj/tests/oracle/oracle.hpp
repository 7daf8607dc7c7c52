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

// Brute-force reference implementations used only by the test suites. None of
// these share code paths with the production kernels they certify.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "sacsphere/lattice.hpp"
#include "sacsphere/spherical_geometry.hpp"

namespace sacsphere::oracle {

/// O(N^2) minimum pairwise chord distance; requires 2 <= N <= 5000.
double brute_separation(std::span<const UnitVector> points);

/// Deterministic spherical Fibonacci spiral with `count` points.
std::vector<UnitVector> spiral_probes(std::size_t count);

/// Max over spiral probes of the distance to the nearest point: a lower bound
/// on the covering radius. Requires probes >= 1e4.
double sampled_covering(std::span<const UnitVector> points, std::size_t probes);

/// Upper bound on covering - sampled_covering for a spiral of `probes`
/// points: the nearest-point distance is 1-Lipschitz, so the gap is at most
/// the spiral's own covering radius, taken as kSpiralCoveringConstant /
/// sqrt(probes).
inline constexpr double kSpiralCoveringConstant = 4.0;
double sampling_resolution(std::size_t probes);

/// Lattice points of the (m, n) triangle by brute force over a generous box
/// with planar cross-product half-plane tests on integer coordinates.
std::vector<LatticePoint> enumerate_lattice(int m, int n);

/// Spherical excess from the angle sum (Girard), independent of the
/// production formula. Loses relative accuracy on tiny triangles.
double girard_area(const Vec3& a, const Vec3& b, const Vec3& c);

/// Uniform point on the sphere.
UnitVector random_unit(std::mt19937_64& rng);

/// Uniformly random points on the sphere.
std::vector<UnitVector> random_points(std::size_t n, std::mt19937_64& rng);

/// True when some closed hemisphere holds every point. Brute force over the
/// candidate boundary planes through the origin; requires N <= 200.
bool in_closed_hemisphere(std::span<const UnitVector> points);

/// Random points redrawn until no closed hemisphere holds them all.
std::vector<UnitVector> random_surrounding_points(std::size_t n, std::mt19937_64& rng);

/// Random counterclockwise, well-shaped spherical triangle with longest chord
/// close to `size`, placed at a random spot.
SphericalTriangle random_triangle(std::mt19937_64& rng, double size);

/// Uniform coordinates strictly inside the simplex (margin 1e-6).
BaryCoord random_interior(std::mt19937_64& rng);

/// Random proper rotation matrix.
Eigen::Matrix3d random_rotation(std::mt19937_64& rng);

/// The 60 rotations mapping the base icosahedron onto itself, derived from
/// its vertex set.
std::vector<Eigen::Matrix3d> icosahedral_rotations(std::span<const UnitVector> ico_vertices);

/// True when every point of `b` is within `tol` of some point of `a` and the
/// sizes match (brute force).
bool same_point_set(std::span<const UnitVector> a, std::span<const UnitVector> b, double tol);

}  // namespace sacsphere::oracle
