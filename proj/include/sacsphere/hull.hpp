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

#include <span>

#include "sacsphere/mesh.hpp"

namespace sacsphere {

/// Convex hull of points on the unit sphere, which is also their spherical
/// Delaunay triangulation.
///
/// Quickhull with exact orientation predicates: a point is treated as
/// outside a facet only when it is strictly above the facet plane, so
/// cocircular patches (the octahedron, symmetric generated sets) come out as
/// several coplanar triangles. The insertion order is a fixed function of the
/// input, so identical inputs give identical meshes. Faces are returned with
/// their smallest vertex index first, sorted lexicographically.
///
/// Throws GeometryError for fewer than 4 points, rank-deficient input, or
/// when some input point does not end up as a hull vertex (duplicates, or
/// points strictly inside the hull of the others).
TriangulatedSphereMesh convex_hull_triangulation(std::span<const UnitVector> points);

}  // namespace sacsphere
