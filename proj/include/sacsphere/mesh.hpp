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

#include <array>
#include <cstdint>
#include <vector>

#include "sacsphere/spherical_geometry.hpp"

namespace sacsphere {

using Face = std::array<std::uint32_t, 3>;

/// Closed triangulated mesh with vertices on the unit sphere. Faces are
/// counterclockwise seen from outside.
struct TriangulatedSphereMesh {
  std::vector<UnitVector> vertices;
  std::vector<Face> faces;

  std::size_t edge_count() const noexcept { return faces.size() * 3 / 2; }
};

/// Undirected edge (lo, hi), lo < hi.
struct Edge {
  std::uint32_t lo;
  std::uint32_t hi;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(std::uint32_t a, std::uint32_t b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Sorted, unique list of undirected edges.
std::vector<Edge> mesh_edges(const TriangulatedSphereMesh& mesh);

/// Checks the closed 2-manifold structure (every directed edge appears once
/// and its reverse once), the Euler characteristic V - E + F = 2, unit-norm
/// vertices within 1e-12 and outward orientation. Throws GeometryError with a
/// description of the first violation.
void validate_mesh(const TriangulatedSphereMesh& mesh);

}  // namespace sacsphere
