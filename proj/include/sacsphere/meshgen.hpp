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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacsphere/mesh.hpp"
#include "sacsphere/parallel.hpp"
#include "sacsphere/sequence.hpp"

namespace sacsphere {

enum class BasePolyhedron { kTetrahedron, kOctahedron, kIcosahedron };

/// Accepts tetra|tetrahedron, octa|octahedron, icosa|icosahedron.
BasePolyhedron parse_base(std::string_view name);
std::string_view base_name(BasePolyhedron base) noexcept;

/// Unit-circumradius regular polyhedra in fixed orientations:
///  - tetrahedron: normalised (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1);
///  - octahedron: (+-1,0,0), (0,+-1,0), (0,0,+-1);
///  - icosahedron: vertices at +-z, an upper ring at z = 1/sqrt(5) with
///    longitudes 72k degrees and a lower ring at z = -1/sqrt(5) with
///    longitudes 36 + 72k degrees.
TriangulatedSphereMesh base_polyhedron(BasePolyhedron base);
TriangulatedSphereMesh base_polyhedron(std::string_view name);

/// An N-point configuration omega_N with its provenance.
struct SphericalConfig {
  std::vector<UnitVector> points;
  std::string base;                             // polyhedron name, or "file"
  std::optional<IntegerPairSequence> sequence;  // absent for imported sets
  std::optional<TriangulatedSphereMesh> hull;   // over `points` when present
};

/// 2 + (V0 - 2) * prod(gamma_k); throws ParameterError on overflow.
std::uint64_t expected_cardinality(std::size_t base_vertices, const IntegerPairSequence& seq);

/// Merges points closer than `tolerance` (quantised-grid hashing with
/// neighbour-cell checks). Keeps the first occurrence, preserving order.
std::vector<UnitVector> dedup_points(std::span<const UnitVector> points, double tolerance = 1e-9);

/// Orders points by (z, atan2(y, x)) with a lexicographic fallback.
void canonical_sort(std::vector<UnitVector>& points);

struct SubdivisionStats {
  // Largest chord distance between the two SAC solutions an interior mesh
  // edge point receives from its two incident faces. Zero on meshes whose
  // adjacent faces are mirror images (e.g. the regular base polyhedra).
  double max_edge_disagreement = 0.0;
};

/// Places the (m, n) lattice on every face through spherical area
/// coordinates and merges shared points.
///
/// Points on a mesh edge realise their area coordinate with respect to each
/// incident face, and the two solutions differ when the faces are not mirror
/// images. Each edge point is therefore solved on both faces and the
/// normalised mean is used by both, so that every face emits bit-identical
/// boundary points. The merged set is checked against (V - 2) * gamma + 2 and
/// the result is returned in canonical order. Throws ConsistencyError on a
/// count mismatch and rethrows SolverError with the face index prepended.
SphericalConfig subdivide_mesh(const TriangulatedSphereMesh& mesh, const IntegerPair& pair,
                               Exec exec = Exec::kParallel, SubdivisionStats* stats = nullptr);

/// Folds subdivide_mesh and convex_hull_triangulation over `seq` starting
/// from the base polyhedron. The hull of the final points is attached when
/// `with_hull` is set.
SphericalConfig generate(BasePolyhedron base, const IntegerPairSequence& seq,
                         Exec exec = Exec::kParallel, bool with_hull = true);

}  // namespace sacsphere
