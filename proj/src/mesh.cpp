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

#include "sacsphere/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sacsphere/errors.hpp"

namespace sacsphere {

std::vector<Edge> mesh_edges(const TriangulatedSphereMesh& mesh) {
  std::vector<Edge> edges;
  edges.reserve(mesh.faces.size() * 3);
  for (const Face& f : mesh.faces) {
    for (int i = 0; i < 3; ++i) edges.push_back(make_edge(f[i], f[(i + 1) % 3]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void validate_mesh(const TriangulatedSphereMesh& mesh) {
  const std::size_t nv = mesh.vertices.size();
  for (std::size_t i = 0; i < nv; ++i) {
    if (std::abs(mesh.vertices[i].norm() - 1.0) > 1e-12) {
      throw GeometryError("mesh vertex " + std::to_string(i) + " is not on the unit sphere");
    }
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> directed;
  directed.reserve(mesh.faces.size() * 3);
  for (std::size_t fi = 0; fi < mesh.faces.size(); ++fi) {
    const Face& f = mesh.faces[fi];
    for (int i = 0; i < 3; ++i) {
      if (f[i] >= nv) throw GeometryError("face " + std::to_string(fi) + " index out of range");
      if (f[i] == f[(i + 1) % 3]) throw GeometryError("face " + std::to_string(fi) + " repeats a vertex");
      directed.emplace_back(f[i], f[(i + 1) % 3]);
    }
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& c = mesh.vertices[f[2]];
    if ((b - a).cross(c - a).dot(a + b + c) <= 0.0) {
      throw GeometryError("face " + std::to_string(fi) + " is not outward oriented");
    }
  }
  std::sort(directed.begin(), directed.end());
  if (std::adjacent_find(directed.begin(), directed.end()) != directed.end()) {
    throw GeometryError("directed edge used by more than one face");
  }
  for (const auto& [a, b] : directed) {
    if (!std::binary_search(directed.begin(), directed.end(), std::make_pair(b, a))) {
      throw GeometryError("boundary edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") has no opposite face");
    }
  }

  std::vector<bool> used(nv, false);
  for (const Face& f : mesh.faces) {
    for (auto v : f) used[v] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw GeometryError("mesh has isolated vertices");
  }

  const auto e = static_cast<long long>(directed.size() / 2);
  const auto euler = static_cast<long long>(nv) - e + static_cast<long long>(mesh.faces.size());
  if (euler != 2) {
    throw GeometryError("Euler characteristic " + std::to_string(euler) + " != 2");
  }
}

}  // namespace sacsphere
