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

#include "sacsphere/meshgen.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <unordered_map>

#include "sacsphere/errors.hpp"
#include "sacsphere/hull.hpp"
#include "sacsphere/lattice.hpp"

namespace sacsphere {

BasePolyhedron parse_base(std::string_view name) {
  if (name == "tetra" || name == "tetrahedron") return BasePolyhedron::kTetrahedron;
  if (name == "octa" || name == "octahedron") return BasePolyhedron::kOctahedron;
  if (name == "icosa" || name == "icosahedron") return BasePolyhedron::kIcosahedron;
  throw ParameterError("unknown base polyhedron '" + std::string(name) +
                       "' (expected tetra, octa or icosa)");
}

std::string_view base_name(BasePolyhedron base) noexcept {
  switch (base) {
    case BasePolyhedron::kTetrahedron: return "tetrahedron";
    case BasePolyhedron::kOctahedron: return "octahedron";
    case BasePolyhedron::kIcosahedron: return "icosahedron";
  }
  return "unknown";
}

namespace {

TriangulatedSphereMesh oriented(std::vector<UnitVector> vertices, std::vector<Face> faces) {
  for (Face& f : faces) {
    const Vec3& a = vertices[f[0]];
    const Vec3& b = vertices[f[1]];
    const Vec3& c = vertices[f[2]];
    if ((b - a).cross(c - a).dot(a + b + c) < 0.0) std::swap(f[1], f[2]);
  }
  return {std::move(vertices), std::move(faces)};
}

TriangulatedSphereMesh tetrahedron() {
  std::vector<UnitVector> v = {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
  for (auto& p : v) p.normalize();
  return oriented(std::move(v), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TriangulatedSphereMesh octahedron() {
  std::vector<UnitVector> v = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                               Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
  std::vector<Face> f;
  for (std::uint32_t x : {0u, 1u}) {
    for (std::uint32_t y : {2u, 3u}) {
      for (std::uint32_t z : {4u, 5u}) f.push_back({x, y, z});
    }
  }
  return oriented(std::move(v), std::move(f));
}

TriangulatedSphereMesh icosahedron() {
  const double z = 1.0 / std::sqrt(5.0);
  const double r = 2.0 / std::sqrt(5.0);
  std::vector<UnitVector> v;
  v.emplace_back(0, 0, 1);
  for (int k = 0; k < 5; ++k) {
    const double lon = 2.0 * std::numbers::pi * k / 5.0;
    v.emplace_back(r * std::cos(lon), r * std::sin(lon), z);
  }
  for (int k = 0; k < 5; ++k) {
    const double lon = 2.0 * std::numbers::pi * k / 5.0 + std::numbers::pi / 5.0;
    v.emplace_back(r * std::cos(lon), r * std::sin(lon), -z);
  }
  v.emplace_back(0, 0, -1);
  for (auto& p : v) p.normalize();

  std::vector<Face> f;
  for (std::uint32_t k = 0; k < 5; ++k) {
    const std::uint32_t u0 = 1 + k, u1 = 1 + (k + 1) % 5;
    const std::uint32_t l0 = 6 + k, l1 = 6 + (k + 1) % 5;
    f.push_back({0, u0, u1});
    f.push_back({u0, l0, u1});
    f.push_back({u1, l0, l1});
    f.push_back({11, l1, l0});
  }
  return oriented(std::move(v), std::move(f));
}

// Exact classification of a lattice point relative to its face.
enum class Where { kV0, kVa, kVb, kEdge0a, kEdge0b, kEdgeAb, kInterior };

struct ClassifiedPoint {
  RationalBary bary;
  Where where;
};

std::vector<ClassifiedPoint> classify(const IntegerPair& pair) {
  std::vector<ClassifiedPoint> out;
  for (const LatticePoint& p : lattice_points(pair)) {
    const RationalBary r = to_barycentric_exact(p, pair);
    Where w = Where::kInterior;
    const bool a0 = r.num_a == 0, b0 = r.num_b == 0, z0 = r.num_0() == 0;
    if (a0 && b0) w = Where::kV0;
    else if (b0 && z0) w = Where::kVa;
    else if (a0 && z0) w = Where::kVb;
    else if (b0) w = Where::kEdge0a;
    else if (a0) w = Where::kEdge0b;
    else if (z0) w = Where::kEdgeAb;
    out.push_back({r, w});
  }
  return out;
}

// Point k/den along the undirected edge (lo, hi), measured from lo.
struct EdgeKey {
  std::uint32_t lo;
  std::uint32_t hi;
  std::int64_t k;

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

EdgeKey edge_key(const Face& f, const ClassifiedPoint& cp) {
  std::uint32_t from = 0, to = 0;
  std::int64_t k = 0;
  switch (cp.where) {
    case Where::kEdge0a: from = f[0]; to = f[1]; k = cp.bary.num_a; break;
    case Where::kEdge0b: from = f[0]; to = f[2]; k = cp.bary.num_b; break;
    case Where::kEdgeAb: from = f[1]; to = f[2]; k = cp.bary.num_b; break;
    default: break;
  }
  if (from < to) return {from, to, k};
  return {to, from, cp.bary.den - k};
}

struct EdgeSample {
  EdgeKey key;
  std::uint32_t face;
  UnitVector point;
};

// Runs body(face) for every face, serially or with OpenMP. Exceptions are
// captured per face and the one from the lowest face index is rethrown.
template <typename Body>
void for_each_face(std::size_t face_count, Exec exec, Body&& body) {
  std::vector<std::exception_ptr> errors(face_count);
  const auto n = static_cast<std::int64_t>(face_count);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t f = 0; f < n; ++f) {
      try {
        body(static_cast<std::size_t>(f));
      } catch (...) {
        errors[f] = std::current_exception();
      }
    }
  } else {
    for (std::int64_t f = 0; f < n; ++f) {
      try {
        body(static_cast<std::size_t>(f));
      } catch (...) {
        errors[f] = std::current_exception();
      }
    }
  }
  for (std::size_t f = 0; f < face_count; ++f) {
    if (!errors[f]) continue;
    try {
      std::rethrow_exception(errors[f]);
    } catch (const SolverError& e) {
      throw SolverError("face " + std::to_string(f) + ": " + e.what(), e.residual());
    } catch (const GeometryError& e) {
      throw GeometryError("face " + std::to_string(f) + ": " + e.what());
    }
  }
}

SphericalTriangle face_triangle(const TriangulatedSphereMesh& mesh, const Face& f) {
  return {mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]]};
}

}  // namespace

TriangulatedSphereMesh base_polyhedron(BasePolyhedron base) {
  switch (base) {
    case BasePolyhedron::kTetrahedron: return tetrahedron();
    case BasePolyhedron::kOctahedron: return octahedron();
    case BasePolyhedron::kIcosahedron: return icosahedron();
  }
  throw ParameterError("unknown base polyhedron");
}

TriangulatedSphereMesh base_polyhedron(std::string_view name) {
  return base_polyhedron(parse_base(name));
}

std::uint64_t expected_cardinality(std::size_t base_vertices, const IntegerPairSequence& seq) {
  if (base_vertices < 4) throw ParameterError("base mesh needs at least 4 vertices");
  const auto prod = seq.gamma_product();
  const std::uint64_t v = base_vertices - 2;
  if (!prod || *prod > (std::numeric_limits<std::uint64_t>::max() - 2) / v) {
    throw ParameterError("configuration size overflows");
  }
  return v * *prod + 2;
}

std::vector<UnitVector> dedup_points(std::span<const UnitVector> points, double tolerance) {
  struct CellHash {
    std::size_t operator()(const std::array<std::int64_t, 3>& c) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (auto v : c) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_map<std::array<std::int64_t, 3>, std::vector<std::uint32_t>, CellHash> grid;
  grid.reserve(points.size());
  std::vector<UnitVector> kept;
  kept.reserve(points.size());
  const double tol2 = tolerance * tolerance;

  for (const UnitVector& p : points) {
    const std::array<std::int64_t, 3> cell = {
        static_cast<std::int64_t>(std::floor(p.x() / tolerance)),
        static_cast<std::int64_t>(std::floor(p.y() / tolerance)),
        static_cast<std::int64_t>(std::floor(p.z() / tolerance))};
    bool duplicate = false;
    for (int dx = -1; dx <= 1 && !duplicate; ++dx) {
      for (int dy = -1; dy <= 1 && !duplicate; ++dy) {
        for (int dz = -1; dz <= 1 && !duplicate; ++dz) {
          auto it = grid.find({cell[0] + dx, cell[1] + dy, cell[2] + dz});
          if (it == grid.end()) continue;
          for (std::uint32_t idx : it->second) {
            if ((kept[idx] - p).squaredNorm() <= tol2) {
              duplicate = true;
              break;
            }
          }
        }
      }
    }
    if (duplicate) continue;
    grid[cell].push_back(static_cast<std::uint32_t>(kept.size()));
    kept.push_back(p);
  }
  return kept;
}

void canonical_sort(std::vector<UnitVector>& points) {
  std::vector<std::pair<double, std::uint32_t>> keys(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    keys[i] = {std::atan2(points[i].y(), points[i].x()), i};
  }
  std::vector<std::uint32_t> order(points.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    const Vec3& a = points[i];
    const Vec3& b = points[j];
    return std::tuple(a.z(), keys[i].first, a.x(), a.y()) <
           std::tuple(b.z(), keys[j].first, b.x(), b.y());
  });
  std::vector<UnitVector> sorted;
  sorted.reserve(points.size());
  for (auto i : order) sorted.push_back(points[i]);
  points = std::move(sorted);
}

SphericalConfig subdivide_mesh(const TriangulatedSphereMesh& mesh, const IntegerPair& pair,
                               Exec exec, SubdivisionStats* stats) {
  const std::vector<ClassifiedPoint> lattice = classify(pair);
  const std::size_t nf = mesh.faces.size();

  std::vector<const ClassifiedPoint*> edge_pts, interior_pts;
  for (const auto& cp : lattice) {
    if (cp.where == Where::kEdge0a || cp.where == Where::kEdge0b || cp.where == Where::kEdgeAb) {
      edge_pts.push_back(&cp);
    } else if (cp.where == Where::kInterior) {
      interior_pts.push_back(&cp);
    }
  }

  // 1. Every face solves its own edge points.
  std::vector<EdgeSample> samples(nf * edge_pts.size());
  for_each_face(nf, exec, [&](std::size_t fi) {
    const Face& f = mesh.faces[fi];
    const SphericalTriangle tri = face_triangle(mesh, f);
    for (std::size_t k = 0; k < edge_pts.size(); ++k) {
      samples[fi * edge_pts.size() + k] = {edge_key(f, *edge_pts[k]), static_cast<std::uint32_t>(fi),
                                           sac_solve(tri, edge_pts[k]->bary.to_double())};
    }
  });

  // 2. Both incident faces share the normalised mean.
  std::sort(samples.begin(), samples.end(), [](const EdgeSample& a, const EdgeSample& b) {
    return std::tie(a.key, a.face) < std::tie(b.key, b.face);
  });
  std::vector<std::pair<EdgeKey, UnitVector>> edge_table;
  edge_table.reserve(samples.size() / 2);
  double disagreement = 0.0;
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j].key == samples[i].key) ++j;
    if (j - i != 2) {
      throw ConsistencyError("mesh edge (" + std::to_string(samples[i].key.lo) + "," +
                             std::to_string(samples[i].key.hi) + ") is used by " +
                             std::to_string(j - i) + " face(s), expected 2");
    }
    disagreement = std::max(disagreement, (samples[i].point - samples[i + 1].point).norm());
    edge_table.emplace_back(samples[i].key, (samples[i].point + samples[i + 1].point).normalized());
    i = j;
  }
  if (stats) stats->max_edge_disagreement = disagreement;
  auto edge_point = [&](const EdgeKey& key) -> const UnitVector& {
    auto it = std::lower_bound(edge_table.begin(), edge_table.end(), key,
                               [](const auto& e, const EdgeKey& k) { return e.first < k; });
    return it->second;
  };

  // 3. Interior points, then every face emits its full lattice.
  std::vector<std::vector<UnitVector>> per_face(nf);
  for_each_face(nf, exec, [&](std::size_t fi) {
    const Face& f = mesh.faces[fi];
    const SphericalTriangle tri = face_triangle(mesh, f);
    auto& out = per_face[fi];
    out.reserve(lattice.size());
    for (const auto& cp : lattice) {
      switch (cp.where) {
        case Where::kV0: out.push_back(tri.v0); break;
        case Where::kVa: out.push_back(tri.va); break;
        case Where::kVb: out.push_back(tri.vb); break;
        case Where::kInterior: out.push_back(sac_solve(tri, cp.bary.to_double())); break;
        default: out.push_back(edge_point(edge_key(f, cp))); break;
      }
    }
  });

  std::vector<UnitVector> all;
  all.reserve(nf * lattice.size());
  for (auto& v : per_face) all.insert(all.end(), v.begin(), v.end());
  std::vector<UnitVector> merged = dedup_points(all);

  const std::uint64_t expected =
      static_cast<std::uint64_t>(mesh.vertices.size() - 2) * static_cast<std::uint64_t>(pair.gamma()) + 2;
  if (merged.size() != expected) {
    throw ConsistencyError("subdivision produced " + std::to_string(merged.size()) +
                           " distinct points, expected " + std::to_string(expected));
  }
  canonical_sort(merged);

  SphericalConfig cfg;
  cfg.points = std::move(merged);
  return cfg;
}

SphericalConfig generate(BasePolyhedron base, const IntegerPairSequence& seq, Exec exec,
                         bool with_hull) {
  TriangulatedSphereMesh mesh = base_polyhedron(base);
  const std::uint64_t expected = expected_cardinality(mesh.vertices.size(), seq);
  if (expected > std::numeric_limits<std::int32_t>::max() / 4) {
    throw ParameterError("configuration with N = " + std::to_string(expected) + " is too large");
  }

  SphericalConfig cfg;
  const auto& pairs = seq.pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    cfg = subdivide_mesh(mesh, pairs[k], exec);
    const bool last = k + 1 == pairs.size();
    if (!last || with_hull) mesh = convex_hull_triangulation(cfg.points);
  }
  if (cfg.points.size() != expected) {
    throw ConsistencyError("generated " + std::to_string(cfg.points.size()) +
                           " points, expected " + std::to_string(expected));
  }
  cfg.base = std::string(base_name(base));
  cfg.sequence = seq;
  if (with_hull) cfg.hull = std::move(mesh);
  return cfg;
}

}  // namespace sacsphere
