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

#include "sacsphere/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Geometry>

#include "predicates.hpp"
#include "sacsphere/errors.hpp"

namespace sacsphere {

namespace {

constexpr std::int32_t kNone = -1;

struct HullFace {
  std::uint32_t v[3];
  std::int32_t nb[3];  // neighbour across edge v[i] -> v[(i+1)%3]
  Vec3 normal;
  double offset = 0.0;
  std::vector<std::uint32_t> outside;
  bool alive = false;
};

class Quickhull {
 public:
  explicit Quickhull(std::span<const UnitVector> points) : pts_(points) {}

  TriangulatedSphereMesh run();

 private:
  std::int32_t new_face(std::uint32_t a, std::uint32_t b, std::uint32_t c);
  void kill_face(std::int32_t f);
  bool above(std::int32_t f, std::uint32_t p) const {
    const HullFace& h = faces_[f];
    return detail::orient3d(pts_[h.v[0]], pts_[h.v[1]], pts_[h.v[2]], pts_[p]) > 0;
  }
  double distance(std::int32_t f, std::uint32_t p) const {
    return faces_[f].normal.dot(pts_[p]) - faces_[f].offset;
  }
  void assign(std::uint32_t p, std::span<const std::int32_t> candidates);
  void build_simplex();
  void add_point(std::int32_t seed_face);

  std::span<const UnitVector> pts_;
  std::vector<HullFace> faces_;
  std::vector<std::int32_t> free_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> stamp_visible_;
  std::uint32_t round_ = 0;
  std::vector<std::int32_t> pending_;

  // Scratch reused across insertions.
  std::vector<std::int32_t> visible_;
  std::vector<std::pair<std::int32_t, int>> horizon_;
  std::vector<std::uint32_t> orphans_;
  std::vector<std::int32_t> created_;
};

std::int32_t Quickhull::new_face(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  std::int32_t id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<std::int32_t>(faces_.size());
    faces_.emplace_back();
    stamp_.push_back(0);
    stamp_visible_.push_back(0);
  }
  HullFace& f = faces_[id];
  f.v[0] = a;
  f.v[1] = b;
  f.v[2] = c;
  f.nb[0] = f.nb[1] = f.nb[2] = kNone;
  const Vec3 n = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
  const double len = n.norm();
  f.normal = len > 0.0 ? Vec3(n / len) : Vec3::Zero();
  f.offset = f.normal.dot(pts_[a]);
  f.outside.clear();
  f.alive = true;
  stamp_[id] = 0;
  return id;
}

void Quickhull::kill_face(std::int32_t f) {
  faces_[f].alive = false;
  std::vector<std::uint32_t>().swap(faces_[f].outside);
  free_.push_back(f);
}

void Quickhull::assign(std::uint32_t p, std::span<const std::int32_t> candidates) {
  std::int32_t best = kNone;
  double best_dist = -std::numeric_limits<double>::infinity();
  for (std::int32_t f : candidates) {
    if (!above(f, p)) continue;
    const double d = distance(f, p);
    if (d > best_dist) {
      best_dist = d;
      best = f;
    }
  }
  if (best != kNone) faces_[best].outside.push_back(p);
  // Otherwise p is inside or on the current hull and can never become a
  // vertex; the final vertex count check reports it.
}

void Quickhull::build_simplex() {
  const std::size_t n = pts_.size();
  auto lex_less = [&](std::uint32_t i, std::uint32_t j) {
    const Vec3& a = pts_[i];
    const Vec3& b = pts_[j];
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    if (a.z() != b.z()) return a.z() < b.z();
    return i < j;
  };

  std::uint32_t i0 = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (lex_less(i, i0)) i0 = i;
  }
  std::uint32_t i1 = i0;
  double best = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const double d = (pts_[i] - pts_[i0]).squaredNorm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (best == 0.0) throw GeometryError("convex hull: all points coincide");

  std::uint32_t i2 = i0;
  best = 0.0;
  const Vec3 axis = pts_[i1] - pts_[i0];
  for (std::uint32_t i = 0; i < n; ++i) {
    const double d = (pts_[i] - pts_[i0]).cross(axis).squaredNorm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (best == 0.0) throw GeometryError("convex hull: points are collinear");

  std::uint32_t i3 = i0;
  best = 0.0;
  const Vec3 nrm = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double d = std::abs(nrm.dot(pts_[i] - pts_[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  const int side = detail::orient3d(pts_[i0], pts_[i1], pts_[i2], pts_[i3]);
  if (best == 0.0 || side == 0) throw GeometryError("convex hull: points are coplanar");
  if (side > 0) std::swap(i1, i2);  // i3 must be below (i0, i1, i2)

  const std::int32_t f0 = new_face(i0, i1, i2);
  const std::int32_t f1 = new_face(i0, i3, i1);
  const std::int32_t f2 = new_face(i1, i3, i2);
  const std::int32_t f3 = new_face(i2, i3, i0);
  const std::int32_t all[4] = {f0, f1, f2, f3};
  for (std::int32_t f : all) {
    for (std::int32_t g : all) {
      if (f == g) continue;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (faces_[f].v[i] == faces_[g].v[(j + 1) % 3] &&
              faces_[f].v[(i + 1) % 3] == faces_[g].v[j]) {
            faces_[f].nb[i] = g;
          }
        }
      }
    }
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    assign(i, all);
  }
  for (std::int32_t f : all) {
    if (!faces_[f].outside.empty()) pending_.push_back(f);
  }
}

void Quickhull::add_point(std::int32_t seed) {
  HullFace& sf = faces_[seed];
  std::uint32_t eye = sf.outside.front();
  double eye_dist = distance(seed, eye);
  for (std::uint32_t p : sf.outside) {
    const double d = distance(seed, p);
    if (d > eye_dist || (d == eye_dist && p < eye)) {
      eye = p;
      eye_dist = d;
    }
  }

  ++round_;
  visible_.clear();
  horizon_.clear();
  visible_.push_back(seed);
  stamp_[seed] = round_;
  stamp_visible_[seed] = 1;
  for (std::size_t qi = 0; qi < visible_.size(); ++qi) {
    const std::int32_t f = visible_[qi];
    for (int i = 0; i < 3; ++i) {
      const std::int32_t g = faces_[f].nb[i];
      if (stamp_[g] != round_) {
        stamp_[g] = round_;
        stamp_visible_[g] = above(g, eye) ? 1 : 0;
        if (stamp_visible_[g]) visible_.push_back(g);
      }
      if (!stamp_visible_[g]) horizon_.emplace_back(f, i);
    }
  }

  // One new face per horizon edge a -> b, oriented (a, b, eye).
  created_.clear();
  std::vector<std::pair<std::uint32_t, std::int32_t>> by_start;
  by_start.reserve(horizon_.size());
  for (const auto& [f, i] : horizon_) {
    const std::uint32_t a = faces_[f].v[i];
    const std::uint32_t b = faces_[f].v[(i + 1) % 3];
    const std::int32_t g = faces_[f].nb[i];
    const std::int32_t nf = new_face(a, b, eye);
    faces_[nf].nb[0] = g;
    HullFace& gf = faces_[g];
    for (int j = 0; j < 3; ++j) {
      if (gf.v[j] == b && gf.v[(j + 1) % 3] == a) gf.nb[j] = nf;
    }
    created_.push_back(nf);
    by_start.emplace_back(a, nf);
  }
  std::sort(by_start.begin(), by_start.end());
  for (std::size_t k = 1; k < by_start.size(); ++k) {
    if (by_start[k].first == by_start[k - 1].first) {
      throw GeometryError("convex hull: horizon is not a simple cycle");
    }
  }
  auto starting_at = [&](std::uint32_t v) {
    auto it = std::lower_bound(by_start.begin(), by_start.end(),
                               std::make_pair(v, std::numeric_limits<std::int32_t>::min()));
    if (it == by_start.end() || it->first != v) {
      throw GeometryError("convex hull: horizon is not closed");
    }
    return it->second;
  };
  for (std::int32_t nf : created_) {
    const std::uint32_t b = faces_[nf].v[1];
    const std::int32_t next = starting_at(b);  // (b, c, eye)
    faces_[nf].nb[1] = next;
    faces_[next].nb[2] = nf;
  }

  orphans_.clear();
  for (std::int32_t f : visible_) {
    for (std::uint32_t p : faces_[f].outside) {
      if (p != eye) orphans_.push_back(p);
    }
    kill_face(f);
  }
  std::sort(orphans_.begin(), orphans_.end());
  for (std::uint32_t p : orphans_) assign(p, created_);
  for (std::int32_t nf : created_) {
    if (!faces_[nf].outside.empty()) pending_.push_back(nf);
  }
}

TriangulatedSphereMesh Quickhull::run() {
  if (pts_.size() < 4) throw GeometryError("convex hull needs at least 4 points");
  if (pts_.size() > std::numeric_limits<std::int32_t>::max() / 4) {
    throw GeometryError("convex hull: too many points");
  }
  build_simplex();
  while (!pending_.empty()) {
    const std::int32_t f = pending_.back();
    pending_.pop_back();
    if (!faces_[f].alive || faces_[f].outside.empty()) continue;
    add_point(f);
  }

  TriangulatedSphereMesh mesh;
  mesh.vertices.assign(pts_.begin(), pts_.end());
  std::vector<bool> used(pts_.size(), false);
  for (const HullFace& f : faces_) {
    if (!f.alive) continue;
    Face out{f.v[0], f.v[1], f.v[2]};
    const auto lo = std::min_element(out.begin(), out.end()) - out.begin();
    std::rotate(out.begin(), out.begin() + lo, out.end());
    mesh.faces.push_back(out);
    for (auto v : out) used[v] = true;
  }
  std::sort(mesh.faces.begin(), mesh.faces.end());
  const auto missing = std::count(used.begin(), used.end(), false);
  if (missing > 0) {
    throw GeometryError("convex hull: " + std::to_string(missing) +
                        " input point(s) are not hull vertices (duplicates or interior points)");
  }
  return mesh;
}

}  // namespace

TriangulatedSphereMesh convex_hull_triangulation(std::span<const UnitVector> points) {
  return Quickhull(points).run();
}

}  // namespace sacsphere
