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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sacsphere::oracle {

double brute_separation(std::span<const UnitVector> points) {
  if (points.size() < 2 || points.size() > 5000) {
    throw std::invalid_argument("brute_separation: need 2 <= N <= 5000");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

std::vector<UnitVector> spiral_probes(std::size_t count) {
  std::vector<UnitVector> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

double sampled_covering(std::span<const UnitVector> points, std::size_t probes) {
  if (probes < 10000) throw std::invalid_argument("sampled_covering: need >= 1e4 probes");
  if (points.empty()) throw std::invalid_argument("sampled_covering: empty set");
  const auto spiral = spiral_probes(probes);
  double worst = 0.0;
  for (const auto& q : spiral) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::min(best, (q - p).squaredNorm());
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

double sampling_resolution(std::size_t probes) {
  return kSpiralCoveringConstant / std::sqrt(static_cast<double>(probes));
}

std::vector<LatticePoint> enumerate_lattice(int m, int n) {
  // Vertices O = (0,0), A = (m,n), B = (-n, m+n) in the (e1, e2) basis.
  // Cross products in lattice coordinates keep the sign of the planar ones
  // because the basis is positively oriented.
  auto cross = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };
  const long ax = m, ay = n, bx = -n, by = m + n;
  std::vector<LatticePoint> out;
  const int r = 2 * (m + n) + 2;
  for (int q1 = -r; q1 <= r; ++q1) {
    for (int q2 = -r; q2 <= r; ++q2) {
      const long s0 = cross(ax, ay, q1, q2);
      const long s1 = cross(bx - ax, by - ay, q1 - ax, q2 - ay);
      const long s2 = cross(-bx, -by, q1 - bx, q2 - by);
      if (s0 >= 0 && s1 >= 0 && s2 >= 0) out.push_back({q1, q2});
    }
  }
  return out;
}

double girard_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  auto angle_at = [](const Vec3& p, const Vec3& q, const Vec3& r) {
    const Vec3 tq = (q - p.dot(q) * p).normalized();
    const Vec3 tr = (r - p.dot(r) * p).normalized();
    return std::acos(std::clamp(tq.dot(tr), -1.0, 1.0));
  };
  return angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b) - std::numbers::pi;
}

UnitVector random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    Vec3 v(g(rng), g(rng), g(rng));
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

std::vector<UnitVector> random_points(std::size_t n, std::mt19937_64& rng) {
  std::vector<UnitVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_unit(rng));
  return out;
}

bool in_closed_hemisphere(std::span<const UnitVector> points) {
  if (points.size() > 200) throw std::invalid_argument("in_closed_hemisphere: need N <= 200");
  auto holds = [&](const Vec3& u) {
    for (const auto& p : points) {
      if (p.dot(u) < -1e-15) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (holds(points[i])) return true;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec3 n = points[i].cross(points[j]);
      if (n.norm() < 1e-14) continue;
      if (holds(n.normalized()) || holds(-n.normalized())) return true;
    }
  }
  return false;
}

std::vector<UnitVector> random_surrounding_points(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto pts = random_points(n, rng);
    // Beyond 200 points the chance of a hemispherical sample is below 1e-55.
    if (n > 200 || !in_closed_hemisphere(pts)) return pts;
  }
}

SphericalTriangle random_triangle(std::mt19937_64& rng, double size) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Vec3 c = random_unit(rng);
    const Vec3 e1 = c.unitOrthogonal();
    const Vec3 e2 = c.cross(e1);
    Vec3 planar[3];
    for (auto& q : planar) q = u(rng) * e1 + u(rng) * e2;
    double longest = 0.0;
    for (int i = 0; i < 3; ++i) longest = std::max(longest, (planar[i] - planar[(i + 1) % 3]).norm());
    if (longest == 0.0) continue;
    // Scale the tangent-plane triangle, then fix the chord length after projection.
    Vec3 v[3];
    double scale = size / longest;
    for (int pass = 0; pass < 20; ++pass) {
      for (int i = 0; i < 3; ++i) v[i] = (c + scale * planar[i]).normalized();
      double chord = 0.0;
      for (int i = 0; i < 3; ++i) chord = std::max(chord, (v[i] - v[(i + 1) % 3]).norm());
      if (std::abs(chord - size) <= 1e-12 * size) break;
      scale *= size / chord;
    }
    // Reject slivers: shortest chord and planar shape quality
    // 4 sqrt(3) area / sum of squared edges (1 for equilateral).
    double lo = 4.0, hi = 0.0, sq = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = (v[i] - v[(i + 1) % 3]).norm();
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      sq += d * d;
    }
    const double area2 = (v[1] - v[0]).cross(v[2] - v[0]).norm();
    if (lo < 0.3 * hi || 2.0 * std::sqrt(3.0) * area2 < 0.5 * sq) continue;
    if ((v[1] - v[0]).cross(v[2] - v[0]).dot(v[0]) < 0) std::swap(v[1], v[2]);
    return {v[0], v[1], v[2]};
  }
}

BaryCoord random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    double a = u(rng), b = u(rng);
    if (a + b >= 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    if (a > 1e-6 && b > 1e-6 && a + b < 1.0 - 1e-6) return {a, b};
  }
}

Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  return q.toRotationMatrix();
}

std::vector<Eigen::Matrix3d> icosahedral_rotations(std::span<const UnitVector> ico) {
  // A rotation is fixed by the images of two non-antipodal vertices. Map
  // vertex 0 and one of its neighbours onto every adjacent ordered pair.
  const double edge_dot = 1.0 / std::sqrt(5.0);
  std::size_t nb = 0;
  for (std::size_t j = 1; j < ico.size(); ++j) {
    if (std::abs(ico[0].dot(ico[j]) - edge_dot) < 1e-9) {
      nb = j;
      break;
    }
  }
  auto frame = [](const Vec3& u, const Vec3& v) {
    Eigen::Matrix3d f;
    const Vec3 e1 = u;
    const Vec3 e2 = (v - u.dot(v) * u).normalized();
    f.col(0) = e1;
    f.col(1) = e2;
    f.col(2) = e1.cross(e2);
    return f;
  };
  const Eigen::Matrix3d src = frame(ico[0], ico[nb]);
  std::vector<Eigen::Matrix3d> out;
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = 0; j < ico.size(); ++j) {
      if (i == j || std::abs(ico[i].dot(ico[j]) - edge_dot) > 1e-9) continue;
      out.push_back(frame(ico[i], ico[j]) * src.transpose());
    }
  }
  return out;
}

bool same_point_set(std::span<const UnitVector> a, std::span<const UnitVector> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(a.size(), false);
  for (const auto& q : b) {
    bool found = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!used[i] && (a[i] - q).norm() <= tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace sacsphere::oracle
