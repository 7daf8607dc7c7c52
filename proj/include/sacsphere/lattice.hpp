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
#include <compare>
#include <vector>

namespace sacsphere {

/// Caspar-Klug parameter (m, n) with m >= n, m > 0, n >= 0.
///
/// Construction validates the constraints and throws ParameterError on
/// violation, so every live IntegerPair is valid.
class IntegerPair {
 public:
  IntegerPair(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  /// Triangulation number m^2 + n^2 + mn.
  std::int64_t gamma() const noexcept;

  /// True for 0 < n < m, i.e. the lattice triangle has no mirror symmetry.
  bool chiral() const noexcept { return n_ > 0 && n_ < m_; }

  friend bool operator==(const IntegerPair&, const IntegerPair&) = default;

 private:
  int m_;
  int n_;
};

/// Point q1 * e1 + q2 * e2 of the triangular lattice, e1 = (1, 0),
/// e2 = (1/2, sqrt(3)/2).
struct LatticePoint {
  int q1 = 0;
  int q2 = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Planar barycentric (later: spherical area) coordinates with respect to the
/// triangle (0, a, b). lambda_0 = 1 - lambda_a - lambda_b is implied.
struct BaryCoord {
  double lambda_a = 0.0;
  double lambda_b = 0.0;

  double lambda_0() const noexcept { return 1.0 - lambda_a - lambda_b; }
};

/// Barycentric coordinates as exact rationals num / den with den = gamma.
struct RationalBary {
  std::int64_t num_a = 0;
  std::int64_t num_b = 0;
  std::int64_t den = 1;

  std::int64_t num_0() const noexcept { return den - num_a - num_b; }
  BaryCoord to_double() const noexcept;
};

std::int64_t gamma(const IntegerPair& pair) noexcept;

/// Integer coordinates of r(q1, q2) relative to the basis (e1, e2), as a
/// planar 2-vector.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};
PlanarPoint to_planar(const LatticePoint& p) noexcept;

/// All lattice points in the closed triangle 0, r(m,n), r(-n, m+n), in
/// lexicographic (q1, q2) order.
std::vector<LatticePoint> lattice_points(const IntegerPair& pair);

/// Exact barycentric numerators of p; throws GeometryError if p lies outside
/// the closed lattice triangle.
RationalBary to_barycentric_exact(const LatticePoint& p, const IntegerPair& pair);

BaryCoord to_barycentric(const LatticePoint& p, const IntegerPair& pair);

}  // namespace sacsphere
