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

#include "sacsphere/lattice.hpp"

#include <cmath>
#include <string>

#include "sacsphere/errors.hpp"

namespace sacsphere {

IntegerPair::IntegerPair(int m, int n) : m_(m), n_(n) {
  if (m <= 0 || n < 0 || m < n) {
    throw ParameterError("invalid integer pair (" + std::to_string(m) + "," +
                         std::to_string(n) + "): need m >= n, m > 0, n >= 0");
  }
}

std::int64_t IntegerPair::gamma() const noexcept {
  const std::int64_t m = m_;
  const std::int64_t n = n_;
  return m * m + n * n + m * n;
}

std::int64_t gamma(const IntegerPair& pair) noexcept { return pair.gamma(); }

BaryCoord RationalBary::to_double() const noexcept {
  const double d = static_cast<double>(den);
  return {static_cast<double>(num_a) / d, static_cast<double>(num_b) / d};
}

PlanarPoint to_planar(const LatticePoint& p) noexcept {
  return {p.q1 + 0.5 * p.q2, 0.5 * std::sqrt(3.0) * p.q2};
}

namespace {

// Inverse of [[m, -n], [n, m+n]] scaled by gamma, applied to (q1, q2).
RationalBary numerators(const LatticePoint& p, const IntegerPair& pair) noexcept {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  return {(m + n) * p.q1 + n * p.q2, -n * p.q1 + m * p.q2, pair.gamma()};
}

bool inside(const RationalBary& r) noexcept {
  return r.num_a >= 0 && r.num_b >= 0 && r.num_a + r.num_b <= r.den;
}

}  // namespace

std::vector<LatticePoint> lattice_points(const IntegerPair& pair) {
  const int m = pair.m();
  const int n = pair.n();
  std::vector<LatticePoint> out;
  // Bounding box of the vertices (0,0), (m,n), (-n,m+n) in lattice coordinates.
  for (int q1 = -n; q1 <= m; ++q1) {
    for (int q2 = 0; q2 <= m + n; ++q2) {
      const LatticePoint p{q1, q2};
      if (inside(numerators(p, pair))) out.push_back(p);
    }
  }
  return out;
}

RationalBary to_barycentric_exact(const LatticePoint& p, const IntegerPair& pair) {
  const RationalBary r = numerators(p, pair);
  if (!inside(r)) {
    throw GeometryError("lattice point (" + std::to_string(p.q1) + "," +
                        std::to_string(p.q2) + ") lies outside triangle (" +
                        std::to_string(pair.m()) + "," + std::to_string(pair.n()) + ")");
  }
  return r;
}

BaryCoord to_barycentric(const LatticePoint& p, const IntegerPair& pair) {
  return to_barycentric_exact(p, pair).to_double();
}

}  // namespace sacsphere
