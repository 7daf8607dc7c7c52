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

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "sacsphere/lattice.hpp"

namespace sacsphere {

using Vec3 = Eigen::Vector3d;

/// A direction on the unit sphere. Nothing enforces the unit norm at the type
/// level; producers in this library normalise to within 1e-12.
using UnitVector = Vec3;

/// Ordered spherical triangle (v0, va, vb); the SAC coordinates
/// (lambda_0, lambda_a, lambda_b) refer to these vertices in this order.
struct SphericalTriangle {
  UnitVector v0;
  UnitVector va;
  UnitVector vb;
};

/// Throws GeometryError when two vertices coincide or are antipodal
/// (angular separation within 1e-9 rad of 0 or pi).
void check_triangle(const SphericalTriangle& t);

/// Unsigned spherical excess from tan(E/2) = |v0.(va x vb)| / (1 + v0.va +
/// va.vb + vb.v0), with the triple product taken on edge differences so that
/// small triangles keep their relative accuracy. No validity checks.
double spherical_area_unchecked(const Vec3& v0, const Vec3& va, const Vec3& vb) noexcept;

/// Validated spherical area; throws GeometryError for degenerate triangles.
double spherical_area(const SphericalTriangle& t);

UnitVector project_to_sphere(const Vec3& v);

/// Area fractions (lambda_a, lambda_b) realised by point p in t:
/// lambda_a = |v0 p vb| / |t| and lambda_b = |v0 va p| / |t|.
BaryCoord area_fractions(const SphericalTriangle& t, const UnitVector& p);

struct SacOptions {
  double tolerance = 1e-12;   // accepted max residual, fraction units
  double fd_step = 1e-7;      // central-difference step in parameter space
  int max_iterations = 100;
};

/// Finds the point on the sphere whose spherical sub-triangle area fractions
/// equal c. Vertex and edge coordinates take a 1-D bisection along the arc;
/// interior coordinates take a damped Newton iteration on the gnomonic
/// parameters mu of p = normalise(v0 + mu_a (va - v0) + mu_b (vb - v0)),
/// started from mu = c. Throws SolverError carrying the final residual when
/// the tolerance is not met.
UnitVector sac_solve(const SphericalTriangle& t, const BaryCoord& c,
                     const SacOptions& options = {});

}  // namespace sacsphere
