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

#include "sacsphere/spherical_geometry.hpp"

namespace sacsphere::detail {

// Sign of (b - a) x (c - a) . (d - a): +1 when d lies on the side the
// counterclockwise normal of (a, b, c) points to, 0 when coplanar. Exact for
// double inputs: a floating-point filter with a static error bound decides
// the easy cases and GMP rationals decide the rest.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Exact path only; exposed for tests.
int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

}  // namespace sacsphere::detail
