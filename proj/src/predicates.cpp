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

#include "predicates.hpp"

#include <cmath>
#include <limits>

#include <gmpxx.h>

namespace sacsphere::detail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kErrBound = (7.0 + 56.0 * kEps) * kEps;

}  // namespace

int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  mpq_class ad[3], bd[3], cd[3];
  for (int i = 0; i < 3; ++i) {
    const mpq_class di(d[i]);
    ad[i] = mpq_class(a[i]) - di;
    bd[i] = mpq_class(b[i]) - di;
    cd[i] = mpq_class(c[i]) - di;
  }
  const mpq_class det = ad[0] * (bd[1] * cd[2] - bd[2] * cd[1]) +
                        bd[0] * (cd[1] * ad[2] - cd[2] * ad[1]) +
                        cd[0] * (ad[1] * bd[2] - ad[2] * bd[1]);
  // det[a-d, b-d, c-d] has the opposite sign of (b-a)x(c-a).(d-a).
  return -sgn(det);
}

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y(), adz = a.z() - d.z();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y(), bdz = b.z() - d.z();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y(), cdz = c.z() - d.z();

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;

  const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) + cdz * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz) +
                           (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz) +
                           (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
  const double bound = kErrBound * permanent;
  if (det > bound) return -1;
  if (-det > bound) return 1;
  return orient3d_exact(a, b, c, d);
}

}  // namespace sacsphere::detail
