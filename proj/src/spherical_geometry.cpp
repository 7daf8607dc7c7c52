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

#include "sacsphere/spherical_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>

#include "sacsphere/errors.hpp"

namespace sacsphere {

namespace {

constexpr double kAngleGuard = 1e-9;
// Coordinates closer than this to 0 or 1 are treated as exactly on the boundary.
constexpr double kBoundaryTol = 1e-14;

double angle_between(const Vec3& a, const Vec3& b) noexcept {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

Vec3 gnomonic(const Vec3& v0, const Vec3& da, const Vec3& db, double mu_a,
              double mu_b) noexcept {
  return (v0 + mu_a * da + mu_b * db).normalized();
}

// Point on the chord-parameterised arc from p to q.
Vec3 on_arc(const Vec3& p, const Vec3& q, double t) noexcept {
  return ((1.0 - t) * p + t * q).normalized();
}

// Bisection for fraction(t) == target on t in [0, 1], fraction increasing.
template <typename Fraction>
Vec3 solve_on_arc(const Vec3& from, const Vec3& to, double target, Fraction&& fraction,
                  double tolerance) {
  double lo = 0.0;
  double hi = 1.0;
  double f_lo = -target;
  double f_hi = 1.0 - target;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = fraction(on_arc(from, to, mid)) - target;
    if (f == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (f < 0.0) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
      f_hi = f;
    }
  }
  const double t = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  const double residual = std::min(std::abs(f_lo), std::abs(f_hi));
  if (!(residual <= tolerance)) {
    std::ostringstream os;
    os << "SAC edge solve did not converge (residual " << residual << ")";
    throw SolverError(os.str(), residual);
  }
  return on_arc(from, to, t);
}

}  // namespace

void check_triangle(const SphericalTriangle& t) {
  const Vec3* v[3] = {&t.v0, &t.va, &t.vb};
  for (int i = 0; i < 3; ++i) {
    const double ang = angle_between(*v[i], *v[(i + 1) % 3]);
    if (!(ang > kAngleGuard) || !(ang < std::numbers::pi - kAngleGuard)) {
      throw GeometryError("degenerate spherical triangle: coincident or antipodal vertices");
    }
  }
}

double spherical_area_unchecked(const Vec3& v0, const Vec3& va, const Vec3& vb) noexcept {
  const double triple = v0.dot((va - v0).cross(vb - v0));
  const double denom = 1.0 + v0.dot(va) + va.dot(vb) + vb.dot(v0);
  double e = 2.0 * std::atan2(std::abs(triple), denom);
  return e;
}

double spherical_area(const SphericalTriangle& t) {
  check_triangle(t);
  const double e = spherical_area_unchecked(t.v0, t.va, t.vb);
  if (!(e > 0.0)) throw GeometryError("degenerate spherical triangle: zero area");
  return e;
}

UnitVector project_to_sphere(const Vec3& v) {
  const double len = v.norm();
  if (!(len > 1e-12)) throw GeometryError("cannot project near-zero vector onto the sphere");
  return v / len;
}

BaryCoord area_fractions(const SphericalTriangle& t, const UnitVector& p) {
  const double total = spherical_area(t);
  return {spherical_area_unchecked(t.v0, p, t.vb) / total,
          spherical_area_unchecked(t.v0, t.va, p) / total};
}

UnitVector sac_solve(const SphericalTriangle& t, const BaryCoord& c, const SacOptions& options) {
  const double total = spherical_area(t);
  const double la = c.lambda_a;
  const double lb = c.lambda_b;
  const double l0 = c.lambda_0();
  if (la < -kBoundaryTol || lb < -kBoundaryTol || l0 < -kBoundaryTol) {
    throw ParameterError("area coordinates outside the triangle");
  }

  const Vec3& v0 = t.v0;
  const Vec3& va = t.va;
  const Vec3& vb = t.vb;
  const bool on_a = std::abs(la) <= kBoundaryTol;
  const bool on_b = std::abs(lb) <= kBoundaryTol;
  const bool on_0 = std::abs(l0) <= kBoundaryTol;

  if (on_a && on_b) return v0;
  if (on_b && on_0) return va;
  if (on_a && on_0) return vb;

  auto frac_a = [&](const Vec3& p) { return spherical_area_unchecked(v0, p, vb) / total; };
  auto frac_b = [&](const Vec3& p) { return spherical_area_unchecked(v0, va, p) / total; };

  if (on_b) return solve_on_arc(v0, va, la, frac_a, options.tolerance);
  if (on_a) return solve_on_arc(v0, vb, lb, frac_b, options.tolerance);
  if (on_0) return solve_on_arc(va, vb, lb, frac_b, options.tolerance);

  const Vec3 da = va - v0;
  const Vec3 db = vb - v0;
  auto residual = [&](double mu_a, double mu_b) {
    const Vec3 p = gnomonic(v0, da, db, mu_a, mu_b);
    return Eigen::Vector2d(frac_a(p) - la, frac_b(p) - lb);
  };

  Eigen::Vector2d mu(la, lb);
  Eigen::Vector2d r = residual(mu[0], mu[1]);
  double r_norm = r.cwiseAbs().maxCoeff();
  const double h = options.fd_step;
  const double target = 1e-3 * options.tolerance;

  for (int it = 0; it < options.max_iterations && r_norm > target; ++it) {
    Eigen::Matrix2d jac;
    jac.col(0) = (residual(mu[0] + h, mu[1]) - residual(mu[0] - h, mu[1])) / (2.0 * h);
    jac.col(1) = (residual(mu[0], mu[1] + h) - residual(mu[0], mu[1] - h)) / (2.0 * h);
    const double det = jac.determinant();
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) break;
    const Eigen::Vector2d step = jac.inverse() * r;

    bool improved = false;
    double scale = 1.0;
    for (int halving = 0; halving < 40; ++halving, scale *= 0.5) {
      const Eigen::Vector2d trial = mu - scale * step;
      const Eigen::Vector2d r_trial = residual(trial[0], trial[1]);
      const double trial_norm = r_trial.cwiseAbs().maxCoeff();
      if (trial_norm < r_norm) {
        mu = trial;
        r = r_trial;
        r_norm = trial_norm;
        improved = true;
        break;
      }
    }
    if (!improved) break;  // stagnated at the rounding floor
  }

  if (!(r_norm <= options.tolerance)) {
    std::ostringstream os;
    os << "SAC Newton solve did not converge for (" << la << ", " << lb << "): residual "
       << r_norm;
    throw SolverError(os.str(), r_norm);
  }
  return gnomonic(v0, da, db, mu[0], mu[1]);
}

}  // namespace sacsphere
