// Copyright 2026 The facearea Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "facearea/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "facearea/error.hpp"

namespace facearea {

namespace {

constexpr double kPi = std::numbers::pi;

double HalfAngle(double chord, double radius) {
  return std::asin(std::min(1.0, chord / (2.0 * radius)));
}

double RestAngles(const AreaSpec& spec, double radius) {
  double sum = 0.0;
  for (std::size_t i = spec.size(); i-- > 1;) {
    sum += 2.0 * HalfAngle(spec.areas[i], radius);
  }
  return sum;
}

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::InternalGeometryError, "cyclic layout: " + what);
}

}  // namespace

bool CenterInside(const AreaSpec& spec) {
  return kPi + RestAngles(spec, 0.5 * spec.largest()) >= 2.0 * kPi;
}

double ClosureResidual(const AreaSpec& spec, double radius,
                       bool center_inside) {
  if (!(radius >= 0.5 * spec.largest())) {
    std::ostringstream msg;
    msg << "radius " << radius << " is below half the longest link ("
        << 0.5 * spec.largest() << ")";
    throw Error(ErrorCode::RadiusTooSmall, msg.str());
  }
  const double first = 2.0 * HalfAngle(spec.largest(), radius);
  const double rest = RestAngles(spec, radius);
  return center_inside ? (first + rest) - 2.0 * kPi : first - rest;
}

double ClosureResidual(const AreaSpec& spec, double radius) {
  return ClosureResidual(spec, radius, CenterInside(spec));
}

RadiusSolution SolveRadius(const AreaSpec& spec, double tol) {
  if (spec.size() < 3 || !(spec.RestTotal() > spec.largest())) {
    throw Error(ErrorCode::InternalGeometryError,
                "closing radius needs at least three links and strict "
                "dominance");
  }
  const bool inside = CenterInside(spec);
  const double r_min = 0.5 * spec.largest();
  auto f = [&](double r) { return ClosureResidual(spec, r, inside); };

  // Longest link is exactly a diameter.
  if (inside && std::abs(f(r_min)) <= tol) return {r_min, true, 0};

  // Both branches are positive below the root and negative above it.
  double lo = r_min * (1.0 + 1e-15);
  double hi = 2.0 * lo;
  int iterations = 0;
  constexpr int kMaxGrow = 2000;
  while (f(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++iterations > kMaxGrow || !std::isfinite(hi)) {
      throw Error(ErrorCode::NoConvergence, "could not bracket closing radius");
    }
  }

  // Bisect until the bracket collapses to neighbouring doubles: the closing
  // link absorbs radius * residual, so stopping at tol would cost short
  // links their relative accuracy. tol only decides acceptance.
  constexpr int kMaxBisect = 2000;
  double best = hi;
  double best_res = std::abs(f(hi));
  for (int it = 0; it < kMaxBisect; ++it, ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double res = f(mid);
    if (std::abs(res) < best_res) {
      best = mid;
      best_res = std::abs(res);
    }
    if (res == 0.0) break;
    (res > 0.0 ? lo : hi) = mid;
  }
  if (best_res <= tol || !(hi > std::nextafter(lo, hi))) {
    // A collapsed bracket is accepted even above tol: the residual is then
    // too steep in R for any double to reach it.
    return {best, inside, iterations + 1};
  }
  std::ostringstream msg;
  msg << "closing radius bisection stalled at residual " << best_res;
  throw Error(ErrorCode::NoConvergence, msg.str());
}

CyclicPolygon LayoutPolygon(const AreaSpec& spec, double radius,
                            bool center_inside) {
  const std::size_t n = spec.size();
  if (n < 3) Fail("needs at least three links");
  if (!(radius >= 0.5 * spec.largest())) {
    throw Error(ErrorCode::RadiusTooSmall, "radius below half the longest link");
  }

  CyclicPolygon poly;
  poly.radius = radius;
  poly.center_inside = center_inside;
  poly.lengths = spec.areas;
  poly.central_angles.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    poly.central_angles[i] = 2.0 * HalfAngle(spec.areas[i], radius);
  }
  if (!center_inside) poly.central_angles[0] = -poly.central_angles[0];

  // Edges are built from their chord direction rather than as vertex
  // differences, which would lose the relative accuracy of short links on a
  // large circle.
  poly.vertices.resize(n);
  poly.edges.resize(n);
  // Angles accumulate in extended precision so vertex chords stay accurate.
  long double phi = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double theta = poly.central_angles[i];
    const long double r = radius;
    poly.vertices[i] = {static_cast<double>(r * std::cos(phi)),
                        static_cast<double>(r * std::sin(phi))};
    const long double mid = phi + 0.5L * theta;
    const double sign = theta < 0.0L ? -1.0 : 1.0;
    poly.edges[i] = sign * spec.areas[i] *
                    Eigen::Vector2d(static_cast<double>(-std::sin(mid)),
                                    static_cast<double>(std::cos(mid)));
    phi += theta;
  }

  const double total = spec.Total();
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    sum += poly.edges[i];
    const Eigen::Vector2d chord = poly.vertices[(i + 1) % n] - poly.vertices[i];
    const double len = poly.edges[i].norm();
    if (std::abs(len - spec.areas[i]) > 1e-10 * spec.areas[i] ||
        (chord - poly.edges[i]).norm() > 1e-10 * total) {
      std::ostringstream msg;
      msg << "edge " << i << " has length " << len << ", expected "
          << spec.areas[i];
      Fail(msg.str());
    }
    if (std::abs(poly.vertices[i].norm() - radius) > 1e-10 * radius) {
      Fail("vertex off the circumcircle");
    }
    const Eigen::Vector2d& a = poly.edges[i];
    const Eigen::Vector2d& b = poly.edges[(i + 1) % n];
    if (!(a.x() * b.y() - a.y() * b.x() > 0.0)) {
      Fail("chain is not strictly convex at vertex " +
           std::to_string((i + 1) % n));
    }
  }
  if (sum.norm() > 1e-10 * total) Fail("chain does not close");
  return poly;
}

}  // namespace facearea
