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

#pragma once

#include <vector>

#include <Eigen/Core>

#include "facearea/feasibility.hpp"

namespace facearea {

/**
 * A closed convex chain whose links have the given lengths, inscribed in a
 * circle centred at the origin. vertices[0] = (R, 0); edges[i] runs from
 * vertices[i] to vertices[(i + 1) % n] and has length areas[i]; the winding
 * is counterclockwise.
 *
 * central_angles are signed: when the circumcentre lies outside the polygon
 * the largest link spans the minor arc backwards, so central_angles[0] < 0
 * and the remaining angles sum to its magnitude.
 */
struct CyclicPolygon {
  double radius = 0.0;
  bool center_inside = true;
  /// The link lengths A_i the chain was built from.
  std::vector<double> lengths;
  std::vector<double> central_angles;
  std::vector<Eigen::Vector2d> vertices;
  std::vector<Eigen::Vector2d> edges;

  std::size_t size() const { return edges.size(); }
};

/// True when the chain closes around its circumcentre. Decided at the
/// smallest admissible radius R = A1/2, where A1 subtends a half circle.
bool CenterInside(const AreaSpec& spec);

/// Closing-equation residual for the given branch.
///   inside:  sum_i 2 asin(A_i / 2R) - 2 pi          (strictly decreasing)
///   outside: 2 asin(A_1 / 2R) - sum_{i>1} 2 asin(A_i / 2R)
/// Throws RadiusTooSmall when R < A1/2.
double ClosureResidual(const AreaSpec& spec, double radius, bool center_inside);

/// Same, with the branch picked by CenterInside.
double ClosureResidual(const AreaSpec& spec, double radius);

struct RadiusSolution {
  double radius;
  bool center_inside;
  int iterations;
};

inline constexpr double kDefaultRadiusTolerance = 1e-13;

/// Bisection on the closing equation, carried on until the bracket collapses.
/// Succeeds if the best residual is within tol, or if no double gets closer.
/// Needs n >= 3 and strict dominance.
RadiusSolution SolveRadius(const AreaSpec& spec,
                           double tol = kDefaultRadiusTolerance);

/// Throws InternalGeometryError if the laid out chain violates closure,
/// edge lengths, concyclicity or strict convexity.
CyclicPolygon LayoutPolygon(const AreaSpec& spec, double radius,
                            bool center_inside);

}  // namespace facearea
