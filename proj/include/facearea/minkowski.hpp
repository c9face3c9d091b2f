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

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "facearea/geometry.hpp"
#include "facearea/lift.hpp"

namespace facearea {

struct SolveOptions {
  /// Success threshold on the largest relative facet area error.
  double tol_area = 1e-7;
  int max_iter = 200;
  /// First trial step length of each Newton iteration.
  double damping = 1.0;
  double damping_floor = 1e-6;
  /// Consecutive rejected Newton trials before the gradient fallback runs.
  int fallback_after = 20;
  /// Defaults to all ones.
  std::optional<Eigen::VectorXd> initial_h;
};

/// Revive: planes without a facet were pushed into the body.
enum class StepKind { Start, Newton, Rescale, Gradient, Revive };

struct IterationRecord {
  int iteration;
  StepKind kind;
  double max_relative_error;
  double residual_norm;
  double step_length;
};

struct MinkowskiSolution {
  Eigen::VectorXd h;
  Polyhedron poly;
  double residual = 0.0;
  int iterations = 0;
  int fallback_activations = 0;
  std::vector<IterationRecord> history;
};

/**
 * Finds support numbers h whose polyhedron P(h) has the target facet areas
 * of `sys` along its normals.
 *
 * Damped Newton on r(h) = A(h) - A_target with the analytic area Jacobian.
 * Each step is projected off the translation directions (n_1.e, ..., n_n.e),
 * e in {x, y, z}. A trial step is rejected, and its length halved, when it
 * empties the interior, collapses a facet below 1e-12 sum(A) or fails to
 * reduce |r|. Areas scale quadratically with h, so the iterate is rescaled
 * exactly before and after the Newton phase. When Newton stalls, a few
 * steps of gradient descent on sum(A_target h) / V(h)^(1/3) are taken.
 * Planes that carry no facet have a zero Jacobian row, so they are first
 * moved inwards until they cut the body.
 *
 * On return the origin is the vertex centroid of the solution, so every
 * h_i > 0. Throws NoConvergence or FacetCollapse.
 */
MinkowskiSolution SolveMinkowski(const EquilibratedSystem& sys,
                                 const SolveOptions& options = {});

struct VerificationReport {
  std::vector<double> relative_errors;
  double max_relative_error = 0.0;
  double closure_norm = 0.0;
  double closure_limit = 0.0;
  double max_violation = 0.0;
  long euler = 0;

  bool areas_ok = false;
  bool closure_ok = false;
  bool convex_ok = false;
  bool euler_ok = false;

  bool passed() const { return areas_ok && closure_ok && convex_ok && euler_ok; }
};

/// Recomputes P(h) from the solution's support numbers and checks areas,
/// the closure of sum A_i n_i, halfspace containment and Euler's relation.
VerificationReport VerifySolution(const MinkowskiSolution& sol,
                                  const EquilibratedSystem& sys,
                                  double tol_area = 1e-7);

}  // namespace facearea
