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

#include "facearea/minkowski.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "facearea/error.hpp"

namespace facearea {

namespace {

constexpr double kCollapseRel = 1e-12;
constexpr int kGradientSteps = 25;
constexpr double kReviveWeight = 0.25;

enum class Reject { None, Geometry, Collapse, NoDecrease };

struct State {
  Eigen::VectorXd h;
  Polyhedron poly;
  Eigen::VectorXd areas;
  Eigen::VectorXd residual;
  double norm = 0.0;
  double max_rel = 0.0;
  bool collapsed = false;
};

class Solver {
 public:
  Solver(const EquilibratedSystem& sys, const SolveOptions& options)
      : normals_(sys.normals), options_(options) {
    const auto n = static_cast<Eigen::Index>(sys.size());
    targets_ = Eigen::Map<const Eigen::VectorXd>(sys.areas.data(), n);
    total_ = targets_.sum();
    collapse_floor_ = kCollapseRel * total_;

    Eigen::MatrixXd shifts(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) shifts.row(i) = normals_[i].transpose();
    translations_ = shifts.householderQr().householderQ() *
                    Eigen::MatrixXd::Identity(n, 3);
  }

  MinkowskiSolution Run();

 private:
  // Empty optional when P(h) is not a valid full-dimensional polyhedron.
  std::optional<State> Evaluate(const Eigen::VectorXd& h) const {
    State s;
    try {
      s.poly = IntersectHalfspaces(normals_, h);
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::EmptyInterior:
        case ErrorCode::UnboundedRegion:
        case ErrorCode::InternalGeometryError:
        case ErrorCode::InconsistentVolume:
          return std::nullopt;
        default:
          throw;
      }
    }
    s.h = h;
    s.areas = Eigen::Map<const Eigen::VectorXd>(
        s.poly.facet_areas.data(), static_cast<Eigen::Index>(h.size()));
    s.residual = s.areas - targets_;
    s.norm = s.residual.norm();
    s.max_rel = s.residual.cwiseAbs().cwiseQuotient(targets_).maxCoeff();
    s.collapsed = s.areas.minCoeff() < collapse_floor_;
    return s;
  }

  Eigen::VectorXd Project(const Eigen::VectorXd& v) const {
    return v - translations_ * (translations_.transpose() * v);
  }

  State Rescaled(const State& s) const {
    const double c = std::sqrt(total_ / s.areas.sum());
    auto scaled = Evaluate(c * s.h);
    return scaled ? *scaled : s;
  }

  void Record(StepKind kind, const State& s, double step) {
    history_.push_back({iterations_, kind, s.max_rel, s.norm, step});
  }

  std::optional<Eigen::VectorXd> NewtonDirection(const State& s) const;
  bool NewtonStep(State& s);
  bool GradientPhase(State& s);
  bool Revive(State& s);

  std::vector<Eigen::Vector3d> normals_;
  SolveOptions options_;
  Eigen::VectorXd targets_;
  Eigen::MatrixXd translations_;
  double total_ = 0.0;
  double collapse_floor_ = 0.0;

  int iterations_ = 0;
  int fallbacks_ = 0;
  int consecutive_rejects_ = 0;
  Reject last_reject_ = Reject::None;
  std::vector<IterationRecord> history_;
};

std::optional<Eigen::VectorXd> Solver::NewtonDirection(const State& s) const {
  Eigen::MatrixXd jac;
  try {
    jac = AreaJacobian(s.poly);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateCombinatorics) return std::nullopt;
    throw;
  }
  // J is singular exactly along the translations; filling that block with
  // the identity makes the system regular without moving the solution.
  const Eigen::MatrixXd system =
      jac + translations_ * translations_.transpose();
  Eigen::VectorXd step =
      system.completeOrthogonalDecomposition().solve(-Project(s.residual));
  step = Project(step);
  if (!step.allFinite()) return std::nullopt;
  return step;
}

bool Solver::NewtonStep(State& s) {
  const auto direction = NewtonDirection(s);
  if (!direction) {
    consecutive_rejects_ = options_.fallback_after;
    last_reject_ = Reject::Geometry;
    return false;
  }
  for (double alpha = options_.damping; alpha >= options_.damping_floor;
       alpha *= 0.5) {
    auto trial = Evaluate(s.h + alpha * *direction);
    if (!trial) {
      last_reject_ = Reject::Geometry;
    } else if (trial->collapsed) {
      last_reject_ = Reject::Collapse;
    } else if (!(trial->norm < s.norm)) {
      last_reject_ = Reject::NoDecrease;
    } else {
      assert(trial->norm < s.norm);
      s = std::move(*trial);
      consecutive_rejects_ = 0;
      ++iterations_;
      Record(StepKind::Newton, s, alpha);
      return true;
    }
    if (++consecutive_rejects_ >= options_.fallback_after) return false;
  }
  return false;
}

// Descends f(h) = (A_target . h) / V(h)^(1/3), whose stationary points have
// areas proportional to the targets. Returns false if no step was accepted.
bool Solver::GradientPhase(State& s) {
  ++fallbacks_;
  auto objective = [&](const State& st) {
    return targets_.dot(st.h) / std::cbrt(st.poly.volume);
  };
  bool moved = false;
  double beta = 0.1;
  for (int step = 0; step < kGradientSteps && iterations_ < options_.max_iter;
       ++step) {
    const double volume = s.poly.volume;
    const double cube_root = std::cbrt(volume);
    const Eigen::VectorXd grad =
        Project(targets_ / cube_root -
                (targets_.dot(s.h) / (3.0 * volume * cube_root)) * s.areas);
    const double gnorm = grad.norm();
    if (!(gnorm > 0.0)) break;
    const double f0 = objective(s);
    bool accepted = false;
    for (; beta > 1e-8; beta *= 0.5) {
      const Eigen::VectorXd h = s.h - (beta * s.h.norm() / gnorm) * grad;
      auto trial = Evaluate(h);
      if (trial && objective(*trial) < f0) {
        s = std::move(*trial);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    moved = true;
    ++iterations_;
    Record(StepKind::Gradient, s, beta);
    beta = std::min(0.2, 2.0 * beta);
  }
  if (moved) {
    s = Rescaled(s);
    Record(StepKind::Rescale, s, 1.0);
  }
  consecutive_rejects_ = 0;
  return moved;
}

// Replaces h by (1 - t) h_tight + t h_ball, where h_tight are the support
// numbers of the current body and h_ball those of a polytope circumscribed
// about a ball at its centroid. Both are support vectors, so the blend is a
// Minkowski sum and carries a facet for every normal. Nearly parallel
// normals can still leave facets thinner than the vertex merge distance;
// t = 1 then restarts from the circumscribed polytope itself.
bool Solver::Revive(State& s) {
  const auto n = static_cast<Eigen::Index>(normals_.size());
  const Eigen::Vector3d c = s.poly.VertexCentroid();
  Eigen::VectorXd tight(n);
  double radius = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double top = -INFINITY;
    for (const Eigen::Vector3d& v : s.poly.vertices) {
      top = std::max(top, normals_[i].dot(v));
    }
    tight[i] = top;
    radius += top - normals_[i].dot(c);
  }
  radius /= static_cast<double>(n);
  for (double weight : {kReviveWeight, 1.0}) {
    Eigen::VectorXd h(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      h[i] = (1.0 - weight) * tight[i] + weight * (radius + normals_[i].dot(c));
    }
    auto trial = Evaluate(h);
    if (!trial) continue;
    s = Rescaled(*trial);
    ++iterations_;
    Record(StepKind::Revive, s, weight);
    if (!s.collapsed) return true;
  }
  return false;
}

MinkowskiSolution Solver::Run() {
  const auto n = static_cast<Eigen::Index>(normals_.size());
  const Eigen::VectorXd h0 =
      options_.initial_h ? *options_.initial_h : Eigen::VectorXd::Ones(n);
  if (h0.size() != n) {
    throw Error(ErrorCode::InternalGeometryError,
                "initial support vector has the wrong size");
  }
  auto start = Evaluate(h0);
  if (!start) {
    throw Error(ErrorCode::EmptyInterior,
                "initial support numbers do not bound a solid");
  }
  State s = Rescaled(*start);
  Record(StepKind::Start, s, 0.0);

  const double polish = std::max(1e-4 * options_.tol_area, 1e-14);
  while (s.max_rel > polish) {
    if (iterations_ >= options_.max_iter) break;
    if (s.collapsed && !Revive(s)) break;
    if (NewtonStep(s)) continue;
    if (s.max_rel <= options_.tol_area) break;
    if (!GradientPhase(s)) break;
  }

  if (s.max_rel > options_.tol_area) {
    std::ostringstream msg;
    msg << "Minkowski solve stopped after " << iterations_
        << " iterations at max relative area error " << s.max_rel;
    if (!history_.empty()) {
      msg << " (history:";
      const std::size_t first = history_.size() > 6 ? history_.size() - 6 : 0;
      for (std::size_t i = first; i < history_.size(); ++i) {
        msg << ' ' << history_[i].max_relative_error;
      }
      msg << ')';
    }
    throw Error(s.collapsed || last_reject_ == Reject::Collapse
                    ? ErrorCode::FacetCollapse
                    : ErrorCode::NoConvergence,
                msg.str());
  }

  State scaled = Rescaled(s);
  if (scaled.max_rel <= s.max_rel) {
    s = std::move(scaled);
    Record(StepKind::Rescale, s, 1.0);
  }

  // Translate so the vertex centroid is the origin.
  const Eigen::Vector3d g = s.poly.VertexCentroid();
  Eigen::VectorXd centred = s.h;
  for (Eigen::Index i = 0; i < n; ++i) centred[i] -= normals_[i].dot(g);
  if (auto moved = Evaluate(centred)) s = std::move(*moved);

  MinkowskiSolution sol;
  sol.h = s.h;
  sol.poly = std::move(s.poly);
  sol.residual = s.max_rel;
  sol.iterations = iterations_;
  sol.fallback_activations = fallbacks_;
  sol.history = std::move(history_);
  return sol;
}

}  // namespace

MinkowskiSolution SolveMinkowski(const EquilibratedSystem& sys,
                                 const SolveOptions& options) {
  if (!(options.tol_area > 0.0) || options.max_iter < 1) {
    throw Error(ErrorCode::InternalGeometryError, "invalid solve options");
  }
  if (sys.size() < 4) {
    throw Error(ErrorCode::UnboundedRegion,
                "a closed polyhedron needs at least four facets");
  }
  return Solver(sys, options).Run();
}

VerificationReport VerifySolution(const MinkowskiSolution& sol,
                                  const EquilibratedSystem& sys,
                                  double tol_area) {
  VerificationReport report;
  const std::size_t n = sys.size();
  Polyhedron poly;
  try {
    poly = IntersectHalfspaces(sys.normals, sol.h);
  } catch (const Error&) {
    report.relative_errors.assign(n, 1.0);
    report.max_relative_error = 1.0;
    return report;
  }
  const Measurement m = Measure(poly);

  Eigen::Vector3d closure = Eigen::Vector3d::Zero();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double err = std::abs(m.areas[i] - sys.areas[i]) / sys.areas[i];
    report.relative_errors.push_back(err);
    report.max_relative_error = std::max(report.max_relative_error, err);
    closure += m.areas[i] * sys.normals[i];
    total += sys.areas[i];
  }
  report.areas_ok = report.max_relative_error <= tol_area;
  report.closure_norm = closure.norm();
  report.closure_limit = 1e-8 * total;
  report.closure_ok = report.closure_norm <= report.closure_limit;

  const double scale = sol.h.cwiseAbs().maxCoeff();
  for (const Eigen::Vector3d& v : poly.vertices) {
    for (std::size_t i = 0; i < n; ++i) {
      report.max_violation =
          std::max(report.max_violation, sys.normals[i].dot(v) - sol.h[i]);
    }
  }
  bool planar = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (int v : poly.facets[i].cycle) {
      planar = planar && std::abs(sys.normals[i].dot(poly.vertices[v]) -
                                  sol.h[i]) <= 1e-9 * scale;
    }
  }
  report.convex_ok = planar && report.max_violation <= 1e-9 * scale &&
                     m.volume > 0.0;

  report.euler = static_cast<long>(poly.vertices.size()) -
                 static_cast<long>(poly.edges.size()) +
                 static_cast<long>(poly.NonemptyFacetCount());
  report.euler_ok = report.euler == 2;
  return report;
}

}  // namespace facearea
