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

#include "facearea/pipeline.hpp"

#include <chrono>
#include <sstream>

namespace facearea {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string Describe(const Classification& c, const AreaSpec& spec) {
  std::ostringstream msg;
  msg.precision(17);
  switch (c.tag) {
    case Realizability::Infeasible:
      msg << "infeasible: largest area " << spec.largest()
          << " exceeds the sum of the others (slack " << c.slack << ")";
      break;
    case Realizability::TriangleOnly:
      msg << "three areas satisfying the strict triangle inequality form a "
             "triangle (side lengths";
      for (double a : spec.areas) msg << ' ' << a;
      msg << ") but no bounded polyhedron; slack " << c.slack;
      break;
    case Realizability::TwoFaceFlat:
      msg << "two equal areas: flat two-face polyhedron";
      break;
    case Realizability::Flat:
      msg << "equality case: flat doubly covered square, slack " << c.slack;
      break;
    case Realizability::Solid:
      msg << "solid polyhedron, slack " << c.slack;
      break;
  }
  return msg.str();
}

void Solve(PipelineResult& result, const PipelineOptions& options) {
  const AreaSpec& spec = *result.spec;

  auto t = Clock::now();
  result.radius = SolveRadius(spec);
  result.polygon =
      LayoutPolygon(spec, result.radius->radius, result.radius->center_inside);
  result.timing.radius_ms = MillisSince(t);

  t = Clock::now();
  if (options.mode == LiftMode::BalancedSpins) {
    result.system = BalancedSpins(*result.polygon, options.seed);
  } else {
    const int k = options.k.value_or(DefaultFoldIndex(spec.size()));
    result.system = HalfFold(*result.polygon, k);
  }
  result.timing.lift_ms = MillisSince(t);

  t = Clock::now();
  SolveOptions solve;
  solve.tol_area = options.tol_area;
  solve.max_iter = options.max_iter;
  result.solution = SolveMinkowski(*result.system, solve);
  result.verification =
      VerifySolution(*result.solution, *result.system, options.tol_area);
  result.timing.solve_ms = MillisSince(t);

  if (!result.verification->passed()) {
    std::ostringstream msg;
    msg << "solution failed verification (max relative area error "
        << result.verification->max_relative_error << ")";
    result.exit_code = kExitNumerical;
    result.error = "VerificationFailed";
    result.message = msg.str();
  }
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput:
    case ErrorCode::NonPositiveArea:
    case ErrorCode::NonFiniteArea:
    case ErrorCode::UnsupportedCount:
    case ErrorCode::BadK:
    case ErrorCode::ParseError:
      return kExitUsage;
    case ErrorCode::IoError:
      return kExitIo;
    default:
      return kExitNumerical;
  }
}

PipelineResult RunPipeline(std::span<const double> raw,
                           const PipelineOptions& options) {
  const auto start = Clock::now();
  PipelineResult result;
  result.raw.assign(raw.begin(), raw.end());
  try {
    result.spec = MakeAreaSpec(raw);
    result.classification = Classify(*result.spec, options.tol_eq);
    result.message = Describe(*result.classification, *result.spec);
    switch (result.classification->tag) {
      case Realizability::Infeasible:
      case Realizability::TriangleOnly:
        result.exit_code = kExitInfeasible;
        break;
      case Realizability::Flat:
      case Realizability::TwoFaceFlat:
        result.flat = ConstructFlat(*result.spec, options.tol_eq);
        break;
      case Realizability::Solid:
        Solve(result, options);
        if (result.ok()) {
          std::ostringstream msg;
          msg.precision(10);
          msg << result.message << "; R = " << result.radius->radius << " ("
              << (result.radius->center_inside ? "inside" : "outside")
              << "), " << result.solution->iterations
              << " iterations, max relative area error "
              << result.verification->max_relative_error;
          result.message = msg.str();
        }
        break;
    }
  } catch (const Error& e) {
    result.exit_code = ExitCodeFor(e.code());
    result.error = std::string(ToString(e.code()));
    result.message = e.what();
  }
  result.timing.total_ms = MillisSince(start);
  return result;
}

}  // namespace facearea
