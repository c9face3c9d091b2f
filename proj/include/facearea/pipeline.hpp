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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facearea/cyclic.hpp"
#include "facearea/error.hpp"
#include "facearea/feasibility.hpp"
#include "facearea/lift.hpp"
#include "facearea/minkowski.hpp"

namespace facearea {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

int ExitCodeFor(ErrorCode code);

struct PipelineOptions {
  double tol_eq = kDefaultEqualityTolerance;
  double tol_area = 1e-7;
  int max_iter = 200;
  LiftMode mode = LiftMode::HalfFold;
  /// Fold index for HalfFold; floor(n/2) when unset.
  std::optional<int> k;
  std::uint64_t seed = 0;
};

struct Timing {
  double radius_ms = 0.0;
  double lift_ms = 0.0;
  double solve_ms = 0.0;
  double total_ms = 0.0;
};

/// Everything one run produced. Stages that did not run stay empty.
struct PipelineResult {
  int exit_code = kExitSuccess;
  std::string message;
  std::optional<std::string> error;

  std::vector<double> raw;
  std::optional<AreaSpec> spec;
  std::optional<Classification> classification;
  std::optional<FlatPolyhedron> flat;
  std::optional<RadiusSolution> radius;
  std::optional<CyclicPolygon> polygon;
  std::optional<EquilibratedSystem> system;
  std::optional<MinkowskiSolution> solution;
  std::optional<VerificationReport> verification;
  Timing timing;

  bool ok() const { return exit_code == kExitSuccess; }
};

/**
 * classify -> flat strips, or cyclic polygon -> lift -> Minkowski solve ->
 * verify. Never throws for bad input; failures land in exit_code, message
 * and error. A Solid result is only successful if verification passed.
 */
PipelineResult RunPipeline(std::span<const double> raw,
                           const PipelineOptions& options = {});

}  // namespace facearea
