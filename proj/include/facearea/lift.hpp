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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "facearea/cyclic.hpp"

namespace facearea {

enum class LiftMode { HalfFold, BalancedSpins, Explicit };

/**
 * Face vectors v_i = A_i n_i in R^3. A valid system sums to zero, has no two
 * positively proportional members and spans R^3; ValidateSystem checks all
 * three.
 */
struct EquilibratedSystem {
  std::vector<Eigen::Vector3d> vectors;
  std::vector<Eigen::Vector3d> normals;
  std::vector<double> areas;
  LiftMode mode = LiftMode::Explicit;
  int k = 0;
  std::uint64_t seed = 0;
  int attempts = 1;

  std::size_t size() const { return vectors.size(); }
};

/// Wraps raw vectors; areas are their lengths.
EquilibratedSystem SystemFromVectors(std::vector<Eigen::Vector3d> vectors);

struct ValidationReport {
  std::size_t count = 0;
  double closure_norm = 0.0;
  double closure_limit = 0.0;
  double max_pair_dot = -1.0;
  std::size_t pair_i = 0, pair_j = 0;
  double min_singular_value = 0.0;

  bool enough = false;
  bool closed = false;
  bool distinct = false;
  bool spanning = false;

  bool passed() const { return enough && closed && distinct && spanning; }
  std::string Describe() const;
};

ValidationReport ValidateSystem(const EquilibratedSystem& sys);

inline int DefaultFoldIndex(std::size_t n) { return static_cast<int>(n / 2); }

/**
 * Lifts the planar chain out of the plane. The chord from the start of
 * edges[0] to the end of edges[k - 1] is turned onto the y axis; edges
 * 0..k-1 are then rotated a quarter turn about that axis into the yz-plane
 * (towards +z) while the rest stay in the xy-plane.
 *
 * k is the number of folded edges and must lie in [2, n - 2]; BadK otherwise.
 * Throws LiftFailed if the result does not validate.
 */
EquilibratedSystem HalfFold(const CyclicPolygon& poly, int k);

struct SpinOptions {
  int max_attempts = 16;
  /// Test hook: receives (attempt, pair, drawn angle) and returns the angle
  /// actually applied, in radians.
  std::function<double(int, std::size_t, double)> angle_hook;
};

/**
 * Rotates successive disjoint pairs (v0, v1), (v2, v3), ... about the axis
 * along their sum, each by an angle drawn uniformly from [30, 150] degrees.
 * Pair sums are unchanged so closure is kept. With odd n the last edge stays
 * in the plane. Invalid draws are retried with fresh angles; after
 * max_attempts the call throws LiftFailed.
 */
EquilibratedSystem BalancedSpins(const CyclicPolygon& poly, std::uint64_t seed,
                                 const SpinOptions& options = {});

/// Planar chain as a z = 0 system (never spans R^3).
EquilibratedSystem PlanarSystem(const CyclicPolygon& poly);

}  // namespace facearea
