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
#include <span>
#include <string_view>
#include <vector>

namespace facearea {

/// Positive areas sorted in descending order. permutation[i] is the index in
/// the caller's original list of the area now stored at areas[i].
struct AreaSpec {
  std::vector<double> areas;
  std::vector<std::size_t> permutation;

  std::size_t size() const { return areas.size(); }
  double largest() const { return areas.front(); }
  double Total() const;
  /// Sum of every area except the largest.
  double RestTotal() const;
};

/// Validates and sorts raw areas. Ties keep their input order.
/// Throws EmptyInput, NonFiniteArea or NonPositiveArea.
AreaSpec MakeAreaSpec(std::span<const double> raw);

enum class Realizability {
  Infeasible,
  Flat,
  Solid,
  TriangleOnly,
  TwoFaceFlat,
};

std::string_view ToString(Realizability tag);

struct Classification {
  Realizability tag;
  /// Sum of all but the largest area, minus the largest.
  double slack;
};

inline constexpr double kDefaultEqualityTolerance = 1e-12;

/**
 * Applies the dominance test A1 <= A2 + ... + An. Equality is decided with a
 * tolerance relative to the total area so the test is scale free.
 *
 * n = 2 is TwoFaceFlat when both areas agree and Infeasible otherwise; n = 3
 * is TriangleOnly under strict inequality since no bounded solid exists.
 * Throws UnsupportedCount for fewer than two areas.
 */
Classification Classify(const AreaSpec& spec,
                        double tol_eq = kDefaultEqualityTolerance);

/// Doubly covered square: the largest face on one side, strips on the other.
struct FlatPolyhedron {
  double side;
  /// widths[i] belongs to areas[i + 1].
  std::vector<double> strip_widths;
  double top_face_area;
};

/// Throws NotFlat unless Classify reports Flat or TwoFaceFlat.
FlatPolyhedron ConstructFlat(const AreaSpec& spec,
                             double tol_eq = kDefaultEqualityTolerance);

}  // namespace facearea
