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

#include "facearea/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "facearea/error.hpp"

namespace facearea {

namespace {

// Sorted descending, so summing from the back adds small terms first.
double SumFrom(const std::vector<double>& areas, std::size_t first) {
  double sum = 0.0;
  for (std::size_t i = areas.size(); i-- > first;) sum += areas[i];
  return sum;
}

}  // namespace

double AreaSpec::Total() const { return SumFrom(areas, 0); }

double AreaSpec::RestTotal() const { return SumFrom(areas, 1); }

AreaSpec MakeAreaSpec(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no areas given");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      std::ostringstream msg;
      msg << "area #" << i << " is not finite";
      throw Error(ErrorCode::NonFiniteArea, msg.str());
    }
    if (raw[i] <= 0.0) {
      std::ostringstream msg;
      msg << "area #" << i << " = " << raw[i] << " is not positive";
      throw Error(ErrorCode::NonPositiveArea, msg.str());
    }
  }

  AreaSpec spec;
  spec.permutation.resize(raw.size());
  std::iota(spec.permutation.begin(), spec.permutation.end(), 0);
  std::stable_sort(spec.permutation.begin(), spec.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  spec.areas.reserve(raw.size());
  for (std::size_t idx : spec.permutation) spec.areas.push_back(raw[idx]);
  return spec;
}

std::string_view ToString(Realizability tag) {
  switch (tag) {
    case Realizability::Infeasible: return "Infeasible";
    case Realizability::Flat: return "Flat";
    case Realizability::Solid: return "Solid";
    case Realizability::TriangleOnly: return "TriangleOnly";
    case Realizability::TwoFaceFlat: return "TwoFaceFlat";
  }
  return "Unknown";
}

Classification Classify(const AreaSpec& spec, double tol_eq) {
  const std::size_t n = spec.size();
  if (n <= 1) {
    throw Error(ErrorCode::UnsupportedCount,
                "at least two areas are required, got " + std::to_string(n));
  }
  const double slack = spec.RestTotal() - spec.largest();
  const double tol = tol_eq * spec.Total();

  Realizability tag;
  if (slack < -tol) {
    tag = Realizability::Infeasible;
  } else if (n == 2) {
    // Two areas can only be equal or dominated.
    tag = Realizability::TwoFaceFlat;
  } else if (slack <= tol) {
    tag = Realizability::Flat;
  } else {
    tag = n == 3 ? Realizability::TriangleOnly : Realizability::Solid;
  }
  return {tag, slack};
}

FlatPolyhedron ConstructFlat(const AreaSpec& spec, double tol_eq) {
  const Classification c = Classify(spec, tol_eq);
  if (c.tag != Realizability::Flat && c.tag != Realizability::TwoFaceFlat) {
    throw Error(ErrorCode::NotFlat,
                std::string("flat construction needs equality, input is ") +
                    std::string(ToString(c.tag)));
  }
  FlatPolyhedron flat;
  flat.top_face_area = spec.largest();
  flat.side = std::sqrt(spec.largest());
  flat.strip_widths.reserve(spec.size() - 1);
  for (std::size_t i = 1; i < spec.size(); ++i) {
    flat.strip_widths.push_back(spec.areas[i] / flat.side);
  }
  return flat;
}

}  // namespace facearea
