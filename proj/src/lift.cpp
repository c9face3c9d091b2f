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

#include "facearea/lift.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "facearea/error.hpp"

namespace facearea {

namespace {

constexpr double kClosureRel = 1e-9;
constexpr double kParallelGap = 1e-9;
constexpr double kMinSingular = 1e-6;

Eigen::Vector3d Embed(const Eigen::Vector2d& v) { return {v.x(), v.y(), 0.0}; }

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementation.
double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

EquilibratedSystem Assemble(std::vector<Eigen::Vector3d> vectors,
                            const CyclicPolygon& poly, LiftMode mode) {
  EquilibratedSystem sys;
  sys.mode = mode;
  sys.areas.reserve(vectors.size());
  sys.normals.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    sys.areas.push_back(poly.lengths[i]);
    sys.normals.push_back(vectors[i].normalized());
  }
  sys.vectors = std::move(vectors);
  return sys;
}

}  // namespace

EquilibratedSystem SystemFromVectors(std::vector<Eigen::Vector3d> vectors) {
  EquilibratedSystem sys;
  for (const auto& v : vectors) {
    sys.areas.push_back(v.norm());
    sys.normals.push_back(v.normalized());
  }
  sys.vectors = std::move(vectors);
  return sys;
}

std::string ValidationReport::Describe() const {
  std::ostringstream out;
  out << "n=" << count << " closure=" << closure_norm << " (limit "
      << closure_limit << ") max_pair_dot=" << max_pair_dot << " [" << pair_i
      << "," << pair_j << "] sigma3=" << min_singular_value;
  if (!enough) out << "; fewer than 4 vectors";
  if (!closed) out << "; not closed";
  if (!distinct) out << "; positively proportional pair";
  if (!spanning) out << "; rank < 3";
  return out.str();
}

ValidationReport ValidateSystem(const EquilibratedSystem& sys) {
  ValidationReport report;
  const std::size_t n = sys.size();
  report.count = n;
  report.enough = n >= 4;

  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += sys.vectors[i];
    total += sys.vectors[i].norm();
  }
  report.closure_norm = sum.norm();
  report.closure_limit = kClosureRel * total;
  report.closed = report.closure_norm <= report.closure_limit;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = sys.normals[i].dot(sys.normals[j]);
      if (d > report.max_pair_dot) {
        report.max_pair_dot = d;
        report.pair_i = i;
        report.pair_j = j;
      }
    }
  }
  report.distinct = report.max_pair_dot < 1.0 - kParallelGap;

  if (n >= 3) {
    Eigen::Matrix3Xd normals(3, n);
    for (std::size_t i = 0; i < n; ++i) normals.col(i) = sys.normals[i];
    Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(normals);
    report.min_singular_value = svd.singularValues()(2);
  }
  report.spanning = report.min_singular_value > kMinSingular;
  return report;
}

EquilibratedSystem PlanarSystem(const CyclicPolygon& poly) {
  std::vector<Eigen::Vector3d> vectors;
  for (const auto& e : poly.edges) vectors.push_back(Embed(e));
  return Assemble(std::move(vectors), poly, LiftMode::Explicit);
}

EquilibratedSystem HalfFold(const CyclicPolygon& poly, int k) {
  const int n = static_cast<int>(poly.size());
  if (k < 2 || k > n - 2) {
    std::ostringstream msg;
    msg << "fold index k=" << k << " outside [2, " << n - 2 << "]";
    throw Error(ErrorCode::BadK, msg.str());
  }

  const Eigen::Vector2d a = poly.vertices[0];
  const Eigen::Vector2d b = poly.vertices[k % n];
  const Eigen::Vector2d along = (b - a).normalized();
  const Eigen::Vector2d across(along.y(), -along.x());

  // Folded vertices sit strictly on one side of the chord; pick the quarter
  // turn that sends that side to +z.
  const double side = (poly.vertices[1] - a).dot(across) > 0.0 ? 1.0 : -1.0;

  std::vector<Eigen::Vector3d> vectors(n);
  for (int i = 0; i < n; ++i) {
    const double x = poly.edges[i].dot(across);
    const double y = poly.edges[i].dot(along);
    vectors[i] = i < k ? Eigen::Vector3d(0.0, y, side * x)
                       : Eigen::Vector3d(x, y, 0.0);
  }

  EquilibratedSystem sys = Assemble(std::move(vectors), poly, LiftMode::HalfFold);
  sys.k = k;
  const ValidationReport report = ValidateSystem(sys);
  if (!report.passed()) {
    throw Error(ErrorCode::LiftFailed, "half fold: " + report.Describe());
  }
  return sys;
}

EquilibratedSystem BalancedSpins(const CyclicPolygon& poly, std::uint64_t seed,
                                 const SpinOptions& options) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  const std::size_t n = poly.size();
  std::mt19937_64 rng(seed);
  ValidationReport last;

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Eigen::Vector3d> vectors;
    vectors.reserve(n);
    for (const auto& e : poly.edges) vectors.push_back(Embed(e));

    for (std::size_t i = 0; i + 1 < n; i += 2) {
      double angle = (30.0 + 120.0 * Uniform(rng)) * kDeg;
      if (options.angle_hook) angle = options.angle_hook(attempt, i / 2, angle);
      const Eigen::Vector3d axis = (vectors[i] + vectors[i + 1]).normalized();
      const Eigen::AngleAxisd spin(angle, axis);
      vectors[i] = spin * vectors[i];
      vectors[i + 1] = spin * vectors[i + 1];
    }

    EquilibratedSystem sys =
        Assemble(std::move(vectors), poly, LiftMode::BalancedSpins);
    sys.seed = seed;
    sys.attempts = attempt + 1;
    last = ValidateSystem(sys);
    if (last.passed()) return sys;
  }

  std::ostringstream msg;
  msg << "balanced spins (seed " << seed << ") failed after "
      << options.max_attempts << " attempts: " << last.Describe();
  throw Error(ErrorCode::LiftFailed, msg.str());
}

}  // namespace facearea
