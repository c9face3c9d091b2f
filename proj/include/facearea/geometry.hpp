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
#include <vector>

#include <Eigen/Core>

namespace facearea {

/// Facet cut out by plane `normal_index`. The cycle is counterclockwise seen
/// from outside and empty when the plane does not support a 2-face.
struct Facet {
  std::size_t normal_index = 0;
  std::vector<int> cycle;

  bool empty() const { return cycle.empty(); }
};

struct Edge {
  int v0, v1;
  std::size_t facet0, facet1;
};

/**
 * P(h) = {x : n_i . x <= h_i}. Facets are indexed by input normal, so
 * facets[i], facet_areas[i], normals[i] and support[i] all refer to plane i.
 */
struct Polyhedron {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Facet> facets;
  std::vector<Edge> edges;
  std::vector<double> facet_areas;
  std::vector<Eigen::Vector3d> normals;
  Eigen::VectorXd support;
  double volume = 0.0;

  std::size_t NonemptyFacetCount() const;
  double Diameter() const;
  Eigen::Vector3d VertexCentroid() const;
};

enum class KernelMethod {
  /// Incremental double description on the homogenised cone; falls back to
  /// triple enumeration if its output is structurally inconsistent.
  DoubleDescription,
  /// Every plane triple, filtered by feasibility. O(n^4).
  TripleEnumeration,
};

/// Throws UnboundedRegion when the normals do not positively span R^3 and
/// EmptyInterior when P(h) has no interior. InternalGeometryError signals a
/// result that fails the Euler or closure checks.
Polyhedron IntersectHalfspaces(std::span<const Eigen::Vector3d> normals,
                               const Eigen::VectorXd& h,
                               KernelMethod method = KernelMethod::DoubleDescription);

/// Raw vertex enumeration (deduplicated), without facet extraction.
std::vector<Eigen::Vector3d> EnumerateVertices(
    std::span<const Eigen::Vector3d> normals, const Eigen::VectorXd& h,
    KernelMethod method = KernelMethod::DoubleDescription);

struct Measurement {
  std::vector<double> areas;
  double volume;
};

/// Fan-triangulated facet areas and the volume. The volume is computed both
/// as sum h_i A_i / 3 and as a signed tetrahedra sum around the vertex
/// centroid; InconsistentVolume if they disagree beyond 1e-9 relative.
Measurement Measure(const Polyhedron& poly);

/**
 * dA_i/dh_j. Off the diagonal this is l_ij / sin(phi_ij) for facets sharing
 * an edge of length l_ij whose normals meet at angle phi_ij, zero otherwise;
 * the diagonal is -sum_j J_ij cos(phi_ij). Symmetric, and annihilates
 * (n_1 . t, ..., n_n . t) for every translation t.
 *
 * Throws DegenerateCombinatorics when an edge is shorter than 1e-10 times
 * the diameter.
 */
Eigen::MatrixXd AreaJacobian(const Polyhedron& poly);
Eigen::MatrixXd AreaJacobian(std::span<const Eigen::Vector3d> normals,
                             const Eigen::VectorXd& h);

}  // namespace facearea
