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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "brute_force.hpp"
#include "facearea/error.hpp"
#include "facearea/geometry.hpp"
#include "generators.hpp"

namespace facearea {
namespace {

using Eigen::Vector3d;
using Eigen::VectorXd;
using testing::Rng;

VectorXd Constant(std::size_t n, double value) {
  return VectorXd::Constant(static_cast<Eigen::Index>(n), value);
}

ErrorCode IntersectError(const std::vector<Vector3d>& normals, const VectorXd& h,
                         KernelMethod method = KernelMethod::DoubleDescription) {
  try {
    IntersectHalfspaces(normals, h, method);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InternalGeometryError;
}

void CheckStructure(const Polyhedron& p) {
  const long euler = static_cast<long>(p.vertices.size()) -
                     static_cast<long>(p.edges.size()) +
                     static_cast<long>(p.NonemptyFacetCount());
  CHECK(euler == 2);
  double total = 0.0;
  Vector3d closure = Vector3d::Zero();
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    const auto& f = p.facets[i];
    CHECK(f.normal_index == i);
    total += p.facet_areas[i];
    closure += p.facet_areas[i] * p.normals[i];
    if (f.empty()) {
      CHECK(p.facet_areas[i] == 0.0);
      continue;
    }
    // Counterclockwise seen from outside, strictly convex turns.
    const std::size_t m = f.cycle.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Vector3d& a = p.vertices[f.cycle[k]];
      const Vector3d& b = p.vertices[f.cycle[(k + 1) % m]];
      const Vector3d& c = p.vertices[f.cycle[(k + 2) % m]];
      CHECK((b - a).cross(c - b).dot(p.normals[i]) > 0.0);
      CHECK(std::abs(p.normals[i].dot(a) - p.support[i]) <=
            1e-9 * p.support.cwiseAbs().maxCoeff());
    }
  }
  CHECK(closure.norm() <= 1e-8 * total);
  for (const auto& e : p.edges) {
    CHECK(e.facet0 != e.facet1);
    CHECK(e.v0 != e.v1);
  }
}

TEST_SUITE("geometry") {

TEST_CASE("unit cube") {
  const auto normals = testing::CubeNormals();
  for (auto method : {KernelMethod::DoubleDescription, KernelMethod::TripleEnumeration}) {
    const Polyhedron p = IntersectHalfspaces(normals, Constant(6, 0.5), method);
    CHECK(p.vertices.size() == 8);
    CHECK(p.edges.size() == 12);
    CHECK(p.NonemptyFacetCount() == 6);
    for (double a : p.facet_areas) CHECK(a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.volume == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.Diameter() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(p.VertexCentroid().norm() <= 1e-15);
    for (const auto& f : p.facets) CHECK(f.cycle.size() == 4);
    CheckStructure(p);
  }
}

TEST_CASE("regular tetrahedron") {
  const Polyhedron p = IntersectHalfspaces(testing::TetrahedronNormals(), Constant(4, 1.0));
  CHECK(p.vertices.size() == 4);
  CHECK(p.edges.size() == 6);
  for (double a : p.facet_areas) {
    CHECK(a == doctest::Approx(6.0 * std::sqrt(3.0)).epsilon(1e-13));
  }
  CHECK(p.volume == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-13));
  for (const auto& e : p.edges) {
    CHECK((p.vertices[e.v0] - p.vertices[e.v1]).norm() ==
          doctest::Approx(2.0 * std::sqrt(6.0)).epsilon(1e-13));
  }
  const Measurement m = Measure(p);
  CHECK(m.volume == doctest::Approx(p.volume).epsilon(1e-14));
  CheckStructure(p);
}

TEST_CASE("regular octahedron") {
  // Unit inradius: edge sqrt(6), volume 4 sqrt(3).
  const Polyhedron p = IntersectHalfspaces(testing::OctahedronNormals(), Constant(8, 1.0));
  CHECK(p.vertices.size() == 6);
  CHECK(p.edges.size() == 12);
  CHECK(p.volume == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-13));
  CheckStructure(p);
}

TEST_CASE("unbounded and empty regions") {
  const std::vector<Vector3d> cap = {{0, 0, 1}, {0.6, 0, 0.8}, {0, 0.6, 0.8},
                                     {-0.6, -0.6, std::sqrt(0.28)}};
  CHECK(IntersectError(cap, Constant(4, 1.0)) == ErrorCode::UnboundedRegion);
  CHECK(IntersectError(cap, Constant(4, 1.0), KernelMethod::TripleEnumeration) ==
        ErrorCode::UnboundedRegion);

  const std::vector<Vector3d> planar = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  CHECK(IntersectError(planar, Constant(4, 1.0)) == ErrorCode::UnboundedRegion);
  CHECK(IntersectError({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Constant(3, 1.0)) ==
        ErrorCode::UnboundedRegion);

  const auto cube = testing::CubeNormals();
  VectorXd h = Constant(6, 0.5);
  h[0] = -1.0;  // x <= -1 and x >= -0.5
  CHECK(IntersectError(cube, h) == ErrorCode::EmptyInterior);
  CHECK(IntersectError(cube, h, KernelMethod::TripleEnumeration) ==
        ErrorCode::EmptyInterior);
  h[0] = -0.5;  // the slab x = -0.5 has no interior
  CHECK(IntersectError(cube, h) == ErrorCode::EmptyInterior);
}

TEST_CASE("redundant planes give empty facets") {
  auto normals = testing::CubeNormals();
  normals.push_back(Vector3d(1, 1, 1).normalized());
  VectorXd h = Constant(7, 0.5);
  for (double far : {10.0, std::sqrt(3.0) / 2.0}) {
    h[6] = far;  // well clear of, then touching, the corner (1/2, 1/2, 1/2)
    const Polyhedron p = IntersectHalfspaces(normals, h);
    CHECK(p.facets[6].empty());
    CHECK(p.facet_areas[6] == 0.0);
    CHECK(p.vertices.size() == 8);
    CHECK(p.NonemptyFacetCount() == 6);
    CheckStructure(p);
  }
  h[6] = std::sqrt(3.0) / 2.0 - 0.1;
  const Polyhedron cut = IntersectHalfspaces(normals, h);
  CHECK(cut.vertices.size() == 10);
  CHECK(cut.facets[6].cycle.size() == 3);
  CheckStructure(cut);
}

TEST_CASE("kernels agree with the brute force reference") {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.Int(4, 10);
    const auto hs = testing::RandomHalfspaces(rng, n);
    const auto expect = testing::BruteForceVertices(hs.normals, hs.h);
    for (auto method : {KernelMethod::DoubleDescription, KernelMethod::TripleEnumeration}) {
      const auto got = EnumerateVertices(hs.normals, hs.h, method);
      CHECK(got.size() == expect.size());
      CHECK(testing::SetDistance(got, expect) <= 1e-9);
      const Polyhedron p = IntersectHalfspaces(hs.normals, hs.h, method);
      CHECK(testing::SetDistance(p.vertices, expect) <= 1e-9);
      const auto areas = testing::BruteForceAreas(hs.normals, hs.h);
      for (int i = 0; i < n; ++i) CHECK(std::abs(p.facet_areas[i] - areas[i]) <= 1e-9);
      CheckStructure(p);
    }
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("larger random polytopes stay consistent") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.Int(11, 64);
    const auto hs = testing::RandomHalfspaces(rng, n);
    const Polyhedron dd = IntersectHalfspaces(hs.normals, hs.h);
    const Polyhedron te =
        IntersectHalfspaces(hs.normals, hs.h, KernelMethod::TripleEnumeration);
    CHECK(testing::SetDistance(dd.vertices, te.vertices) <= 1e-9);
    CheckStructure(dd);
  }
}

TEST_CASE("translation equivariance") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(4, 16);
    const auto hs = testing::RandomHalfspaces(rng, n);
    const Vector3d t = 0.3 * rng.UnitVector();
    VectorXd shifted = hs.h;
    for (int i = 0; i < n; ++i) shifted[i] += hs.normals[i].dot(t);
    const Polyhedron a = IntersectHalfspaces(hs.normals, hs.h);
    const Polyhedron b = IntersectHalfspaces(hs.normals, shifted);
    auto moved = a.vertices;
    for (auto& v : moved) v += t;
    CHECK(testing::SetDistance(moved, b.vertices) <= 1e-10);
    CHECK(std::abs(a.volume - b.volume) <= 1e-10 * a.volume);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(a.facet_areas[i] - b.facet_areas[i]) <= 1e-10);
    }
  }
}

TEST_CASE("volume is consistent between both formulas") {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto hs = testing::RandomHalfspaces(rng, rng.Int(4, 24));
    const Polyhedron p = IntersectHalfspaces(hs.normals, hs.h);
    double cone = 0.0;
    for (std::size_t i = 0; i < p.facets.size(); ++i) cone += hs.h[i] * p.facet_areas[i];
    CHECK(std::abs(cone / 3.0 - p.volume) <= 1e-10 * p.volume);
  }
}

TEST_CASE("area jacobian closed form") {
  // Cube: each facet meets four others at right angles along unit edges.
  const Eigen::MatrixXd j = AreaJacobian(testing::CubeNormals(), Constant(6, 0.5));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const double expect = a == b || (a / 2 == b / 2) ? 0.0 : 1.0;
      CHECK(std::abs(j(a, b) - expect) <= 1e-14);
    }
  }
}

TEST_CASE("area jacobian symmetry and translation null space") {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(4, 16);
    const auto hs = testing::RandomHalfspaces(rng, n);
    const Eigen::MatrixXd j = AreaJacobian(hs.normals, hs.h);
    CHECK((j - j.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * j.cwiseAbs().maxCoeff());
    for (int axis = 0; axis < 3; ++axis) {
      VectorXd t(n);
      for (int i = 0; i < n; ++i) t[i] = hs.normals[i][axis];
      CHECK((j * t).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("volume gradient equals areas and jacobian matches differences") {
  Rng rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.Int(4, 16);
    const auto hs = testing::RandomFullHalfspaces(rng, n);
    const Polyhedron p = IntersectHalfspaces(hs.normals, hs.h);
    const double step = 1e-6 * hs.h.cwiseAbs().maxCoeff();
    const Eigen::MatrixXd j = AreaJacobian(p);
    Eigen::MatrixXd fd(n, n);
    for (int i = 0; i < n; ++i) {
      VectorXd up = hs.h, down = hs.h;
      up[i] += step;
      down[i] -= step;
      const Polyhedron pu = IntersectHalfspaces(hs.normals, up);
      const Polyhedron pd = IntersectHalfspaces(hs.normals, down);
      const double dv = (pu.volume - pd.volume) / (2.0 * step);
      CHECK(std::abs(dv - p.facet_areas[i]) <= 1e-4 * p.facet_areas[i]);
      for (int k = 0; k < n; ++k) {
        fd(k, i) = (pu.facet_areas[k] - pd.facet_areas[k]) / (2.0 * step);
      }
    }
    CHECK((fd - j).cwiseAbs().maxCoeff() <= 1e-5 * j.cwiseAbs().maxCoeff());
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace facearea
