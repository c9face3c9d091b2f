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

#include "facearea/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "facearea/error.hpp"

namespace facearea {

namespace {

// Constraint classification in the homogenised cone, on unit rays.
constexpr double kConeEps = 1e-10;
// Rays whose homogenising coordinate is below this are recession directions.
constexpr double kRecessionEps = 1e-13;
// Facet membership, relative to max |h|.
constexpr double kFacetTol = 1e-11;
// Vertex merge distance, relative to the vertex cloud diameter.
constexpr double kMergeTol = 1e-9;
constexpr double kShortEdge = 1e-10;
constexpr double kVolumeAgreement = 1e-9;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

double SupportScale(const Eigen::VectorXd& h) {
  const double s = h.size() > 0 ? h.cwiseAbs().maxCoeff() : 0.0;
  return s > 0.0 ? s : 1.0;
}

void CheckSizes(std::span<const Vec3> normals, const Eigen::VectorXd& h) {
  if (static_cast<Eigen::Index>(normals.size()) != h.size()) {
    throw Error(ErrorCode::InternalGeometryError,
                "normal and support counts differ");
  }
  if (normals.size() < 4) {
    throw Error(ErrorCode::UnboundedRegion,
                "fewer than four halfspaces cannot bound a region");
  }
}

double CloudDiameter(const std::vector<Vec3>& points) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      d2 = std::max(d2, (points[i] - points[j]).squaredNorm());
    }
  }
  return std::sqrt(d2);
}

std::vector<Vec3> MergeClose(const std::vector<Vec3>& points) {
  const double tol = kMergeTol * CloudDiameter(points);
  std::vector<Vec3> kept;
  for (const Vec3& p : points) {
    const bool seen = std::any_of(kept.begin(), kept.end(), [&](const Vec3& q) {
      return (p - q).norm() <= tol;
    });
    if (!seen) kept.push_back(p);
  }
  return kept;
}

// True if some nonzero d has d . n_i <= 0 for every i. Assumes the normals
// span R^3, so the cone is pointed and any such cone has an extreme ray on
// the intersection of two constraint planes.
bool HasRecessionDirection(std::span<const Vec3> normals) {
  const std::size_t n = normals.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 c = normals[i].cross(normals[j]);
      const double len = c.norm();
      if (len < 1e-12) continue;
      for (const Vec3& d : {Vec3(c / len), Vec3(-c / len)}) {
        const bool recedes =
            std::all_of(normals.begin(), normals.end(),
                        [&](const Vec3& m) { return d.dot(m) <= 1e-12; });
        if (recedes) return true;
      }
    }
  }
  return false;
}

// Three normals with a well conditioned determinant, or throws when the
// normals are (numerically) coplanar.
std::array<std::size_t, 3> SpanningTriple(std::span<const Vec3> normals) {
  const std::size_t n = normals.size();
  std::size_t a = 0, b = 0, c = 0;
  double best = -1.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double s = normals[a].cross(normals[j]).norm();
    if (s > best) {
      best = s;
      b = j;
    }
  }
  best = -1.0;
  const Vec3 axis = normals[a].cross(normals[b]);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::abs(axis.dot(normals[j]));
    if (s > best) {
      best = s;
      c = j;
    }
  }
  if (best < 1e-12) {
    throw Error(ErrorCode::UnboundedRegion, "normals do not span R^3");
  }
  return {a, b, c};
}

struct Ray {
  Vec4 y;
  std::vector<int> zeros;  // sorted constraint ids with a . y == 0
};

void InsertSorted(std::vector<int>& ids, int id) {
  ids.insert(std::lower_bound(ids.begin(), ids.end(), id), id);
}

// Extreme rays of {y in R^4 : a_j . y <= 0}, where a_j = (n_j, -h_j / s) and
// the last constraint is -t <= 0. Vertices of P(h) are the rays with t > 0.
std::vector<Ray> ConeRays(std::span<const Vec3> normals,
                          const Eigen::VectorXd& h, double scale) {
  const int n = static_cast<int>(normals.size());
  auto row = [&](int j) -> Vec4 {
    if (j == n) return {0.0, 0.0, 0.0, -1.0};
    return {normals[j].x(), normals[j].y(), normals[j].z(), -h[j] / scale};
  };

  const auto triple = SpanningTriple(normals);
  const std::array<int, 4> basis = {n, static_cast<int>(triple[0]),
                                    static_cast<int>(triple[1]),
                                    static_cast<int>(triple[2])};
  Eigen::Matrix4d b;
  for (int r = 0; r < 4; ++r) b.row(r) = row(basis[r]).transpose();
  const Eigen::Matrix4d inv = b.inverse();

  std::vector<Ray> rays;
  for (int c = 0; c < 4; ++c) {
    Ray ray{-inv.col(c).normalized(), {}};
    for (int r = 0; r < 4; ++r) {
      if (r != c) InsertSorted(ray.zeros, basis[r]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<double> value;
  std::vector<int> common;
  for (int j = 0; j < n; ++j) {
    if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
    const Vec4 a = row(j);
    const double tol = kConeEps * a.norm();

    value.resize(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = a.dot(rays[r].y);
      if (value[r] > tol) {
        plus.push_back(r);
      } else if (value[r] < -tol) {
        minus.push_back(r);
        next.push_back(rays[r]);
      } else {
        next.push_back(rays[r]);
        InsertSorted(next.back().zeros, j);
      }
    }
    if (plus.empty()) {
      rays = std::move(next);
      continue;
    }

    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        common.clear();
        std::set_intersection(rays[p].zeros.begin(), rays[p].zeros.end(),
                              rays[q].zeros.begin(), rays[q].zeros.end(),
                              std::back_inserter(common));
        if (common.size() < 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (std::includes(rays[r].zeros.begin(), rays[r].zeros.end(),
                            common.begin(), common.end())) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        Ray fresh{(value[p] * rays[q].y - value[q] * rays[p].y).normalized(),
                  common};
        InsertSorted(fresh.zeros, j);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

std::vector<Vec3> DoubleDescriptionVertices(std::span<const Vec3> normals,
                                            const Eigen::VectorXd& h) {
  const double scale = SupportScale(h);
  const std::vector<Ray> rays = ConeRays(normals, h, scale);
  std::vector<Vec3> points;
  bool recession = false;
  for (const Ray& ray : rays) {
    if (ray.y[3] > kRecessionEps) {
      points.push_back(scale * ray.y.head<3>() / ray.y[3]);
    } else {
      recession = true;
    }
  }
  if (points.empty()) {
    throw Error(ErrorCode::EmptyInterior, "halfspaces have empty intersection");
  }
  if (recession) {
    throw Error(ErrorCode::UnboundedRegion,
                "normals do not positively span R^3");
  }
  return MergeClose(points);
}

std::vector<Vec3> TripleVertices(std::span<const Vec3> normals,
                                 const Eigen::VectorXd& h) {
  SpanningTriple(normals);
  if (HasRecessionDirection(normals)) {
    throw Error(ErrorCode::UnboundedRegion,
                "normals do not positively span R^3");
  }
  const std::size_t n = normals.size();
  const double slack = kFacetTol * SupportScale(h);
  std::vector<Vec3> points;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Eigen::Matrix3d m;
        m << normals[i].transpose(), normals[j].transpose(),
            normals[k].transpose();
        if (std::abs(m.determinant()) < 1e-12) continue;
        const Vec3 x = m.inverse() * Vec3(h[i], h[j], h[k]);
        bool inside = true;
        for (std::size_t l = 0; l < n && inside; ++l) {
          inside = normals[l].dot(x) <= h[l] + slack;
        }
        if (inside) points.push_back(x);
      }
    }
  }
  if (points.empty()) {
    throw Error(ErrorCode::EmptyInterior, "halfspaces have empty intersection");
  }
  return MergeClose(points);
}

[[noreturn]] void Inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalGeometryError, "halfspace intersection: " + what);
}

double PolygonArea(const std::vector<Vec3>& pts, const std::vector<int>& cycle,
                   const Vec3& normal) {
  if (cycle.size() < 3) return 0.0;
  const Vec3& o = pts[cycle[0]];
  double twice = 0.0;
  for (std::size_t k = 1; k + 1 < cycle.size(); ++k) {
    twice += (pts[cycle[k]] - o).cross(pts[cycle[k + 1]] - o).dot(normal);
  }
  return 0.5 * twice;
}

void CheckFullDimensional(const std::vector<Vec3>& points) {
  if (points.size() < 4) {
    throw Error(ErrorCode::EmptyInterior, "intersection has fewer than 4 vertices");
  }
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  Eigen::Matrix3Xd centered(3, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    centered.col(i) = points[i] - centroid;
  }
  Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(centered);
  const auto& sv = svd.singularValues();
  if (!(sv(2) > 1e-10 * sv(0))) {
    throw Error(ErrorCode::EmptyInterior, "intersection is flat");
  }
}

Polyhedron Assemble(std::span<const Vec3> normals, const Eigen::VectorXd& h,
                    std::vector<Vec3> points) {
  CheckFullDimensional(points);

  Polyhedron poly;
  poly.vertices = std::move(points);
  poly.normals.assign(normals.begin(), normals.end());
  poly.support = h;
  const std::size_t n = normals.size();
  const double tol = kFacetTol * SupportScale(h);
  const double diam = poly.Diameter();

  poly.facets.resize(n);
  poly.facet_areas.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Facet& facet = poly.facets[i];
    facet.normal_index = i;
    std::vector<int> members;
    Vec3 centroid = Vec3::Zero();
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      if (std::abs(normals[i].dot(poly.vertices[v]) - h[i]) <= tol) {
        members.push_back(static_cast<int>(v));
        centroid += poly.vertices[v];
      }
    }
    if (members.size() < 3) continue;
    centroid /= static_cast<double>(members.size());

    // u x w = n, so increasing angle is counterclockwise from outside.
    const Vec3 u = normals[i].unitOrthogonal();
    const Vec3 w = normals[i].cross(u);
    std::vector<std::pair<double, int>> order;
    for (int v : members) {
      const Vec3 d = poly.vertices[v] - centroid;
      order.emplace_back(std::atan2(d.dot(w), d.dot(u)), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [angle, v] : order) facet.cycle.push_back(v);

    const double area = PolygonArea(poly.vertices, facet.cycle, normals[i]);
    if (!(area > 1e-14 * diam * diam)) {
      facet.cycle.clear();
      continue;
    }
    poly.facet_areas[i] = area;
  }

  std::map<std::pair<int, int>, std::vector<std::size_t>> edge_facets;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cycle = poly.facets[i].cycle;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
      edge_facets[{std::min(a, b), std::max(a, b)}].push_back(i);
    }
  }
  std::vector<bool> used(poly.vertices.size(), false);
  for (const auto& [key, facets] : edge_facets) {
    if (facets.size() != 2) {
      std::ostringstream msg;
      msg << "edge (" << key.first << "," << key.second << ") borders "
          << facets.size() << " facets";
      Inconsistent(msg.str());
    }
    poly.edges.push_back({key.first, key.second, facets[0], facets[1]});
    used[key.first] = used[key.second] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    Inconsistent("vertex not on any edge");
  }
  const long euler = static_cast<long>(poly.vertices.size()) -
                     static_cast<long>(poly.edges.size()) +
                     static_cast<long>(poly.NonemptyFacetCount());
  if (euler != 2) Inconsistent("Euler characteristic " + std::to_string(euler));

  poly.volume = Measure(poly).volume;
  if (!(poly.volume > 0.0)) {
    throw Error(ErrorCode::EmptyInterior, "intersection has no volume");
  }
  return poly;
}

}  // namespace

std::size_t Polyhedron::NonemptyFacetCount() const {
  return static_cast<std::size_t>(std::count_if(
      facets.begin(), facets.end(), [](const Facet& f) { return !f.empty(); }));
}

double Polyhedron::Diameter() const { return CloudDiameter(vertices); }

Eigen::Vector3d Polyhedron::VertexCentroid() const {
  Vec3 c = Vec3::Zero();
  for (const Vec3& v : vertices) c += v;
  return vertices.empty() ? c : Vec3(c / static_cast<double>(vertices.size()));
}

std::vector<Eigen::Vector3d> EnumerateVertices(
    std::span<const Eigen::Vector3d> normals, const Eigen::VectorXd& h,
    KernelMethod method) {
  CheckSizes(normals, h);
  return method == KernelMethod::DoubleDescription
             ? DoubleDescriptionVertices(normals, h)
             : TripleVertices(normals, h);
}

Polyhedron IntersectHalfspaces(std::span<const Eigen::Vector3d> normals,
                               const Eigen::VectorXd& h, KernelMethod method) {
  CheckSizes(normals, h);
  if (method == KernelMethod::TripleEnumeration) {
    return Assemble(normals, h, TripleVertices(normals, h));
  }
  try {
    return Assemble(normals, h, DoubleDescriptionVertices(normals, h));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalGeometryError) throw;
  }
  return Assemble(normals, h, TripleVertices(normals, h));
}

Measurement Measure(const Polyhedron& poly) {
  Measurement m;
  const std::size_t n = poly.facets.size();
  m.areas.assign(n, 0.0);
  const Vec3 g = poly.VertexCentroid();
  double support_sum = 0.0;
  double tets = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cycle = poly.facets[i].cycle;
    if (cycle.size() < 3) continue;
    m.areas[i] = PolygonArea(poly.vertices, cycle, poly.normals[i]);
    support_sum += poly.support[i] * m.areas[i];
    const Vec3 o = poly.vertices[cycle[0]] - g;
    for (std::size_t k = 1; k + 1 < cycle.size(); ++k) {
      tets += o.dot((poly.vertices[cycle[k]] - g)
                        .cross(poly.vertices[cycle[k + 1]] - g));
    }
  }
  const double by_support = support_sum / 3.0;
  const double by_tets = tets / 6.0;
  const double mag = std::max(std::abs(by_support), std::abs(by_tets));
  if (std::abs(by_support - by_tets) > kVolumeAgreement * mag) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "volume cross-check failed: " << by_support << " vs " << by_tets;
    throw Error(ErrorCode::InconsistentVolume, msg.str());
  }
  m.volume = by_tets;
  return m;
}

Eigen::MatrixXd AreaJacobian(const Polyhedron& poly) {
  const auto n = static_cast<Eigen::Index>(poly.facets.size());
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  const double min_edge = kShortEdge * poly.Diameter();
  for (const Edge& e : poly.edges) {
    const double len = (poly.vertices[e.v0] - poly.vertices[e.v1]).norm();
    if (len < min_edge) {
      std::ostringstream msg;
      msg << "edge between facets " << e.facet0 << " and " << e.facet1
          << " has length " << len;
      throw Error(ErrorCode::DegenerateCombinatorics, msg.str());
    }
    const Vec3& a = poly.normals[e.facet0];
    const Vec3& b = poly.normals[e.facet1];
    const double entry = len / a.cross(b).norm();
    const auto i = static_cast<Eigen::Index>(e.facet0);
    const auto j = static_cast<Eigen::Index>(e.facet1);
    jac(i, j) += entry;
    jac(j, i) += entry;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double diag = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i && jac(i, j) != 0.0) {
        diag -= jac(i, j) * poly.normals[i].dot(poly.normals[j]);
      }
    }
    jac(i, i) = diag;
  }
  return jac;
}

Eigen::MatrixXd AreaJacobian(std::span<const Eigen::Vector3d> normals,
                             const Eigen::VectorXd& h) {
  return AreaJacobian(IntersectHalfspaces(normals, h));
}

}  // namespace facearea
