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

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "facearea/feasibility.hpp"
#include "facearea/geometry.hpp"

namespace facearea {

/// Polygon soup with 0-based indices, faces counterclockwise from outside.
struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::vector<int>> faces;

  std::size_t EdgeCount() const;
};

enum class MeshFormat { Off, Obj };

/// Nonempty facets in facet (sorted area) order.
Mesh MeshFromPolyhedron(const Polyhedron& poly);

/// Zero-volume mesh of a flat realisation: the square top face (normal +z)
/// and the strips beneath it (normal -z), all in z = 0.
Mesh MeshFromFlat(const FlatPolyhedron& flat);

/// OFF: "OFF", "V F E", vertex lines at 17 significant digits, then
/// "k i0 i1 ...". OBJ: "v" lines then 1-based "f" lines.
void WriteMesh(const Mesh& mesh, MeshFormat format, std::ostream& out);

/// IoError on failure, naming the path.
void WriteMesh(const Mesh& mesh, MeshFormat format, const std::string& path);

/// ParseError on malformed input.
Mesh ReadOff(std::istream& in);

}  // namespace facearea
