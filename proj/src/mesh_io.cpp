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

#include "facearea/mesh_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "facearea/error.hpp"
#include "facearea/input.hpp"

namespace facearea {

namespace {

std::string Real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::size_t Mesh::EdgeCount() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& face : faces) {
    for (std::size_t k = 0; k < face.size(); ++k) {
      const int a = face[k], b = face[(k + 1) % face.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return edges.size();
}

Mesh MeshFromPolyhedron(const Polyhedron& poly) {
  Mesh mesh;
  mesh.vertices = poly.vertices;
  for (const Facet& f : poly.facets) {
    if (!f.empty()) mesh.faces.push_back(f.cycle);
  }
  return mesh;
}

Mesh MeshFromFlat(const FlatPolyhedron& flat) {
  // Strip boundaries along x at y = 0 (indices 0..m) and y = side (m+1..2m+1).
  const std::size_t m = flat.strip_widths.size();
  const int top = static_cast<int>(m + 1);
  Mesh mesh;
  std::vector<double> xs{0.0};
  for (std::size_t i = 0; i + 1 < m; ++i) xs.push_back(xs.back() + flat.strip_widths[i]);
  xs.push_back(flat.side);
  for (double x : xs) mesh.vertices.emplace_back(x, 0.0, 0.0);
  for (double x : xs) mesh.vertices.emplace_back(x, flat.side, 0.0);

  std::vector<int> square;
  for (int i = 0; i <= static_cast<int>(m); ++i) square.push_back(i);
  for (int i = static_cast<int>(m); i >= 0; --i) square.push_back(top + i);
  mesh.faces.push_back(std::move(square));
  for (int i = 0; i < static_cast<int>(m); ++i) {
    mesh.faces.push_back({i, top + i, top + i + 1, i + 1});
  }
  return mesh;
}

void WriteMesh(const Mesh& mesh, MeshFormat format, std::ostream& out) {
  if (format == MeshFormat::Off) {
    out << "OFF\n"
        << mesh.vertices.size() << ' ' << mesh.faces.size() << ' '
        << mesh.EdgeCount() << '\n';
    for (const auto& v : mesh.vertices) {
      out << Real(v.x()) << ' ' << Real(v.y()) << ' ' << Real(v.z()) << '\n';
    }
    for (const auto& face : mesh.faces) {
      out << face.size();
      for (int i : face) out << ' ' << i;
      out << '\n';
    }
    return;
  }
  for (const auto& v : mesh.vertices) {
    out << "v " << Real(v.x()) << ' ' << Real(v.y()) << ' ' << Real(v.z())
        << '\n';
  }
  for (const auto& face : mesh.faces) {
    out << 'f';
    for (int i : face) out << ' ' << i + 1;
    out << '\n';
  }
}

void WriteMesh(const Mesh& mesh, MeshFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  WriteMesh(mesh, format, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

Mesh ReadOff(std::istream& in) {
  // Comments run to end of line.
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= tokens.size()) throw Error(ErrorCode::ParseError, "OFF: truncated");
    return tokens[at++];
  };
  auto count = [&]() {
    const double x = ParseNumber(next());
    if (x < 0 || x != static_cast<double>(static_cast<long>(x))) {
      throw Error(ErrorCode::ParseError, "OFF: bad count");
    }
    return static_cast<std::size_t>(x);
  };
  if (next() != "OFF") throw Error(ErrorCode::ParseError, "OFF: missing header");
  const std::size_t nv = count();
  const std::size_t nf = count();
  count();

  Mesh mesh;
  for (std::size_t i = 0; i < nv; ++i) {
    const double x = ParseNumber(next());
    const double y = ParseNumber(next());
    const double z = ParseNumber(next());
    mesh.vertices.emplace_back(x, y, z);
  }
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t k = count();
    std::vector<int> face;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t idx = count();
      if (idx >= nv) throw Error(ErrorCode::ParseError, "OFF: index out of range");
      face.push_back(static_cast<int>(idx));
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

}  // namespace facearea
