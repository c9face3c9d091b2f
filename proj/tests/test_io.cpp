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
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "facearea/error.hpp"
#include "facearea/input.hpp"
#include "facearea/mesh_io.hpp"
#include "facearea/pipeline.hpp"
#include "facearea/report.hpp"
#include "generators.hpp"

namespace facearea {
namespace {

namespace fs = std::filesystem;

ErrorCode ParseCode(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InternalGeometryError;
}

std::string Message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

fs::path TempPath(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "facearea_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

Mesh RoundTrip(const Mesh& mesh) {
  std::stringstream buf;
  WriteMesh(mesh, MeshFormat::Off, buf);
  return ReadOff(buf);
}

TEST_SUITE("io") {

TEST_CASE("numbers and lists") {
  CHECK(ParseNumber("2.5") == 2.5);
  CHECK(ParseNumber(" +1e-3 ") == 1e-3);
  CHECK(ParseNumber("0.1") == 0.1);
  CHECK(ParseCode([] { ParseNumber("abc"); }) == ErrorCode::ParseError);
  CHECK(ParseCode([] { ParseNumber("1.5x"); }) == ErrorCode::ParseError);
  CHECK(ParseCode([] { ParseNumber(""); }) == ErrorCode::ParseError);

  CHECK(ParseAreaList("9,6,5,4,3,2,1,1") ==
        std::vector<double>{9, 6, 5, 4, 3, 2, 1, 1});
  CHECK(ParseAreaList(" 1 , 2 ") == std::vector<double>{1, 2});
  CHECK(ParseCode([] { ParseAreaList("1,,2"); }) == ErrorCode::ParseError);
  CHECK(Message([] { ParseAreaList("1,,2"); }).find("#2") != std::string::npos);
  CHECK(ParseCode([] { ParseAreaList("1,2,"); }) == ErrorCode::ParseError);
  CHECK(ParseCode([] { ParseAreaList("1,x"); }) == ErrorCode::ParseError);
}

TEST_CASE("text and json input") {
  CHECK(ParseAreaText("1\n1\n# note\n1\n1\n") == std::vector<double>{1, 1, 1, 1});
  CHECK(ParseAreaText("  3 # trailing\r\n\n4\n") == std::vector<double>{3, 4});
  CHECK(ParseAreaText("[1, 2.5, 3e0]") == std::vector<double>{1, 2.5, 3});
  CHECK(ParseCode([] { ParseAreaText("[1, \"a\"]"); }) == ErrorCode::ParseError);
  CHECK(ParseCode([] { ParseAreaText("[1, 2"); }) == ErrorCode::ParseError);
  CHECK(ParseCode([] { ParseAreaText("# only a comment\n"); }) == ErrorCode::ParseError);
  CHECK(Message([] { ParseAreaText("1\n2\nthree\n"); }).find("line 3") !=
        std::string::npos);

  const fs::path path = TempPath("areas.txt");
  std::ofstream(path) << "5\n4\n3\n";
  CHECK(ReadAreaFile(path.string()) == std::vector<double>{5, 4, 3});
  CHECK(ParseCode([] { ReadAreaFile("/nonexistent/dir/areas.txt"); }) ==
        ErrorCode::IoError);
}

TEST_CASE("cube and tetrahedron meshes") {
  const Polyhedron cube = IntersectHalfspaces(
      testing::CubeNormals(), Eigen::VectorXd::Constant(6, 0.5));
  std::stringstream off;
  WriteMesh(MeshFromPolyhedron(cube), MeshFormat::Off, off);
  std::string line;
  std::getline(off, line);
  CHECK(line == "OFF");
  std::getline(off, line);
  CHECK(line == "8 6 12");

  const Polyhedron tet = IntersectHalfspaces(
      testing::TetrahedronNormals(), Eigen::VectorXd::Ones(4));
  std::stringstream off4;
  WriteMesh(MeshFromPolyhedron(tet), MeshFormat::Off, off4);
  std::getline(off4, line);
  std::getline(off4, line);
  CHECK(line == "4 4 6");
}

TEST_CASE("mesh faces follow facet order and skip empty facets") {
  auto normals = testing::CubeNormals();
  normals.insert(normals.begin() + 2, Eigen::Vector3d(1, 1, 1).normalized());
  Eigen::VectorXd h = Eigen::VectorXd::Constant(7, 0.5);
  h[2] = 5.0;
  const Polyhedron p = IntersectHalfspaces(normals, h);
  const Mesh mesh = MeshFromPolyhedron(p);
  REQUIRE(mesh.faces.size() == 6);
  CHECK(mesh.vertices.size() == p.vertices.size());
  std::size_t face = 0;
  for (const auto& f : p.facets) {
    if (f.empty()) continue;
    CHECK(mesh.faces[face++] == f.cycle);
  }
}

TEST_CASE("off round trip is exact") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const auto hs = testing::RandomHalfspaces(rng, rng.Int(4, 20));
    const Mesh mesh = MeshFromPolyhedron(IntersectHalfspaces(hs.normals, hs.h));
    const Mesh back = RoundTrip(mesh);
    REQUIRE(back.vertices.size() == mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      CHECK(std::memcmp(back.vertices[i].data(), mesh.vertices[i].data(),
                        3 * sizeof(double)) == 0);
    }
    CHECK(back.faces == mesh.faces);
  }
  std::stringstream bad("OFF\n3 1\n");
  CHECK(ParseCode([&] { ReadOff(bad); }) == ErrorCode::ParseError);
  std::stringstream not_off("PLY\n");
  CHECK(ParseCode([&] { ReadOff(not_off); }) == ErrorCode::ParseError);
}

TEST_CASE("obj uses one based faces") {
  Mesh mesh;
  mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  mesh.faces = {{0, 1, 2}};
  std::stringstream obj;
  WriteMesh(mesh, MeshFormat::Obj, obj);
  CHECK(obj.str() == "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
}

TEST_CASE("flat mesh is two sided") {
  const FlatPolyhedron flat = ConstructFlat(MakeAreaSpec(std::vector<double>{6, 3, 2, 1}));
  const Mesh mesh = MeshFromFlat(flat);
  REQUIRE(mesh.faces.size() == 4);
  double top = 0.0, bottom = 0.0;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    Eigen::Vector3d twice = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < face.size(); ++k) {
      twice += mesh.vertices[face[k]].cross(mesh.vertices[face[(k + 1) % face.size()]]);
    }
    (twice.z() > 0 ? top : bottom) += 0.5 * std::abs(twice.z());
  }
  CHECK(top == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(bottom == doctest::Approx(6.0).epsilon(1e-12));
  for (const auto& v : mesh.vertices) CHECK(v.z() == 0.0);
}

TEST_CASE("write errors name the path") {
  Mesh mesh;
  const std::string path = "/nonexistent/dir/out.off";
  CHECK(ParseCode([&] { WriteMesh(mesh, MeshFormat::Off, path); }) == ErrorCode::IoError);
  CHECK(Message([&] { WriteMesh(mesh, MeshFormat::Off, path); }).find(path) !=
        std::string::npos);
  CHECK(ParseCode([&] { WriteReport(nlohmann::json::object(), path); }) ==
        ErrorCode::IoError);
}

TEST_CASE("json dump format") {
  nlohmann::json doc = {{"b", 0.1}, {"a", {1, 2}}, {"c", nullptr},
                        {"d", INFINITY}, {"e", "x"}, {"f", true}};
  CHECK(DumpJson(doc) ==
        "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 0.10000000000000001,\n"
        "  \"c\": null,\n  \"d\": null,\n  \"e\": \"x\",\n  \"f\": true\n}\n");
}

TEST_CASE("solid report schema") {
  const std::vector<double> raw = {1, 9, 6, 5, 4, 3, 2, 1};
  PipelineOptions opts;
  const PipelineResult result = RunPipeline(raw, opts);
  REQUIRE(result.ok());
  const nlohmann::json r = MakeReport(result, opts);
  for (const char* key : {"schema", "input", "classification", "radius", "branch",
                          "lift", "solver", "verification", "timing", "flat",
                          "exit_code", "message", "error"}) {
    CHECK(r.contains(key));
  }
  CHECK(r["schema"] == 1);
  CHECK(r["branch"] == "inside");
  CHECK(r["flat"].is_null());
  CHECK(r["verification"]["passed"] == true);
  CHECK(r["input"]["areas"].get<std::vector<double>>() == raw);
  CHECK(r["input"]["sorted"].get<std::vector<double>>() ==
        std::vector<double>{9, 6, 5, 4, 3, 2, 1, 1});
  const auto perm = r["input"]["permutation"].get<std::vector<std::size_t>>();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    CHECK(raw[perm[i]] == r["input"]["sorted"][i].get<double>());
  }
  CHECK(r["lift"]["k"] == 4);
  CHECK(r["lift"]["seed"].is_null());
  CHECK(r["lift"]["normals"].size() == 8);
  CHECK(std::abs(r["radius"].get<double>() - 5.325) <= 1e-3);
}

TEST_CASE("flat and infeasible reports") {
  PipelineOptions opts;
  const nlohmann::json flat = MakeReport(RunPipeline(std::vector<double>{6, 3, 2, 1}, opts), opts);
  CHECK(flat["radius"].is_null());
  CHECK(flat["classification"]["tag"] == "Flat");
  CHECK(flat["flat"]["widths"].size() == 3);
  CHECK(flat["flat"]["side"].get<double>() == doctest::Approx(std::sqrt(6.0)));

  const nlohmann::json bad =
      MakeReport(RunPipeline(std::vector<double>{100, 1, 1, 1}, opts), opts);
  CHECK(bad["exit_code"] == 2);
  CHECK(bad["classification"]["slack"] == -97.0);
  CHECK(bad["solver"].is_null());
}

TEST_CASE("reports are reproducible apart from timing") {
  PipelineOptions opts;
  opts.mode = LiftMode::BalancedSpins;
  opts.seed = 17;
  const std::vector<double> raw = {7, 5, 5, 4, 3, 3, 2};
  nlohmann::json a = MakeReport(RunPipeline(raw, opts), opts);
  nlohmann::json b = MakeReport(RunPipeline(raw, opts), opts);
  a.erase("timing");
  b.erase("timing");
  CHECK(DumpJson(a) == DumpJson(b));
  CHECK(a["lift"]["seed"] == 17);
}

TEST_CASE("residual csv") {
  std::vector<IterationRecord> history = {{0, StepKind::Start, 0.5, 1.0, 0.0},
                                          {1, StepKind::Newton, 0.25, 0.5, 1.0}};
  std::stringstream csv;
  WriteResidualCsv(history, csv);
  CHECK(csv.str() == "iteration,max_relative_error\n0,0.5\n1,0.25\n");
}

}  // TEST_SUITE

}  // namespace
}  // namespace facearea
