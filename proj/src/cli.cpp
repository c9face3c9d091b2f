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

#include "facearea/cli.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "facearea/error.hpp"
#include "facearea/input.hpp"
#include "facearea/mesh_io.hpp"
#include "facearea/pipeline.hpp"
#include "facearea/report.hpp"

namespace facearea {

namespace {

struct Args {
  std::string areas;
  std::vector<std::string> area;
  std::string input;
  std::string mode = "half-fold";
  std::optional<int> k;
  std::uint64_t seed = 0;
  double tol_area = 1e-7;
  double tol_eq = kDefaultEqualityTolerance;
  int max_iter = 200;
  std::string out;
  std::string format;
  std::string report;
  std::string residual_csv;
  bool allow_degenerate_mesh = false;
};

std::vector<double> CollectAreas(const Args& args, const CLI::App& app) {
  const int sources = (app.count("--areas") > 0) + (app.count("--area") > 0) +
                      (app.count("--input") > 0);
  if (sources == 0) {
    throw Error(ErrorCode::EmptyInput,
                "no areas given; use --areas, --area or --input");
  }
  if (sources > 1) {
    throw Error(ErrorCode::ParseError,
                "give areas through exactly one of --areas, --area, --input");
  }
  if (!args.input.empty()) return ReadAreaFile(args.input);
  if (!args.area.empty()) {
    std::vector<double> out;
    for (const auto& a : args.area) out.push_back(ParseNumber(a));
    return out;
  }
  return ParseAreaList(args.areas);
}

MeshFormat PickFormat(const Args& args) {
  if (args.format == "obj") return MeshFormat::Obj;
  if (args.format.empty() && args.out.size() >= 4 &&
      args.out.compare(args.out.size() - 4, 4, ".obj") == 0) {
    return MeshFormat::Obj;
  }
  return MeshFormat::Off;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Builds a convex polyhedron with prescribed face areas."};
  app.name("facearea");
  Args args;
  app.add_option("--areas", args.areas, "Comma separated areas, e.g. 9,6,5,4");
  app.add_option("--area", args.area, "One area; repeatable")->take_all();
  app.add_option("--input", args.input,
                 "File with one area per line (# comments) or a JSON array");
  app.add_option("--mode", args.mode, "Lift: half-fold or balanced")
      ->check(CLI::IsMember({"half-fold", "balanced"}));
  app.add_option("--k", args.k, "Number of folded edges (default n/2)");
  app.add_option("--seed", args.seed, "Seed for balanced spins");
  app.add_option("--tol-area", args.tol_area, "Relative facet area tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-eq", args.tol_eq, "Relative tolerance for equality")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-iter", args.max_iter, "Solver iteration limit")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", args.out, "Mesh output path");
  app.add_option("--format", args.format, "Mesh format: off or obj")
      ->check(CLI::IsMember({"off", "obj"}));
  app.add_option("--report", args.report, "JSON report path");
  app.add_option("--residual-csv", args.residual_csv,
                 "Solver convergence history as CSV");
  app.add_flag("--allow-degenerate-mesh", args.allow_degenerate_mesh,
               "Also write a zero-volume mesh for flat inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<double> raw;
  try {
    raw = CollectAreas(args, app);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }

  PipelineOptions options;
  options.tol_eq = args.tol_eq;
  options.tol_area = args.tol_area;
  options.max_iter = args.max_iter;
  options.mode = args.mode == "balanced" ? LiftMode::BalancedSpins
                                         : LiftMode::HalfFold;
  options.k = args.k;
  options.seed = args.seed;

  const PipelineResult result = RunPipeline(raw, options);
  int status = result.exit_code;
  (result.ok() ? out : err) << result.message << '\n';

  try {
    if (result.ok() && result.flat) {
      out << DumpJson(FlatJson(*result.flat));
      if (!args.out.empty()) {
        if (args.allow_degenerate_mesh) {
          WriteMesh(MeshFromFlat(*result.flat), PickFormat(args), args.out);
        } else {
          err << "note: flat input; no mesh written to " << args.out
              << " (pass --allow-degenerate-mesh)\n";
        }
      }
    }
    if (result.ok() && result.solution && !args.out.empty()) {
      WriteMesh(MeshFromPolyhedron(result.solution->poly), PickFormat(args),
                args.out);
    }
    if (result.solution && !args.residual_csv.empty()) {
      WriteResidualCsv(result.solution->history, args.residual_csv);
    }
    if (!args.report.empty()) WriteReport(MakeReport(result, options), args.report);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    status = ExitCodeFor(e.code());
  }
  return status;
}

}  // namespace facearea
