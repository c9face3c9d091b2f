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

#include "facearea/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "facearea/error.hpp"

namespace facearea {

namespace {

using nlohmann::json;

std::string Real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void Dump(const json& doc, std::ostream& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (doc.type()) {
    case json::value_t::object: {
      if (doc.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << json(it.key()).dump() << ": ";
        Dump(it.value(), out, depth + 1);
      }
      out << '\n' << close << '}';
      return;
    }
    case json::value_t::array: {
      if (doc.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < doc.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        Dump(doc[i], out, depth + 1);
      }
      out << '\n' << close << ']';
      return;
    }
    case json::value_t::number_float:
      out << Real(doc.get<double>());
      return;
    default:
      out << doc.dump();
  }
}

std::string ModeName(LiftMode mode) {
  switch (mode) {
    case LiftMode::HalfFold: return "half-fold";
    case LiftMode::BalancedSpins: return "balanced";
    case LiftMode::Explicit: return "explicit";
  }
  return "unknown";
}

json Vector(const std::vector<double>& v) { return json(v); }

}  // namespace

json FlatJson(const FlatPolyhedron& flat) {
  return {{"side", flat.side},
          {"top_face_area", flat.top_face_area},
          {"widths", Vector(flat.strip_widths)}};
}

json MakeReport(const PipelineResult& result, const PipelineOptions& options) {
  json report;
  report["schema"] = kReportSchema;

  json input;
  input["areas"] = Vector(result.raw);
  if (result.spec) {
    input["sorted"] = Vector(result.spec->areas);
    input["permutation"] = result.spec->permutation;
  } else {
    input["sorted"] = nullptr;
    input["permutation"] = nullptr;
  }
  json opts;
  opts["tol_eq"] = options.tol_eq;
  opts["tol_area"] = options.tol_area;
  opts["max_iter"] = options.max_iter;
  opts["mode"] = ModeName(options.mode);
  opts["k"] = options.k ? json(*options.k) : json(nullptr);
  opts["seed"] = options.seed;
  input["options"] = opts;
  report["input"] = input;

  if (result.classification) {
    report["classification"] = {
        {"tag", std::string(ToString(result.classification->tag))},
        {"slack", result.classification->slack}};
  } else {
    report["classification"] = nullptr;
  }

  if (result.radius) {
    report["radius"] = result.radius->radius;
    report["branch"] = result.radius->center_inside ? "inside" : "outside";
  } else {
    report["radius"] = nullptr;
    report["branch"] = nullptr;
  }

  if (result.system) {
    const EquilibratedSystem& sys = *result.system;
    json lift;
    lift["mode"] = ModeName(sys.mode);
    lift["k"] = sys.mode == LiftMode::HalfFold ? json(sys.k) : json(nullptr);
    lift["seed"] =
        sys.mode == LiftMode::BalancedSpins ? json(sys.seed) : json(nullptr);
    lift["attempts"] = sys.attempts;
    json normals = json::array();
    for (const auto& n : sys.normals) normals.push_back({n.x(), n.y(), n.z()});
    lift["normals"] = normals;
    report["lift"] = lift;
  } else {
    report["lift"] = nullptr;
  }

  if (result.solution) {
    const MinkowskiSolution& sol = *result.solution;
    report["solver"] = {
        {"iterations", sol.iterations},
        {"residual", sol.residual},
        {"fallback_activations", sol.fallback_activations},
        {"support", std::vector<double>(sol.h.data(), sol.h.data() + sol.h.size())},
        {"vertices", sol.poly.vertices.size()},
        {"volume", sol.poly.volume}};
  } else {
    report["solver"] = nullptr;
  }

  if (result.verification) {
    const VerificationReport& v = *result.verification;
    report["verification"] = {{"passed", v.passed()},
                              {"max_relative_error", v.max_relative_error},
                              {"relative_errors", Vector(v.relative_errors)},
                              {"closure_norm", v.closure_norm},
                              {"closure_ok", v.closure_ok},
                              {"convex_ok", v.convex_ok},
                              {"euler", v.euler}};
  } else {
    report["verification"] = nullptr;
  }

  report["flat"] = result.flat ? FlatJson(*result.flat) : json(nullptr);
  report["timing"] = {{"radius_ms", result.timing.radius_ms},
                      {"lift_ms", result.timing.lift_ms},
                      {"solve_ms", result.timing.solve_ms},
                      {"total_ms", result.timing.total_ms}};
  report["exit_code"] = result.exit_code;
  report["message"] = result.message;
  report["error"] = result.error ? json(*result.error) : json(nullptr);
  return report;
}

std::string DumpJson(const json& doc) {
  std::ostringstream out;
  Dump(doc, out, 0);
  out << '\n';
  return out.str();
}

void WriteReport(const json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << DumpJson(doc);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

void WriteResidualCsv(const std::vector<IterationRecord>& history,
                      std::ostream& out) {
  out << "iteration,max_relative_error\n";
  for (const auto& rec : history) {
    out << rec.iteration << ',' << Real(rec.max_relative_error) << '\n';
  }
}

void WriteResidualCsv(const std::vector<IterationRecord>& history,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  WriteResidualCsv(history, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace facearea
