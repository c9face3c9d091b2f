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

#include "json.hpp"

#include "facearea/minkowski.hpp"
#include "facearea/pipeline.hpp"

namespace facearea {

inline constexpr int kReportSchema = 1;

/// Solve report, schema 1. Top-level keys: schema, input, classification,
/// radius, branch, lift, solver, verification, flat, timing, exit_code,
/// message, error. Stages that did not run are null.
nlohmann::json MakeReport(const PipelineResult& result,
                          const PipelineOptions& options);

/// Flat realisation as {side, top_face_area, widths}.
nlohmann::json FlatJson(const FlatPolyhedron& flat);

/// Keys sorted, two-space indent, floating point values at 17 significant
/// digits, non-finite values as null.
std::string DumpJson(const nlohmann::json& doc);

/// IoError on failure.
void WriteReport(const nlohmann::json& doc, const std::string& path);

/// "iteration,max_relative_error" rows.
void WriteResidualCsv(const std::vector<IterationRecord>& history,
                      std::ostream& out);
void WriteResidualCsv(const std::vector<IterationRecord>& history,
                      const std::string& path);

}  // namespace facearea
