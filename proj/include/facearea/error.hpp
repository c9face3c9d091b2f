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

#include <stdexcept>
#include <string>
#include <string_view>

namespace facearea {

enum class ErrorCode {
  EmptyInput,
  NonPositiveArea,
  NonFiniteArea,
  UnsupportedCount,
  NotFlat,
  RadiusTooSmall,
  NoConvergence,
  InternalGeometryError,
  BadK,
  LiftFailed,
  UnboundedRegion,
  EmptyInterior,
  InconsistentVolume,
  DegenerateCombinatorics,
  FacetCollapse,
  ParseError,
  IoError,
};

std::string_view ToString(ErrorCode code);

/**
 * Every failure raised by the library carries one of the codes above so the
 * command line front end can map it onto a process exit status.
 */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace facearea
