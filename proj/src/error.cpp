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

#include "facearea/error.hpp"

namespace facearea {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveArea: return "NonPositiveArea";
    case ErrorCode::NonFiniteArea: return "NonFiniteArea";
    case ErrorCode::UnsupportedCount: return "UnsupportedCount";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InternalGeometryError: return "InternalGeometryError";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::InconsistentVolume: return "InconsistentVolume";
    case ErrorCode::DegenerateCombinatorics: return "DegenerateCombinatorics";
    case ErrorCode::FacetCollapse: return "FacetCollapse";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace facearea
