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

#include <string>
#include <string_view>
#include <vector>

namespace facearea {

/// One real number, whole string. ParseError otherwise.
double ParseNumber(std::string_view token);

/// "a,b,c". Empty items are a ParseError naming the item position.
std::vector<double> ParseAreaList(std::string_view list);

/// Either a JSON array of numbers, or one number per line with `#` starting
/// a comment. Errors carry the line number.
std::vector<double> ParseAreaText(std::string_view text);

/// Reads and parses a file; IoError if it cannot be opened.
std::vector<double> ReadAreaFile(const std::string& path);

}  // namespace facearea
