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

#include "facearea/input.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "facearea/error.hpp"

namespace facearea {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

}  // namespace

double ParseNumber(std::string_view token) {
  token = Trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
    Fail("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> ParseAreaList(std::string_view list) {
  std::vector<double> out;
  std::size_t item = 0;
  std::size_t pos = 0;
  while (true) {
    const auto comma = list.find(',', pos);
    const auto piece = list.substr(pos, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - pos);
    ++item;
    if (Trim(piece).empty()) {
      Fail("empty item #" + std::to_string(item) + " at position " +
           std::to_string(pos) + " in area list");
    }
    try {
      out.push_back(ParseNumber(piece));
    } catch (const Error& e) {
      Fail("item #" + std::to_string(item) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<double> ParseAreaText(std::string_view text) {
  const std::string_view body = Trim(text);
  if (!body.empty() && body.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      Fail(std::string("JSON: ") + e.what());
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_number()) {
        Fail("JSON element #" + std::to_string(i) + " is not a number");
      }
      out.push_back(doc[i].get<double>());
    }
    if (out.empty()) Fail("no areas in input");
    return out;
  }

  std::vector<double> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!Trim(line).empty()) {
      try {
        out.push_back(ParseNumber(line));
      } catch (const Error& e) {
        Fail("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (out.empty()) Fail("no areas in input");
  return out;
}

std::vector<double> ReadAreaFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseAreaText(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace facearea
