// Copyright 2026 The Regulith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regulith/design_io.h"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace regulith {

namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  if (line.find(',') != std::string::npos) {
    std::istringstream in(line);
    std::string piece;
    while (std::getline(in, piece, ',')) fields.push_back(Trim(piece));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
  } else {
    std::istringstream in(line);
    std::string piece;
    while (in >> piece) fields.push_back(piece);
  }
  return fields;
}

std::optional<int> ParseLevel(const std::string& field) {
  if (field == "+1" || field == "1" || field == "+") return 1;
  if (field == "-1" || field == "0" || field == "-") return -1;
  return std::nullopt;
}

}  // namespace

DesignParseError::DesignParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

Fraction DesignTable::ToFraction() const {
  if (runs.empty()) throw DesignParseError(0, "design has no runs");
  return Fraction::FromPoints(factors(), runs);
}

DesignTable ParseDesign(std::istream& in) {
  DesignTable table;
  std::string raw;
  int line_no = 0;
  std::size_t width = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = SplitFields(line);

    std::vector<int> levels;
    bool numeric = true;
    for (const auto& field : fields) {
      const auto level = ParseLevel(field);
      if (!level) {
        numeric = false;
        break;
      }
      levels.push_back(*level);
    }
    if (!numeric) {
      if (!seen_content) {
        table.header = fields;
        width = fields.size();
        seen_content = true;
        continue;
      }
      throw DesignParseError(line_no, "expected levels -1/+1, -/+ or 0/1 in '" +
                                          line + "'");
    }
    seen_content = true;
    if (width == 0) width = levels.size();
    if (levels.size() != width) {
      throw DesignParseError(line_no, "expected " + std::to_string(width) +
                                          " fields, found " +
                                          std::to_string(levels.size()));
    }
    if (width > static_cast<std::size_t>(kMaxFactors)) {
      throw DesignParseError(line_no, "at most " + std::to_string(kMaxFactors) +
                                          " factors are supported, found " +
                                          std::to_string(width));
    }
    table.runs.push_back(Point::FromLevels(std::span<const int>(levels)));
  }
  if (table.runs.empty()) throw DesignParseError(0, "design has no runs");
  return table;
}

DesignTable ReadDesignFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DesignParseError(0, "cannot open '" + path + "'");
  return ParseDesign(in);
}

void WriteDesign(std::ostream& out, const DesignTable& table) {
  auto join = [&](const auto& items, auto&& format) {
    bool first = true;
    for (const auto& item : items) {
      if (!first) out << ',';
      first = false;
      out << format(item);
    }
    out << '\n';
  };
  if (!table.header.empty()) {
    join(table.header, [](const std::string& s) { return s; });
  }
  for (const Point& run : table.runs) {
    join(run.Levels(), [](int v) { return v; });
  }
}

}  // namespace regulith
