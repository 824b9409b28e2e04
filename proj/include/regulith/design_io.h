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

#ifndef REGULITH_DESIGN_IO_H_
#define REGULITH_DESIGN_IO_H_

// Design files: one run per line, m fields separated by commas (or by
// whitespace when a line has no comma). Levels are written -1/+1, -/+ or
// 0/1 with 0 read as -1. The first non-blank line may be a header; blank
// lines and lines starting with '#' are skipped.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "regulith/polynomial.h"

namespace regulith {

class DesignParseError : public std::runtime_error {
 public:
  DesignParseError(int line, const std::string& message);
  // 1-based line number, 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

struct DesignTable {
  std::vector<std::string> header;  // empty when the file has none
  std::vector<Point> runs;          // in file order, repeats kept

  int factors() const { return runs.empty() ? 0 : runs.front().factors(); }
  Fraction ToFraction() const;
};

DesignTable ParseDesign(std::istream& in);
DesignTable ReadDesignFile(const std::string& path);

// Writes the header (when non-empty) and one line of -1/1 values per run.
void WriteDesign(std::ostream& out, const DesignTable& table);

}  // namespace regulith

#endif  // REGULITH_DESIGN_IO_H_
