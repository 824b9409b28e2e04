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

#ifndef REGULITH_CLI_H_
#define REGULITH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace regulith {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEmpty = 1;  // a search command found nothing
inline constexpr int kExitInputError = 2;

// Runs the command line tool. args[0] is the program name.
//
//   analyze FILE
//   subfractions FILE --size N
//   decompose FILE (--size N | --greedy)
//   pb (--cols A,B,F,H,I | --classify | --oa-catalog)
//
// Every command takes --format text|json (default text).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace regulith

#endif  // REGULITH_CLI_H_
