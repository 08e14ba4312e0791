// Copyright 2026 The addcomb Authors
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

#ifndef ADDCOMB_TOOLS_CLI_H_
#define ADDCOMB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace addcomb::cli {

inline constexpr const char* kReportSchema = "addcomb.report/1";

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitTimeout = 4;

// Runs one command line (without the program name). Reports and set files
// go to `out` unless --out names a file; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addcomb::cli

#endif  // ADDCOMB_TOOLS_CLI_H_
