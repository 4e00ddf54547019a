// Copyright 2026 The ifkp Authors
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

#ifndef IFKP_CLI_H_
#define IFKP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ifkp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitOracleLimit = 4;

// Entry point behind the `ifkp` binary. args[0] is the program name. The
// result document goes to `out` only once the command has succeeded;
// diagnostics go to `err`. Always returns one of the kExit* codes.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ifkp

#endif  // IFKP_CLI_H_
