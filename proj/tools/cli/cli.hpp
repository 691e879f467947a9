// Copyright 2026 The graphbell Authors.
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

#ifndef GRAPHBELL_TOOLS_CLI_CLI_HPP_
#define GRAPHBELL_TOOLS_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace graphbell::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // table --check mismatch or a failed verify check
  kNoViolation = 2,
  kCapExceeded = 3,
  kParseError = 4,
  kInternalError = 5,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphbell::cli

#endif  // GRAPHBELL_TOOLS_CLI_CLI_HPP_
