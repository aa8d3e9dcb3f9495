// Copyright 2026 The dskernel Authors
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

#ifndef DSKERNEL_TOOLS_CLI_HPP_
#define DSKERNEL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dskernel::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitVerifyFailed = 3,
  kExitIo = 4,
};

// Runs the dskernel command line. `args` excludes the program name. Graph and
// report output that is not redirected with --out goes to `out`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace dskernel::cli

#endif  // DSKERNEL_TOOLS_CLI_HPP_
