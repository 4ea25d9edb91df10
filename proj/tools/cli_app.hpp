// Copyright 2026 The Authors.
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

#ifndef RAINBOW_TOOLS_CLI_APP_HPP_
#define RAINBOW_TOOLS_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rainbow::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // bound or validity failure
inline constexpr int kInputError = 2;
inline constexpr int kGenerationFailed = 3;

// Runs one command line (without the program name). All output goes to
// `out` and `err`; files named by -o are written directly.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rainbow::cli

#endif  // RAINBOW_TOOLS_CLI_APP_HPP_
