// Copyright 2026 The pgame Authors
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

#ifndef PGAME_TOOLS_CLI_HPP
#define PGAME_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pgame::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitDegenerateArgmax = 3;

// Runs one command line (without the program name), writing the report to
// `out` and diagnostics to `err`. Commands: analyze, cycles, mixed, nash,
// coco, bayes.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pgame::cli

#endif  // PGAME_TOOLS_CLI_HPP
