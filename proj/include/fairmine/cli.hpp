// Copyright 2026 The fairmine Authors.
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

// The fairmine command line: subcommand dispatch, reports and run manifests.

#ifndef FAIRMINE_CLI_HPP_
#define FAIRMINE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fairmine {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitUnresolved = 3;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kVersion = "0.1.0";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairmine

#endif  // FAIRMINE_CLI_HPP_
