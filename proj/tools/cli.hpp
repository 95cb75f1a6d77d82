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

#ifndef HYPERRECON_TOOLS_CLI_HPP_
#define HYPERRECON_TOOLS_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperrecon::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one command line. Returns 0 on success, 1 on data or validation
// errors, 2 on usage errors; errors go to `err` as one line of JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace hyperrecon::cli

#endif  // HYPERRECON_TOOLS_CLI_HPP_
