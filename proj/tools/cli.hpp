/*
 * Copyright 2026 The rghw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RGHW_TOOLS_CLI_HPP_
#define RGHW_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rghw::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitCapExceeded = 3;

// Runs the tool on `args` (args[0] is the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rghw::cli

#endif  // RGHW_TOOLS_CLI_HPP_
