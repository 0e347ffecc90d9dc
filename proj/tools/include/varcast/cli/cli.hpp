// Copyright 2026 The varcast Authors
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


#ifndef VARCAST_CLI_CLI_HPP_
#define VARCAST_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace varcast::cli {

/// Runs one invocation; `args` excludes the program name. Returns the
/// process exit status (0, 2 for usage errors, otherwise the Errc value).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit-code table shown at the bottom of --help.
std::string exit_code_table();

}  // namespace varcast::cli

#endif  // VARCAST_CLI_CLI_HPP_
