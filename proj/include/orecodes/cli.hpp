/*
   Copyright 2026 the orecodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orecodes {

/// Parses and executes one command (args exclude the program name) and
/// writes results to out, diagnostics to err.  Returns the process exit
/// status: 0 success, 1 semantic negative (e.g. not a codeword),
/// 2 usage or parse error, 3 unavailable operation or exceeded budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orecodes
