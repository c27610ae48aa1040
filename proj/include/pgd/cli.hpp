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

/// @file cli.hpp
/// Entry point of the pgd command-line tool, callable in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgd::cli {

/// Process exit codes.
enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the tool on args (args[0] is the program name). Artifacts and
/// reports go to out (or to --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgd::cli
