// Copyright 2026 The tweetage Authors.
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

#ifndef TWEETAGE_CLI_H_
#define TWEETAGE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tweetage {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDataError = 2;

// Entry point behind the `tweetage` executable. `args` excludes the program
// name. Data goes to `out`, diagnostics and the run manifest (unless
// --manifest names a file) to `err`.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tweetage

#endif  // TWEETAGE_CLI_H_
