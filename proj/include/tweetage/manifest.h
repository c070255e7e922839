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

#ifndef TWEETAGE_MANIFEST_H_
#define TWEETAGE_MANIFEST_H_

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "tweetage/lexicons.h"

namespace tweetage {

inline constexpr std::string_view kToolVersion = "tweetage 1.0.0";

// Everything needed to reproduce a CLI run. Contains no timestamps, so two
// identical runs produce identical manifests.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> flags;  // resolved values, defaults included
  std::uint64_t seed = 0;
  std::map<std::string, std::string> lexicon_checksums;
  std::map<std::string, std::string> input_checksums;  // path -> FNV-1a-64 hex
  std::string tool_version{kToolVersion};

  void RecordLexicons(const Lexicons &lexicons);
  // Checksums the file at `path`; throws DataError if unreadable.
  void RecordInput(const std::string &path);

  nlohmann::json ToJson() const;
};

}  // namespace tweetage

#endif  // TWEETAGE_MANIFEST_H_
