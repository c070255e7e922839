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

#include "tweetage/manifest.h"

#include "tweetage/hash.h"

namespace tweetage {

void RunManifest::RecordLexicons(const Lexicons &lexicons) {
  lexicon_checksums["stopwords"] = lexicons.stopwords_checksum();
  lexicon_checksums["pronouns"] = lexicons.pronouns_checksum();
  lexicon_checksums["contractions"] = lexicons.contractions_checksum();
}

void RunManifest::RecordInput(const std::string &path) {
  input_checksums[path] = FileChecksum(path);
}

nlohmann::json RunManifest::ToJson() const {
  return nlohmann::json{
      {"subcommand", subcommand},
      {"flags", flags},
      {"seed", seed},
      {"lexicon_checksums", lexicon_checksums},
      {"input_checksums", input_checksums},
      {"tool_version", tool_version},
  };
}

}  // namespace tweetage
