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

#ifndef TWEETAGE_TSV_H_
#define TWEETAGE_TSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace tweetage::tsv {

// Field escaping: backslash, tab, newline and carriage return become
// "\\", "\t", "\n", "\r".
std::string Escape(std::string_view field);

// Inverse of Escape. An unknown escape or a trailing lone backslash is kept
// verbatim.
std::string Unescape(std::string_view field);

// Splits on '\t' without unescaping.
std::vector<std::string_view> SplitFields(std::string_view line);

// Splits file content into lines. A trailing newline does not produce an
// empty final line; a trailing '\r' on each line is removed.
std::vector<std::string_view> SplitLines(std::string_view content);

// Reads a whole file; throws DataError on failure.
std::string ReadFile(const std::string &path);

// Writes `content` to `path`; throws DataError on failure.
void WriteFile(const std::string &path, std::string_view content);

}  // namespace tweetage::tsv

#endif  // TWEETAGE_TSV_H_
