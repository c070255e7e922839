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

#ifndef TWEETAGE_ERRORS_H_
#define TWEETAGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tweetage {

// Raised for malformed or inconsistent input data: bad rows, duplicate ids,
// invalid labels, unreadable files. The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

// Raised when a numeric routine cannot continue (e.g. non-finite loss).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace tweetage

#endif  // TWEETAGE_ERRORS_H_
