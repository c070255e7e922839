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

#ifndef TWEETAGE_LEXER_H_
#define TWEETAGE_LEXER_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tweetage {

enum class TokenKind {
  kUrl,
  kMention,
  kHashtag,
  kEmoticon,
  kEmoji,
  kWord,
  kNumber,  // reserved; numerals are lexed as kWord
  kPunct,
  kWhitespace,
};

inline constexpr std::size_t kNumTokenKinds = 9;

// Upper-case name used in diagnostics and `lex --debug` output.
std::string_view TokenKindName(TokenKind kind);

// A lexed span of tweet text. `text` is a copy of input[start, end).
struct Token {
  TokenKind kind;
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token &) const = default;
};

// Splits `text` (UTF-8) into a lossless token stream. At every position the
// longest candidate wins; ties go to the earlier rule in this order:
//
//   URL       "http://" | "https://" (scheme case-insensitive) or "www.",
//             followed by at least one non-whitespace code point; the URL
//             runs to the next whitespace.
//   MENTION   "@" + 1..15 of [A-Za-z0-9_].
//   HASHTAG   "#" + 1+ letters, digits or underscores.
//   EMOTICON  longest entry of the bundled ASCII emoticon list.
//   EMOJI     a pictographic code point with its modifiers, variation
//             selectors and ZWJ continuations; two regional indicators form
//             a single flag token.
//   WORD      maximal run of letters, digits and apostrophes (U+0027,
//             U+2019) holding at least one letter or digit.
//   WHITESPACE maximal run of Unicode whitespace.
//   PUNCT     any other single code point, or a single invalid byte.
//
// Never fails: concatenating the token texts reproduces `text` exactly.
std::vector<Token> Tokenize(std::string_view text);

using KindCounts = std::array<std::size_t, kNumTokenKinds>;

// Per-kind histogram; the entries sum to tokens.size().
KindCounts CountKinds(std::span<const Token> tokens);

inline std::size_t KindCount(const KindCounts &counts, TokenKind kind) {
  return counts[static_cast<std::size_t>(kind)];
}

// The bundled emoticon list, longest entries first.
std::span<const std::string_view> EmoticonLexicon();

}  // namespace tweetage

#endif  // TWEETAGE_LEXER_H_
