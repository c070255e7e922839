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

#ifndef TWEETAGE_SRC_UNICODE_H_
#define TWEETAGE_SRC_UNICODE_H_

#include <cstddef>
#include <string_view>

namespace tweetage::unicode {

struct Decoded {
  char32_t cp = 0;
  std::size_t length = 1;  // bytes consumed, always >= 1
  bool valid = false;
};

// Decodes one UTF-8 sequence at `pos`. Overlong forms, surrogates, values
// above U+10FFFF and truncated sequences decode as a single invalid byte.
Decoded DecodeAt(std::string_view text, std::size_t pos);

bool IsWhitespace(char32_t cp);
bool IsApostrophe(char32_t cp);

// Letters and digits in the loose sense the lexer needs: ASCII alphanumerics
// plus any non-ASCII code point that is not whitespace, punctuation, a
// symbol, a control or an emoji.
bool IsAlnum(char32_t cp);

bool IsEmojiBase(char32_t cp);
bool IsRegionalIndicator(char32_t cp);
// Skin tones, variation selectors, keycap and tag characters.
bool IsEmojiModifier(char32_t cp);
inline constexpr char32_t kZeroWidthJoiner = 0x200D;

}  // namespace tweetage::unicode

#endif  // TWEETAGE_SRC_UNICODE_H_
