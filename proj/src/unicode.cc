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

#include "unicode.h"

#include <algorithm>
#include <array>
#include <utility>

namespace tweetage::unicode {

namespace {

using Range = std::pair<char32_t, char32_t>;

// Non-ASCII code points that never belong to a word. Sorted, disjoint.
constexpr std::array<Range, 26> kNonWordRanges = {{
    {0x0080, 0x00A9},
    {0x00AB, 0x00B4},
    {0x00B6, 0x00B9},
    {0x00BB, 0x00BF},
    {0x00D7, 0x00D7},
    {0x00F7, 0x00F7},
    {0x037E, 0x037E},
    {0x2000, 0x206F},  // general punctuation, incl. ZWJ
    {0x20A0, 0x20CF},  // currency
    {0x2190, 0x2BFF},  // arrows, math, technical, shapes, dingbats, ...
    {0x2E00, 0x2E7F},
    {0x3000, 0x303F},
    {0xFE00, 0xFE1F},  // variation selectors, vertical forms
    {0xFE30, 0xFE6F},
    {0xFEFF, 0xFEFF},
    {0xFF01, 0xFF0F},
    {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},
    {0xFFF0, 0xFFFF},
    {0x1F000, 0x1FAFF},
    {0x1FB00, 0x1FBFF},
    {0xE0000, 0xE007F},  // tags
    {0xE0100, 0xE01EF},  // variation selectors supplement
    {0xF0000, 0xFFFFF},
    {0x100000, 0x10FFFF},
}};

constexpr std::array<Range, 9> kEmojiRanges = {{
    {0x2600, 0x27BF},    // misc symbols, dingbats
    {0x2B50, 0x2B50},
    {0x2B55, 0x2B55},
    {0x1F1E6, 0x1F1FF},  // regional indicators
    {0x1F300, 0x1F5FF},  // misc symbols & pictographs
    {0x1F600, 0x1F64F},  // emoticons
    {0x1F680, 0x1F6FF},  // transport & map
    {0x1F900, 0x1F9FF},  // supplemental symbols & pictographs
    {0x1FA70, 0x1FAFF},  // symbols & pictographs extended-A
}};

template <std::size_t N>
bool InRanges(const std::array<Range, N> &ranges, char32_t cp) {
  auto it = std::upper_bound(
      ranges.begin(), ranges.end(), cp,
      [](char32_t value, const Range &r) { return value < r.first; });
  if (it == ranges.begin()) return false;
  --it;
  return cp <= it->second;
}

}  // namespace

Decoded DecodeAt(std::string_view text, std::size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return {lead, 1, true};

  std::size_t length;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    length = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    return {lead, 1, false};
  }
  if (pos + length > text.size()) return {lead, 1, false};
  for (std::size_t i = 1; i < length; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) return {lead, 1, false};
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {lead, 1, false};
  }
  return {cp, length, true};
}

bool IsWhitespace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsApostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool IsAlnum(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9');
  }
  return !InRanges(kNonWordRanges, cp) && !IsWhitespace(cp);
}

bool IsEmojiBase(char32_t cp) { return InRanges(kEmojiRanges, cp); }

bool IsRegionalIndicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

bool IsEmojiModifier(char32_t cp) {
  return cp == 0xFE0E || cp == 0xFE0F || cp == 0x20E3 ||
         (cp >= 0x1F3FB && cp <= 0x1F3FF) || (cp >= 0xE0020 && cp <= 0xE007F);
}

}  // namespace tweetage::unicode
