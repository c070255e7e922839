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

#include "tweetage/lexer.h"

#include <algorithm>

#include "unicode.h"

namespace tweetage {

namespace {

using unicode::DecodeAt;

// Longest first so the first prefix hit is the longest match.
constexpr std::string_view kEmoticons[] = {
    ">:-(", ">:-)", "O:-)", "0:-)", ":'-(", ":'-)",
    ">:(", ">:)", "O:)", "0:)", ":'(", ":')", ":-)", ":-(", ":-D", ":-P",
    ":-p", ":-O", ":-o", ":-|", ":-/", ":-\\", ":-*", ":-]", ":-[", ":-3",
    ":-S", ";-)", "B-)", "8-)", "</3", "<33", "^_^", "^.^", "-_-", "-.-",
    "o_O", "O_o", "o.O", "O.o", ";_;", "T_T", "T.T",
    ":)", ":(", ":D", ";)", ":P", ":p", ":O", ":o", ":|", ":/", ":\\", ":*",
    ";D", ";P", ";p", ":]", ":[", ":}", ":{", ":>", ":<", ":3", "=)", "=(",
    "=D", "=P", "=]", "=[", "<3", "xD", "XD", "xP", "XP", "x)", "X)", "D:",
    ":$", ":@", "^^", ":S", ":s", ":#", ":X", ":x", "B)", "(:", "):", "(;",
};

bool IsMentionChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool StartsWithNoCase(std::string_view text, std::size_t pos,
                      std::string_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = text[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

// Byte length of the run of non-whitespace code points starting at `pos`.
std::size_t NonWhitespaceRun(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size()) {
    const auto d = DecodeAt(text, i);
    if (d.valid && unicode::IsWhitespace(d.cp)) break;
    i += d.length;
  }
  return i - pos;
}

std::size_t MatchUrl(std::string_view text, std::size_t pos) {
  for (std::string_view scheme : {"https://", "http://", "www."}) {
    if (StartsWithNoCase(text, pos, scheme)) {
      const std::size_t rest = NonWhitespaceRun(text, pos + scheme.size());
      return rest == 0 ? 0 : scheme.size() + rest;
    }
  }
  return 0;
}

std::size_t MatchMention(std::string_view text, std::size_t pos) {
  if (text[pos] != '@') return 0;
  std::size_t n = 0;
  while (n < 15 && pos + 1 + n < text.size() && IsMentionChar(text[pos + 1 + n])) {
    ++n;
  }
  return n == 0 ? 0 : n + 1;
}

std::size_t MatchHashtag(std::string_view text, std::size_t pos) {
  if (text[pos] != '#') return 0;
  std::size_t i = pos + 1;
  while (i < text.size()) {
    const auto d = DecodeAt(text, i);
    if (!d.valid || !(unicode::IsAlnum(d.cp) || d.cp == U'_')) break;
    i += d.length;
  }
  return i == pos + 1 ? 0 : i - pos;
}

std::size_t MatchEmoticon(std::string_view text, std::size_t pos) {
  const std::string_view rest = text.substr(pos);
  for (std::string_view e : kEmoticons) {
    if (rest.starts_with(e)) return e.size();
  }
  return 0;
}

std::size_t MatchEmoji(std::string_view text, std::size_t pos) {
  auto d = DecodeAt(text, pos);
  if (!d.valid || !unicode::IsEmojiBase(d.cp)) return 0;
  std::size_t i = pos + d.length;
  if (unicode::IsRegionalIndicator(d.cp)) {
    if (i < text.size()) {
      const auto next = DecodeAt(text, i);
      if (next.valid && unicode::IsRegionalIndicator(next.cp)) i += next.length;
    }
    return i - pos;
  }
  while (i < text.size()) {
    d = DecodeAt(text, i);
    if (d.valid && unicode::IsEmojiModifier(d.cp)) {
      i += d.length;
      continue;
    }
    if (d.valid && d.cp == unicode::kZeroWidthJoiner && i + d.length < text.size()) {
      const auto joined = DecodeAt(text, i + d.length);
      if (joined.valid && unicode::IsEmojiBase(joined.cp)) {
        i += d.length + joined.length;
        continue;
      }
    }
    break;
  }
  return i - pos;
}

std::size_t MatchWord(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  bool has_alnum = false;
  while (i < text.size()) {
    const auto d = DecodeAt(text, i);
    if (!d.valid) break;
    if (unicode::IsAlnum(d.cp)) {
      has_alnum = true;
    } else if (!unicode::IsApostrophe(d.cp)) {
      break;
    }
    i += d.length;
  }
  return has_alnum ? i - pos : 0;
}

std::size_t MatchWhitespace(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size()) {
    const auto d = DecodeAt(text, i);
    if (!d.valid || !unicode::IsWhitespace(d.cp)) break;
    i += d.length;
  }
  return i - pos;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kUrl: return "URL";
    case TokenKind::kMention: return "MENTION";
    case TokenKind::kHashtag: return "HASHTAG";
    case TokenKind::kEmoticon: return "EMOTICON";
    case TokenKind::kEmoji: return "EMOJI";
    case TokenKind::kWord: return "WORD";
    case TokenKind::kNumber: return "NUMBER";
    case TokenKind::kPunct: return "PUNCT";
    case TokenKind::kWhitespace: return "WHITESPACE";
  }
  return "UNKNOWN";
}

std::vector<Token> Tokenize(std::string_view text) {
  using Matcher = std::size_t (*)(std::string_view, std::size_t);
  struct Rule {
    TokenKind kind;
    Matcher match;
  };
  // Priority order for equal-length candidates.
  static constexpr Rule kRules[] = {
      {TokenKind::kUrl, MatchUrl},
      {TokenKind::kMention, MatchMention},
      {TokenKind::kHashtag, MatchHashtag},
      {TokenKind::kEmoticon, MatchEmoticon},
      {TokenKind::kEmoji, MatchEmoji},
      {TokenKind::kWord, MatchWord},
      {TokenKind::kWhitespace, MatchWhitespace},
  };

  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    TokenKind kind = TokenKind::kPunct;
    std::size_t best = 0;
    for (const Rule &rule : kRules) {
      const std::size_t n = rule.match(text, pos);
      if (n > best) {
        best = n;
        kind = rule.kind;
      }
    }
    if (best == 0) best = DecodeAt(text, pos).length;
    tokens.push_back({kind, std::string(text.substr(pos, best)), pos, pos + best});
    pos += best;
  }
  return tokens;
}

KindCounts CountKinds(std::span<const Token> tokens) {
  KindCounts counts{};
  for (const Token &t : tokens) ++counts[static_cast<std::size_t>(t.kind)];
  return counts;
}

std::span<const std::string_view> EmoticonLexicon() { return kEmoticons; }

}  // namespace tweetage
