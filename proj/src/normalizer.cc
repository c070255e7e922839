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

#include "tweetage/normalizer.h"

#include "tweetage/lexer.h"

namespace tweetage {

namespace {

constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";

std::string FoldWord(std::string_view text, bool lowercase) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == kRightSingleQuote) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    char c = text[i];
    if (lowercase && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

bool Dropped(TokenKind kind, const NormalizationConfig &config) {
  switch (kind) {
    case TokenKind::kUrl: return config.strip_urls;
    case TokenKind::kMention: return config.strip_mentions;
    case TokenKind::kHashtag: return config.strip_hashtags;
    case TokenKind::kEmoticon:
    case TokenKind::kEmoji: return config.strip_emoticons_emoji;
    case TokenKind::kPunct:
    case TokenKind::kWhitespace: return true;
    case TokenKind::kWord:
    case TokenKind::kNumber: return false;
  }
  return true;
}

}  // namespace

std::string_view VariantName(PronounVariant variant) {
  return variant == PronounVariant::kKeepPronouns ? "keep" : "remove";
}

std::optional<PronounVariant> ParseVariant(std::string_view name) {
  if (name == "keep") return PronounVariant::kKeepPronouns;
  if (name == "remove") return PronounVariant::kRemovePronouns;
  return std::nullopt;
}

std::vector<std::string> ExpandContractions(std::string_view word,
                                            const Lexicons &lexicons) {
  if (const auto *expansion = lexicons.Expansion(word)) return *expansion;

  std::string stem(word);
  if (stem.ends_with("'s")) stem.resize(stem.size() - 2);
  std::erase(stem, '\'');
  if (stem.empty()) return {};
  return {std::move(stem)};
}

std::string RemoveSpecialChars(std::string_view word) {
  std::string out;
  for (char c : word) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> RemoveStopwords(std::span<const std::string> words,
                                         PronounVariant variant,
                                         const Lexicons &lexicons) {
  std::vector<std::string> kept;
  for (const std::string &w : words) {
    if (!lexicons.IsStopword(w)) {
      kept.push_back(w);
    } else if (variant == PronounVariant::kKeepPronouns && lexicons.IsPronoun(w)) {
      kept.push_back(w);
    }
  }
  return kept;
}

std::vector<std::string> Normalize(std::string_view text,
                                   const NormalizationConfig &config,
                                   const Lexicons &lexicons) {
  std::vector<std::string> words;
  for (const Token &token : Tokenize(text)) {
    if (Dropped(token.kind, config)) continue;

    std::string folded = FoldWord(token.text, config.lowercase);
    std::vector<std::string> pieces;
    if (config.expand_contractions) {
      pieces = ExpandContractions(folded, lexicons);
    } else {
      pieces.push_back(std::move(folded));
    }

    for (std::string &piece : pieces) {
      if (config.remove_special_chars) piece = RemoveSpecialChars(piece);
      if (!piece.empty()) words.push_back(std::move(piece));
    }
  }
  if (!config.remove_stopwords) return words;
  return RemoveStopwords(words, config.variant, lexicons);
}

std::string Render(std::span<const std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace tweetage
