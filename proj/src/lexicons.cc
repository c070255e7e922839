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

#include "tweetage/lexicons.h"

#include <fstream>
#include <sstream>

#include "tweetage/errors.h"
#include "tweetage/hash.h"

namespace tweetage {

namespace {

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

// Yields (line_number, line) for non-blank, non-comment lines.
template <typename Fn>
void ForEachEntry(std::string_view text, Fn &&fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

std::unordered_set<std::string> ParseWordList(std::string_view text,
                                              std::string_view name) {
  std::unordered_set<std::string> words;
  ForEachEntry(text, [&](std::size_t line_no, std::string_view line) {
    for (char c : line) {
      if (c >= 'A' && c <= 'Z') {
        throw DataError(std::string(name) + " line " + std::to_string(line_no) +
                        ": entries must be lowercase");
      }
    }
    words.emplace(line);
  });
  return words;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open lexicon file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Lexicons Lexicons::Create(const Sources &sources) {
  Lexicons lex;
  lex.stopwords_ = ParseWordList(sources.stopwords, "stopwords");
  lex.pronouns_ = ParseWordList(sources.pronouns, "pronouns");
  for (const std::string &p : lex.pronouns_) {
    if (!lex.stopwords_.contains(p)) {
      throw DataError("pronoun '" + p + "' is not in the stopword list");
    }
  }

  ForEachEntry(sources.contractions, [&](std::size_t line_no, std::string_view line) {
    const std::string where = "contractions line " + std::to_string(line_no);
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError(where + ": expected key<TAB>expansion");
    }
    std::string key(line.substr(0, tab));
    std::string_view value = line.substr(tab + 1);
    if (key.find('\'') == std::string::npos) {
      throw DataError(where + ": key '" + key + "' has no apostrophe");
    }
    for (char c : key) {
      if (c >= 'A' && c <= 'Z') throw DataError(where + ": key must be lowercase");
    }
    if (value.find('\'') != std::string_view::npos) {
      throw DataError(where + ": expansion contains an apostrophe");
    }
    auto words = SplitWords(value);
    if (words.empty()) throw DataError(where + ": empty expansion");
    if (!lex.contractions_.emplace(std::move(key), std::move(words)).second) {
      throw DataError(where + ": duplicate key");
    }
  });

  lex.stopwords_checksum_ = HexDigest(Fnv1a64(sources.stopwords));
  lex.pronouns_checksum_ = HexDigest(Fnv1a64(sources.pronouns));
  lex.contractions_checksum_ = HexDigest(Fnv1a64(sources.contractions));
  return lex;
}

const Lexicons &Lexicons::Bundled() {
  static const Lexicons bundled = Create(BundledSources());
  return bundled;
}

Lexicons Lexicons::Load(const std::string &stopwords_path,
                        const std::string &pronouns_path,
                        const std::string &contractions_path) {
  Sources sources = BundledSources();
  if (!stopwords_path.empty()) sources.stopwords = ReadFile(stopwords_path);
  if (!pronouns_path.empty()) sources.pronouns = ReadFile(pronouns_path);
  if (!contractions_path.empty()) sources.contractions = ReadFile(contractions_path);
  return Create(sources);
}

bool Lexicons::IsStopword(std::string_view word) const {
  return stopwords_.contains(std::string(word));
}

bool Lexicons::IsPronoun(std::string_view word) const {
  return pronouns_.contains(std::string(word));
}

const std::vector<std::string> *Lexicons::Expansion(std::string_view word) const {
  auto it = contractions_.find(std::string(word));
  return it == contractions_.end() ? nullptr : &it->second;
}

}  // namespace tweetage
