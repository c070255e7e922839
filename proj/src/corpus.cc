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

#include "tweetage/corpus.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tweetage/errors.h"
#include "tweetage/random.h"
#include "tweetage/tsv.h"

namespace tweetage {

namespace {

std::string Where(std::string_view source, std::size_t line_no) {
  return std::string(source) + ":" + std::to_string(line_no) + ": ";
}

std::string ListIds(const std::vector<std::string> &ids, std::size_t limit = 10) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > limit) out += " (and " + std::to_string(ids.size() - limit) + " more)";
  return out;
}

std::string LabelCell(const Label &label) {
  return label ? std::to_string(*label) : std::string();
}

}  // namespace

Corpus ParseCorpus(std::string_view content, std::string_view source,
                   bool expect_labels) {
  const auto lines = tsv::SplitLines(content);
  if (lines.empty()) throw DataError(std::string(source) + ": empty file, missing header");

  std::size_t columns;
  if (lines[0] == kCorpusHeader) {
    columns = 3;
  } else if (lines[0] == "tweet_id\ttext") {
    columns = 2;
  } else {
    throw DataError(Where(source, 1) + "bad header, expected 'tweet_id<TAB>text[<TAB>label]'");
  }
  if (expect_labels && columns == 2) {
    throw DataError(Where(source, 1) + "labels expected but header has no label column");
  }

  Corpus corpus;
  corpus.provenance = std::string(source);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = tsv::SplitFields(lines[i]);
    if (fields.size() != columns) {
      throw DataError(Where(source, line_no) + "malformed row: expected " +
                      std::to_string(columns) + " fields, found " +
                      std::to_string(fields.size()));
    }
    LabeledTweet tweet;
    tweet.id = tsv::Unescape(fields[0]);
    tweet.text = tsv::Unescape(fields[1]);
    if (tweet.id.empty()) throw DataError(Where(source, line_no) + "empty tweet id");
    if (columns == 3 && !fields[2].empty()) {
      if (fields[2] == "0") {
        tweet.label = 0;
      } else if (fields[2] == "1") {
        tweet.label = 1;
      } else {
        throw DataError(Where(source, line_no) + "invalid label '" +
                        std::string(fields[2]) + "' (must be 0 or 1)");
      }
    }
    if (expect_labels && !tweet.label) {
      throw DataError(Where(source, line_no) + "missing label for id " + tweet.id);
    }
    if (!seen.insert(tweet.id).second) {
      throw DataError(Where(source, line_no) + "duplicate tweet id " + tweet.id);
    }
    corpus.records.push_back(std::move(tweet));
  }
  return corpus;
}

Corpus LoadCorpus(const std::string &path, bool expect_labels) {
  return ParseCorpus(tsv::ReadFile(path), path, expect_labels);
}

std::string FormatCorpus(const Corpus &corpus) {
  std::string out(kCorpusHeader);
  out.push_back('\n');
  for (const LabeledTweet &t : corpus.records) {
    out += tsv::Escape(t.id);
    out.push_back('\t');
    out += tsv::Escape(t.text);
    out.push_back('\t');
    out += LabelCell(t.label);
    out.push_back('\n');
  }
  return out;
}

void SaveCorpus(const Corpus &corpus, const std::string &path) {
  tsv::WriteFile(path, FormatCorpus(corpus));
}

Corpus Combine(const Corpus &a, const Corpus &b) {
  std::unordered_set<std::string_view> ids;
  for (const auto &t : a.records) ids.insert(t.id);
  std::vector<std::string> collisions;
  for (const auto &t : b.records) {
    if (ids.contains(t.id)) collisions.push_back(t.id);
  }
  if (!collisions.empty()) {
    throw DataError("cannot combine corpora: " + std::to_string(collisions.size()) +
                    " colliding id(s): " + ListIds(collisions));
  }
  Corpus out;
  out.provenance = a.provenance + " + " + b.provenance;
  out.records = a.records;
  out.records.insert(out.records.end(), b.records.begin(), b.records.end());
  return out;
}

ClassDistribution CountClasses(const Corpus &corpus) {
  ClassDistribution dist;
  for (const auto &t : corpus.records) {
    if (!t.label) {
      ++dist.unlabeled;
    } else if (*t.label == 1) {
      ++dist.positive;
    } else {
      ++dist.negative;
    }
  }
  return dist;
}

std::pair<Corpus, Corpus> StratifiedSplit(const Corpus &corpus, double fraction,
                                          std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw DataError("split fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const Label &label = corpus.records[i].label;
    if (!label) {
      throw DataError("cannot stratify: record " + corpus.records[i].id + " is unlabeled");
    }
    by_class[*label].push_back(i);
  }

  Rng rng(seed);
  std::vector<bool> in_first(corpus.records.size(), false);
  for (int label = 0; label < 2; ++label) {
    auto &members = by_class[label];
    if (members.size() < 2) {
      throw DataError("cannot stratify: class " + std::to_string(label) + " has " +
                      std::to_string(members.size()) + " member(s), need at least 2");
    }
    // The epsilon keeps products like 0.7 * 10 from flooring to 6.
    const auto take = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(members.size()) + 1e-9));
    if (take == 0 || take == members.size()) {
      throw DataError("cannot stratify: fraction " + std::to_string(fraction) +
                      " leaves class " + std::to_string(label) + " empty on one side");
    }
    rng.Shuffle(std::span(members));
    for (std::size_t k = 0; k < take; ++k) in_first[members[k]] = true;
  }

  std::pair<Corpus, Corpus> parts;
  parts.first.provenance = corpus.provenance + " [split part 1]";
  parts.second.provenance = corpus.provenance + " [split part 2]";
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    (in_first[i] ? parts.first : parts.second).records.push_back(corpus.records[i]);
  }
  return parts;
}

std::string FormatNormalized(const Corpus &corpus, const NormalizationConfig &config,
                             const Lexicons &lexicons) {
  std::string out(kCorpusHeader);
  out.push_back('\n');
  for (const LabeledTweet &t : corpus.records) {
    out += tsv::Escape(t.id);
    out.push_back('\t');
    out += Render(Normalize(t.text, config, lexicons));
    out.push_back('\t');
    out += LabelCell(t.label);
    out.push_back('\n');
  }
  return out;
}

void ExportNormalized(const Corpus &corpus, const NormalizationConfig &config,
                      const Lexicons &lexicons, const std::string &path) {
  tsv::WriteFile(path, FormatNormalized(corpus, config, lexicons));
}

}  // namespace tweetage
