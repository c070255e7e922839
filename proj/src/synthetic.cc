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

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tweetage/corpus.h"
#include "tweetage/random.h"

namespace tweetage {

namespace {

// Self-reports of the author's own exact age.
constexpr std::string_view kPositiveTemplates[] = {
    "I turned {age} today {emoji}",
    "Finally {age}!! officially legal {tag}",
    "Can't believe I'm {age} years old today",
    "It's my {ord} birthday and I'm feeling blessed {emoji}",
    "Today I am {age} years young {url}",
    "{age} today and loving it {tag}",
    "Officially {age} as of today! Thank you all for the bday wishes {emoticon}",
    "Woke up {age} years old {emoticon}",
    "Celebrating my {ord} bday with @{friend} {emoji}",
    "Just turned {age}, feeling old already {emoticon}",
    "Guess who's {age} now? Me!! {tag}",
    "Entering my {age}s era today, turned {age} {emoji}",
    "I’m {age} today and honestly still feel {young}",
    "New age unlocked: {age} {emoji} {tag}",
};

// Other people's birthdays, or birthdays without an age.
constexpr std::string_view kNegativeTemplates[] = {
    "Happy birthday to my {rel}! Love you {emoji}",
    "My {rel} turns {age} today {tag}",
    "Happy {ord} birthday @{friend} {emoji}",
    "Birthday party tonight, who's coming? {url}",
    "Can't wait for my {rel}'s birthday next week",
    "Shoutout to @{friend} on their {ord}! {tag}",
    "Wishing my {rel} a wonderful birthday {emoticon}",
    "Cake for breakfast because it's my {rel}'s bday",
    "Birthdays are overrated honestly {emoticon}",
    "Happy bday {rel}, you don't look a day over {age} {emoji}",
    "Planning a surprise party for my {rel} {tag}",
    "My {rel} is {age} and still acts like a kid {emoticon}",
    "Throwback to my {rel}'s {ord} birthday {url}",
    "Someone at work brought birthday cupcakes {emoji}",
};

constexpr std::string_view kRelations[] = {
    "grandma", "grandpa", "mom", "dad", "sister", "brother", "bestie",
    "son", "daughter", "cousin", "aunt", "uncle", "niece", "nephew",
    "husband", "wife", "boyfriend", "girlfriend", "roommate", "boss",
};
constexpr std::string_view kFriends[] = {
    "mia_rose", "jdoe", "sam_k", "alex99", "taylorswift13", "bigmike", "the_real_jo",
    "katie_b", "notbrian", "lulu",
};
constexpr std::string_view kTags[] = {
    "#blessed", "#birthday", "#bday", "#21", "#tbt", "#party", "#mood", "#CakeDay",
};
constexpr std::string_view kEmoji[] = {
    "\U0001F382", "\U0001F389", "\U0001F973", "\U0001F60D", "\U0001F62D",
    "❤️", "\U0001F388", "\U0001F44D\U0001F3FD",
};
constexpr std::string_view kEmoticons[] = {":)", ":D", "<3", ";)", "xD", ":-)"};
constexpr std::string_view kUrls[] = {
    "https://t.co/Ab1", "https://t.co/x9QzP", "http://bit.ly/2bday", "www.example.com/party",
};
constexpr std::string_view kYoung[] = {"young", "sixteen", "like a teenager", "ageless"};

std::string Ordinal(int n) {
  const int mod100 = n % 100;
  const char *suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
    }
  }
  return std::to_string(n) + suffix;
}

std::string Fill(std::string_view tmpl, Rng &rng) {
  const int age = 13 + static_cast<int>(rng.Below(58));
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out += tmpl.substr(pos);
      break;
    }
    out += tmpl.substr(pos, open - pos);
    const std::size_t close = tmpl.find('}', open);
    const std::string_view key = tmpl.substr(open + 1, close - open - 1);
    if (key == "age") {
      out += std::to_string(age);
    } else if (key == "ord") {
      out += Ordinal(age);
    } else if (key == "rel") {
      out += rng.Pick(kRelations);
    } else if (key == "friend") {
      out += rng.Pick(kFriends);
    } else if (key == "tag") {
      out += rng.Pick(kTags);
    } else if (key == "emoji") {
      out += rng.Pick(kEmoji);
    } else if (key == "emoticon") {
      out += rng.Pick(kEmoticons);
    } else if (key == "url") {
      out += rng.Pick(kUrls);
    } else if (key == "young") {
      out += rng.Pick(kYoung);
    }
    pos = close + 1;
  }
  return out;
}

}  // namespace

Corpus GenerateSynthetic(std::size_t n, double positive_ratio, std::uint64_t seed,
                         std::string_view id_prefix) {
  if (n < 2) throw std::invalid_argument("synthetic corpus needs n >= 2");
  if (!(positive_ratio >= 0.0 && positive_ratio <= 1.0)) {
    throw std::invalid_argument("positive ratio must lie in [0, 1]");
  }
  const auto n_positive =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * positive_ratio));

  Rng rng(seed);
  std::vector<int> labels(n, 0);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n_positive), 1);
  rng.Shuffle(std::span(labels));

  Corpus corpus;
  corpus.provenance = "synthetic(n=" + std::to_string(n) + ", seed=" + std::to_string(seed) + ")";
  corpus.records.reserve(n);
  char id[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(id, sizeof(id), "-%06zu", i + 1);
    const std::string_view tmpl = labels[i] == 1 ? rng.Pick(kPositiveTemplates)
                                                 : rng.Pick(kNegativeTemplates);
    corpus.records.push_back({std::string(id_prefix) + id, Fill(tmpl, rng), labels[i]});
  }
  return corpus;
}

}  // namespace tweetage
