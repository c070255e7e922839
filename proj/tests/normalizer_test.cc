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

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "test_support.h"
#include "tweetage/corpus.h"
#include "tweetage/errors.h"
#include "tweetage/lexicons.h"

namespace tweetage {
namespace {

using Words = std::vector<std::string>;

const Lexicons &Lex() { return Lexicons::Bundled(); }

const NormalizationConfig kKeep = NormalizationConfig::ForVariant(PronounVariant::kKeepPronouns);
const NormalizationConfig kRemove =
    NormalizationConfig::ForVariant(PronounVariant::kRemovePronouns);

bool IsSubsequence(const Words &small, const Words &big) {
  std::size_t j = 0;
  for (const auto &w : big) {
    if (j < small.size() && small[j] == w) ++j;
  }
  return j == small.size();
}

TEST(LexiconsTest, BundledListsHaveExpectedShape) {
  EXPECT_EQ(Lex().stopwords().size(), 179u);
  EXPECT_EQ(Lex().pronouns().size(), 29u);
  EXPECT_GE(Lex().contractions().size(), 120u);
  for (const auto &p : Lex().pronouns()) EXPECT_TRUE(Lex().IsStopword(p)) << p;
  for (const auto &[key, value] : Lex().contractions()) {
    EXPECT_NE(key.find('\''), std::string::npos) << key;
    for (char c : key) EXPECT_FALSE(c >= 'A' && c <= 'Z') << key;
    for (const auto &w : value) EXPECT_EQ(w.find('\''), std::string::npos) << key;
  }
}

TEST(LexiconsTest, RejectsPronounOutsideStopwords) {
  auto sources = Lexicons::BundledSources();
  sources.pronouns += "yall\n";
  EXPECT_THROW(Lexicons::Create(sources), DataError);
}

TEST(LexiconsTest, RejectsBadContractionRows) {
  auto sources = Lexicons::BundledSources();
  sources.contractions = "dont\tdo not\n";
  EXPECT_THROW(Lexicons::Create(sources), DataError);
  sources.contractions = "don't\tdo n't\n";
  EXPECT_THROW(Lexicons::Create(sources), DataError);
  sources.contractions = "Don't\tdo not\n";
  EXPECT_THROW(Lexicons::Create(sources), DataError);
  sources.contractions = "don't do not\n";
  EXPECT_THROW(Lexicons::Create(sources), DataError);
}

TEST(LexiconsTest, LoadOverridesOneFile) {
  testing::TempDir dir("lex");

  {
    std::ofstream(dir.File("stop.txt")) << "# tiny list\nto\nme\ni\n";
    std::ofstream(dir.File("pron.txt")) << "me\n";
  }
  const Lexicons lex = Lexicons::Load(dir.File("stop.txt"), dir.File("pron.txt"), "");
  EXPECT_EQ(lex.stopwords().size(), 3u);
  EXPECT_NE(lex.stopwords_checksum(), Lex().stopwords_checksum());
  EXPECT_EQ(lex.contractions_checksum(), Lex().contractions_checksum());
  EXPECT_THROW(Lexicons::Load(dir.File("missing.txt"), "", ""), DataError);
}

TEST(ExpandContractionsTest, Examples) {
  EXPECT_EQ(ExpandContractions("don't", Lex()), (Words{"do", "not"}));
  EXPECT_EQ(ExpandContractions("21st", Lex()), (Words{"21st"}));
  EXPECT_EQ(ExpandContractions("grandma's", Lex()), (Words{"grandma"}));
  EXPECT_EQ(ExpandContractions("i'm", Lex()), (Words{"i", "am"}));
  EXPECT_EQ(ExpandContractions("can't", Lex()), (Words{"can", "not"}));
  EXPECT_EQ(ExpandContractions("it's", Lex()), (Words{"it", "is"}));
}

TEST(ExpandContractionsTest, LeftoverApostrophesAreDeleted) {
  EXPECT_EQ(ExpandContractions("rock'n'roll", Lex()), (Words{"rocknroll"}));
  EXPECT_EQ(ExpandContractions("kids'", Lex()), (Words{"kids"}));
  EXPECT_EQ(ExpandContractions("'s", Lex()), Words{});
}

TEST(RemoveSpecialCharsTest, Examples) {
  EXPECT_EQ(RemoveSpecialChars("b-day!!"), "bday");
  EXPECT_EQ(RemoveSpecialChars("2022"), "2022");
  EXPECT_EQ(RemoveSpecialChars("\xC2\xAF\\_(\xE3\x83\x84)_/\xC2\xAF"), "");
  EXPECT_EQ(RemoveSpecialChars(""), "");
}

TEST(RemoveStopwordsTest, Variants) {
  const Words in{"happy", "birthday", "to", "me"};
  EXPECT_EQ(RemoveStopwords(in, PronounVariant::kKeepPronouns, Lex()),
            (Words{"happy", "birthday", "me"}));
  EXPECT_EQ(RemoveStopwords(in, PronounVariant::kRemovePronouns, Lex()),
            (Words{"happy", "birthday"}));
  EXPECT_TRUE(RemoveStopwords({}, PronounVariant::kKeepPronouns, Lex()).empty());
  EXPECT_TRUE(RemoveStopwords({}, PronounVariant::kRemovePronouns, Lex()).empty());
}

TEST(NormalizeTest, FullPipelineExamples) {
  const std::string tweet =
      "I can't believe I'm 21 today!! \xF0\x9F\x98\xAD https://t.co/x #21";
  EXPECT_EQ(Normalize(tweet, kKeep, Lex()), (Words{"i", "believe", "i", "21", "today"}));
  EXPECT_EQ(Normalize(tweet, kRemove, Lex()), (Words{"believe", "21", "today"}));
  EXPECT_TRUE(Normalize("", kKeep, Lex()).empty());
  EXPECT_TRUE(Normalize("", kRemove, Lex()).empty());
}

TEST(NormalizeTest, CurlyApostropheIsFolded) {
  EXPECT_EQ(Normalize("I\xE2\x80\x99m 30 and my grandma\xE2\x80\x99s cake", kKeep, Lex()),
            (Words{"i", "30", "my", "grandma", "cake"}));
}

TEST(NormalizeTest, FlagsControlEntityStripping) {
  NormalizationConfig config = kKeep;
  config.strip_mentions = false;
  config.strip_hashtags = false;
  EXPECT_EQ(Normalize("hi @Mia_22 #Blessed https://t.co/x :)", config, Lex()),
            (Words{"hi", "mia22", "blessed"}));

  NormalizationConfig raw = kKeep;
  raw.remove_stopwords = false;
  raw.expand_contractions = false;
  raw.remove_special_chars = false;
  raw.lowercase = false;
  EXPECT_EQ(Normalize("Don't STOP me-now", raw, Lex()), (Words{"Don't", "STOP", "me", "now"}));
}

TEST(NormalizeTest, ContractionsExpandBeforeStopwordRemoval) {
  // "do" and "not" are stopwords; expansion first lets both be removed.
  EXPECT_EQ(Normalize("Don't forget", kKeep, Lex()), (Words{"forget"}));
  NormalizationConfig no_expand = kKeep;
  no_expand.expand_contractions = false;
  EXPECT_EQ(Normalize("Don't forget", no_expand, Lex()), (Words{"dont", "forget"}));
}

TEST(RenderTest, Joins) {
  EXPECT_EQ(Render(Words{"happy", "birthday"}), "happy birthday");
  EXPECT_EQ(Render(Words{}), "");
  EXPECT_EQ(Render(Words{"a"}), "a");
}

TEST(VariantTest, Names) {
  EXPECT_EQ(VariantName(PronounVariant::kKeepPronouns), "keep");
  EXPECT_EQ(ParseVariant("remove"), PronounVariant::kRemovePronouns);
  EXPECT_FALSE(ParseVariant("Keep").has_value());
}

class NormalizePropertyTest : public ::testing::TestWithParam<PronounVariant> {};

TEST_P(NormalizePropertyTest, IdempotentAlphabetAndExclusions) {
  const auto config = NormalizationConfig::ForVariant(GetParam());
  std::mt19937_64 rng(31337);
  const Corpus synthetic = GenerateSynthetic(400, 0.5, 5);
  std::vector<std::string> inputs;
  for (const auto &t : synthetic.records) inputs.push_back(t.text);
  for (int i = 0; i < 600; ++i) inputs.push_back(testing::FuzzTweet(rng));

  for (const std::string &s : inputs) {
    const Words once = Normalize(s, config, Lex());
    ASSERT_EQ(Normalize(Render(once), config, Lex()), once) << s;
    for (const auto &w : once) {
      ASSERT_FALSE(w.empty());
      for (char c : w) ASSERT_TRUE((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) << w;
      if (Lex().IsStopword(w)) {
        ASSERT_EQ(GetParam(), PronounVariant::kKeepPronouns) << w;
        ASSERT_TRUE(Lex().IsPronoun(w)) << w;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothVariants, NormalizePropertyTest,
                         ::testing::Values(PronounVariant::kKeepPronouns,
                                           PronounVariant::kRemovePronouns));

TEST(NormalizeVariantTest, RemoveIsSubsequenceOfKeep) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 1000; ++i) {
    const std::string s = testing::FuzzTweet(rng);
    ASSERT_TRUE(IsSubsequence(Normalize(s, kRemove, Lex()), Normalize(s, kKeep, Lex()))) << s;
  }
}

}  // namespace
}  // namespace tweetage
