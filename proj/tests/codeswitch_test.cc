// Copyright 2026 The cs-eval Authors
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

#include "cseval/codeswitch.h"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cseval/error.h"

namespace cseval {
namespace {

LanguageTaggedUtterance Tag(const std::string& text,
                            const LanguageLexicon* lexicon = nullptr) {
  return TagLanguages(Tokenize(text), lexicon);
}

// Direct evaluation: 100 * (0.5 * (N - max) + 0.5 * P) / N.
double CmiFormula(double n, double max_lang, double p) {
  return 100.0 * (0.5 * (n - max_lang) + 0.5 * p) / n;
}

TEST(TagLanguagesTest, Alternations) {
  const auto u = Tag("كتاب school كتاب");
  EXPECT_EQ(u.tags, (std::vector<Language>{Language::kL1, Language::kL2,
                                           Language::kL1}));
  EXPECT_EQ(u.n, 3u);
  EXPECT_EQ(u.p, 2u);
}

TEST(TagLanguagesTest, Monolingual) {
  const auto ar = Tag("انا رايح البيت");
  EXPECT_EQ(ar.l1, 3u);
  EXPECT_EQ(ar.p, 0u);
  const auto en = Tag("school school");
  EXPECT_EQ(en.tags, (std::vector<Language>{Language::kL2, Language::kL2}));
  EXPECT_EQ(en.p, 0u);
}

TEST(TagLanguagesTest, OtherTokensDoNotBreakRuns) {
  const auto u = Tag("انا [laughter] 123 رايح meeting");
  EXPECT_EQ(u.tags[1], Language::kOther);
  EXPECT_EQ(u.tags[2], Language::kOther);
  EXPECT_EQ(u.n, 3u);
  EXPECT_EQ(u.p, 1u);
}

TEST(TagLanguagesTest, MixedTokenCountsAsEmbeddedLanguage) {
  const auto u = Tag("الmeeting");
  EXPECT_EQ(u.tags[0], Language::kL2);
}

TEST(TagLanguagesTest, LexiconOverrides) {
  std::istringstream in("ok\tOther\nميتنج\tL2\n");
  const LanguageLexicon lex = ParseLanguageLexicon(in);
  const auto u = Tag("ok انا ميتنج", &lex);
  EXPECT_EQ(u.tags, (std::vector<Language>{Language::kOther, Language::kL1,
                                           Language::kL2}));
  EXPECT_EQ(u.n, 2u);
  EXPECT_EQ(u.p, 1u);
}

TEST(LexiconTest, Errors) {
  std::istringstream dup("ok\tL1\nok\tL2\n");
  EXPECT_THROW(ParseLanguageLexicon(dup), DuplicateKeyError);
  std::istringstream bad("ok\tL3\n");
  EXPECT_THROW(ParseLanguageLexicon(bad), ParseError);
  std::istringstream fields("ok\n");
  EXPECT_THROW(ParseLanguageLexicon(fields), ParseError);
}

TEST(CmiTest, Examples) {
  EXPECT_EQ(Cmi(Tag("انا رايح البيت بكرة")), 0.0);
  EXPECT_EQ(Cmi(Tag("go home")), 0.0);
  // N=4, two per language, P=2.
  const auto half = Tag("انا رايح meeting project");
  EXPECT_EQ(half.p, 1u);
  const auto fifty = Tag("انا meeting project رايح");
  EXPECT_EQ(fifty.n, 4u);
  EXPECT_EQ(fifty.p, 2u);
  EXPECT_NEAR(Cmi(fifty), CmiFormula(4, 2, 2), 1e-12);
  EXPECT_NEAR(Cmi(fifty), 50.0, 1e-12);
  // N=5, dominant language 4 tokens, P=1.
  const auto twenty = Tag("انا رايح ال بيت meeting");
  EXPECT_EQ(twenty.n, 5u);
  EXPECT_EQ(twenty.l1, 4u);
  EXPECT_EQ(twenty.p, 1u);
  EXPECT_NEAR(Cmi(twenty), CmiFormula(5, 4, 1), 1e-12);
  EXPECT_NEAR(Cmi(twenty), 20.0, 1e-12);
  EXPECT_THROW(Cmi(Tag("[noise] 42")), NoLanguageTokensError);
}

TEST(CmiTest, RecordingMean) {
  const auto zero = Tag("انا رايح");
  const auto fifty = Tag("انا meeting project رايح");
  EXPECT_NEAR(RecordingCmi({zero}), 0.0, 1e-12);
  EXPECT_NEAR(RecordingCmi({zero, fifty}), 25.0, 1e-12);
  // Utterances without language tokens are skipped.
  EXPECT_NEAR(RecordingCmi({zero, Tag("[noise]"), fifty}), 25.0, 1e-12);
  EXPECT_THROW(RecordingCmi({Tag("[noise]")}), NoLanguageTokensError);
  EXPECT_THROW(RecordingCmi({}), NoLanguageTokensError);
}

TEST(CmiPropertyTest, RelabelInvariantAndBounded) {
  std::mt19937 rng(10);
  const std::vector<std::string> ar{"انا", "رايح", "بيت"};
  const std::vector<std::string> en{"go", "meeting", "home"};
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text, swapped;
    for (int i = len(rng); i > 0; --i) {
      const int c = coin(rng);
      const std::string a = ar[i % 3];
      const std::string e = en[i % 3];
      text += (c == 0 ? a : c == 1 ? e : std::string("[x]")) + " ";
      swapped += (c == 0 ? e : c == 1 ? a : std::string("[x]")) + " ";
    }
    const auto u = Tag(text);
    if (u.n == 0) continue;
    const double cmi = Cmi(u);
    EXPECT_NEAR(cmi, Cmi(Tag(swapped)), 1e-12);
    EXPECT_GE(cmi, 0.0);
    EXPECT_LE(cmi, 100.0);
  }
}

}  // namespace
}  // namespace cseval
