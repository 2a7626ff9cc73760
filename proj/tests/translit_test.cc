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

#include "cseval/translit.h"

#include <random>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cseval/error.h"
#include "cseval/textnorm.h"
#include "cseval/unicode.h"
#include "test_util.h"

namespace cseval {
namespace {

const TransliterationScheme& ToRoman() {
  static const auto* s = new TransliterationScheme(
      TransliterationScheme::Buckwalter(TranslitDirection::kToRoman));
  return *s;
}

const TransliterationScheme& ToArabic() {
  static const auto* s = new TransliterationScheme(
      TransliterationScheme::Buckwalter(TranslitDirection::kToArabic));
  return *s;
}

TEST(BuckwalterTest, LetterByLetter) {
  EXPECT_EQ(ToRoman().Transliterate("كتاب"), "ktAb");
  EXPECT_EQ(ToArabic().Transliterate("ktAb"), "كتاب");
  EXPECT_EQ(ToRoman().Transliterate("أحمد"), ">Hmd");
}

TEST(BuckwalterTest, TargetScriptIsUntouched) {
  EXPECT_EQ(ToRoman().Transliterate("school"), "school");
  EXPECT_EQ(ToArabic().Transliterate("كتاب"), "كتاب");
}

TEST(BuckwalterTest, TableIsBijective) {
  std::set<std::u32string> romans;
  for (const auto& [arabic, roman] : ToRoman().arabic_to_roman()) {
    EXPECT_TRUE(unicode::IsArabic(arabic));
    EXPECT_FALSE(roman.empty());
    for (char32_t c : roman) EXPECT_LT(c, 0x80u);
    EXPECT_TRUE(romans.insert(roman).second);
  }
  EXPECT_GE(romans.size(), 36u);
}

TEST(BuckwalterTest, TokenCountPreservedAndTagsKept) {
  EXPECT_EQ(ToRoman().Transliterate("[noise]  كتاب   school"),
            "[noise] ktAb school");
}

TEST(BuckwalterTest, MixedTokenConvertsOnlyForeignRuns) {
  EXPECT_EQ(ToRoman().Transliterate("الfull"), "Alfull");
  EXPECT_EQ(ToArabic().Transliterate("الktAb"), "الكتاب");
}

TEST(BuckwalterTest, RoundTripOnRandomArabic) {
  std::vector<char32_t> letters;
  for (const auto& [arabic, roman] : ToRoman().arabic_to_roman()) {
    letters.push_back(arabic);
  }
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, 8);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::u32string word;
    for (int i = len(rng); i > 0; --i) word += letters[pick(rng)];
    const std::string roman = ToRoman().Transliterate(unicode::ToUtf8(word));
    // A roman spelling shaped like a "<tag>" is left alone on the way back.
    if (IsTag(roman)) continue;
    ++checked;
    EXPECT_EQ(ToArabic().Transliterate(roman), unicode::ToUtf8(word));
  }
  EXPECT_GT(checked, 1900);
}

TEST(BuckwalterTest, IdempotentOnRandomLatin) {
  std::mt19937 rng(12);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyzAHST'<>|{}~ ";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    for (int i = 0; i < 12; ++i) text += alphabet[pick(rng)];
    for (const auto* scheme : {&ToArabic(), &ToRoman()}) {
      const std::string once = scheme->Transliterate(text);
      EXPECT_EQ(scheme->Transliterate(once), once) << text;
    }
  }
}

TEST(SchemeTest, LexiconBeforeCharMap) {
  TransliterationScheme s("test", TranslitDirection::kToArabic,
                          {{U'س', U"s"}, {U'ك', U"k"}},
                          {{"school", "سكول"}, {"ok", "اوكي"}},
                          TranslitFallback::kCharMap);
  EXPECT_EQ(s.Transliterate("school"), "سكول");
  EXPECT_EQ(s.Transliterate("ok sk"), "اوكي سك");
}

TEST(SchemeTest, PassThroughFallback) {
  TransliterationScheme s("test", TranslitDirection::kToArabic, {{U'س', U"s"}},
                          {{"school", "سكول"}}, TranslitFallback::kPassThrough);
  EXPECT_EQ(s.Transliterate("school sss"), "سكول sss");
}

TEST(SchemeTest, Validation) {
  EXPECT_THROW(TransliterationScheme("x", TranslitDirection::kToArabic,
                                     {{U'س', U"s"}, {U'ص', U"s"}}, {},
                                     TranslitFallback::kCharMap),
               InvalidSchemeError);
  EXPECT_NO_THROW(TransliterationScheme("x", TranslitDirection::kToRoman,
                                        {{U'س', U"s"}, {U'ص', U"s"}}, {},
                                        TranslitFallback::kCharMap, false));
  EXPECT_THROW(TransliterationScheme("x", TranslitDirection::kToArabic,
                                     {{U'س', U""}}, {},
                                     TranslitFallback::kCharMap),
               InvalidSchemeError);
  EXPECT_THROW(TransliterationScheme("x", TranslitDirection::kToArabic,
                                     {{U'س', U"s"}, {U'س', U"z"}}, {},
                                     TranslitFallback::kCharMap),
               InvalidSchemeError);
  EXPECT_THROW(TransliterationScheme("x", TranslitDirection::kToArabic, {},
                                     {{"school", "skool"}},
                                     TranslitFallback::kCharMap),
               InvalidSchemeError);
}

TEST(SchemeFileTest, ParsesDirectivesAndSections) {
  std::istringstream in(
      "# cross-transcriptions\n"
      "#name\tegy\n"
      "#direction\tto-arabic\n"
      "#fallback\tpassthrough\n"
      "#lexicon\n"
      "school\tسكول\n"
      "meeting\tميتنج\n");
  const auto s = ParseScheme(in, "default");
  EXPECT_EQ(s.name(), "egy");
  EXPECT_EQ(s.direction(), TranslitDirection::kToArabic);
  EXPECT_EQ(s.fallback(), TranslitFallback::kPassThrough);
  EXPECT_EQ(s.lexicon().size(), 2u);
  EXPECT_EQ(s.Transliterate("the meeting"), "the ميتنج");
  // No #charmap entries: the Buckwalter table backs the scheme.
  EXPECT_EQ(s.arabic_to_roman(), ToRoman().arabic_to_roman());
}

TEST(SchemeFileTest, EmptyFileGivesCharMapOnlyScheme) {
  std::istringstream in("");
  const auto s = ParseScheme(in, "empty");
  EXPECT_TRUE(s.lexicon().empty());
  EXPECT_EQ(s.fallback(), TranslitFallback::kCharMap);
  EXPECT_EQ(s.Transliterate("ktAb"), "كتاب");
}

TEST(SchemeFileTest, CustomCharMap) {
  std::istringstream in(
      "#direction\tto-roman\n#charmap\nك\tk\nت\tt\nا\ta\nب\tb\n");
  const auto s = ParseScheme(in, "mini");
  EXPECT_EQ(s.Transliterate("كتاب"), "ktab");
}

TEST(SchemeFileTest, DuplicateSourceWord) {
  std::istringstream in("#lexicon\nschool\tسكول\nschool\tاسكول\n");
  try {
    ParseScheme(in, "dup");
    FAIL() << "expected DuplicateKeyError";
  } catch (const DuplicateKeyError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(SchemeFileTest, Errors) {
  std::istringstream outside("school\tسكول\n");
  EXPECT_THROW(ParseScheme(outside, "x"), ParseError);
  std::istringstream fields("#lexicon\nschool\n");
  EXPECT_THROW(ParseScheme(fields, "x"), ParseError);
  std::istringstream direction("#direction\tsideways\n");
  EXPECT_THROW(ParseScheme(direction, "x"), ParseError);
  std::istringstream dup_char("#charmap\nك\tk\nك\tq\n");
  EXPECT_THROW(ParseScheme(dup_char, "x"), DuplicateKeyError);
}

TEST(SchemeFileTest, ResolveBuiltInsAndFiles) {
  EXPECT_EQ(ResolveScheme("ar").name(), "buckwalter-ar");
  EXPECT_EQ(ResolveScheme("en").direction(), TranslitDirection::kToRoman);
  const std::string path = testing::WriteTemp(
      "cseval_translit_test_scheme.tsv", "#lexicon\nschool\tسكول\n");
  EXPECT_EQ(ResolveScheme(path).Transliterate("school"), "سكول");
  EXPECT_THROW(ResolveScheme("/nonexistent/scheme.tsv"), ConfigError);
}

}  // namespace
}  // namespace cseval
