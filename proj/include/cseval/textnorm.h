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

#ifndef CSEVAL_TEXTNORM_H_
#define CSEVAL_TEXTNORM_H_

#include <string>
#include <string_view>
#include <vector>

namespace cseval {

enum class Script { kArabic, kLatin, kMixed, kOther };

const char* ScriptName(Script script);

struct Token {
  std::string surface;
  Script script = Script::kOther;
  // Non-speech tag such as "[laughter]" or "<noise>".
  bool is_tag = false;
};

// Letters decide the script. Arabic-block letters count as Arabic and
// Latin-script letters as Latin; letters of any other script are ignored,
// so a token with none of either is Other.
Script ClassifyScript(std::string_view surface);

bool IsTag(std::string_view surface);

// Splits on Unicode whitespace. Tags always classify as Other.
std::vector<Token> Tokenize(std::string_view text);

// Maximal same-script runs of a token. Characters that are neither Arabic
// nor Latin letters (digits, punctuation) join the preceding run, or the
// first run when leading; a token without letters is one kOther run.
struct ScriptRun {
  Script script;
  std::u32string text;
};
std::vector<ScriptRun> SplitScriptRuns(std::u32string_view token);

std::vector<std::string> Surfaces(const std::vector<Token>& tokens);

// Surfaces joined by single spaces.
std::string Join(const std::vector<std::string>& words);

struct NormalizationProfile {
  bool lowercase_latin = false;
  // أ إ آ -> ا, ى -> ي
  bool alif_ya = false;
  // ة -> ه, tatweel removal, ؤ -> و, ئ -> ي
  bool extended_arabic = false;
  bool unicode_compose = true;
  // Drops punctuation inside tokens; punctuation-only tokens are kept.
  bool strip_punctuation = false;

  bool operator==(const NormalizationProfile&) const = default;
};

// Parses "alif-ya,lowercase,extended,punct,no-compose". Empty or "none"
// yields the default profile. Throws ConfigError on unknown items.
NormalizationProfile ParseProfile(std::string_view spec);
std::string ProfileToString(const NormalizationProfile& profile);

// Normalizes token by token and rejoins with single spaces, so the token
// count never changes. Tags pass through untouched. Idempotent.
std::string Normalize(std::string_view text, const NormalizationProfile& profile);

}  // namespace cseval

#endif  // CSEVAL_TEXTNORM_H_
