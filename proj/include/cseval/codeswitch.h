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

#ifndef CSEVAL_CODESWITCH_H_
#define CSEVAL_CODESWITCH_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "cseval/textnorm.h"

namespace cseval {

// L1 is the primary (Arabic-script) language, L2 the secondary one.
enum class Language { kL1, kL2, kOther };

const char* LanguageName(Language language);
Language ParseLanguage(std::string_view text);

using LanguageLexicon = std::map<std::string, Language>;

// word<TAB>L1|L2|Other per line, '#' comments.
LanguageLexicon ParseLanguageLexicon(std::istream& in);
LanguageLexicon LoadLanguageLexicon(const std::filesystem::path& path);

struct LanguageTaggedUtterance {
  std::vector<Token> tokens;
  std::vector<Language> tags;
  // Language-dependent tokens (L1 + L2).
  std::size_t n = 0;
  // Alternation points in the L1/L2 tag sequence with Other removed.
  std::size_t p = 0;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
};

// Script decides the tag (Arabic -> L1, Latin and Mixed -> L2, Other ->
// Other) unless the lexicon lists the surface.
LanguageTaggedUtterance TagLanguages(std::vector<Token> tokens,
                                     const LanguageLexicon* lexicon = nullptr);

// 100 * (0.5 (N - max t_L) + 0.5 P) / N. Throws NoLanguageTokensError
// when N = 0.
double Cmi(const LanguageTaggedUtterance& utterance);

// Mean CMI over utterances with N > 0.
double RecordingCmi(const std::vector<LanguageTaggedUtterance>& utterances);

}  // namespace cseval

#endif  // CSEVAL_CODESWITCH_H_
