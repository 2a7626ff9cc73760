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

#include <algorithm>
#include <fstream>
#include <optional>

#include "cseval/error.h"

namespace cseval {

const char* LanguageName(Language language) {
  switch (language) {
    case Language::kL1: return "L1";
    case Language::kL2: return "L2";
    case Language::kOther: return "Other";
  }
  return "Other";
}

Language ParseLanguage(std::string_view text) {
  if (text == "L1") return Language::kL1;
  if (text == "L2") return Language::kL2;
  if (text == "Other") return Language::kOther;
  throw Error("language must be L1, L2 or Other, got '" + std::string(text) +
              "'");
}

LanguageLexicon ParseLanguageLexicon(std::istream& in) {
  LanguageLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected word<TAB>language", line_no);
    }
    Language language;
    try {
      language = ParseLanguage(line.substr(tab + 1));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!lexicon.emplace(line.substr(0, tab), language).second) {
      throw DuplicateKeyError("duplicate word '" + line.substr(0, tab) + "'",
                              line_no);
    }
  }
  return lexicon;
}

LanguageLexicon LoadLanguageLexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open language lexicon " + path.string());
  return ParseLanguageLexicon(in);
}

LanguageTaggedUtterance TagLanguages(std::vector<Token> tokens,
                                     const LanguageLexicon* lexicon) {
  LanguageTaggedUtterance u;
  u.tokens = std::move(tokens);
  u.tags.reserve(u.tokens.size());
  std::optional<Language> previous;
  for (const Token& token : u.tokens) {
    Language tag = Language::kOther;
    switch (token.script) {
      case Script::kArabic: tag = Language::kL1; break;
      case Script::kLatin:
      case Script::kMixed: tag = Language::kL2; break;
      case Script::kOther: tag = Language::kOther; break;
    }
    if (lexicon && !token.is_tag) {
      if (auto it = lexicon->find(token.surface); it != lexicon->end()) {
        tag = it->second;
      }
    }
    u.tags.push_back(tag);
    if (tag == Language::kOther) continue;
    ++u.n;
    ++(tag == Language::kL1 ? u.l1 : u.l2);
    if (previous && *previous != tag) ++u.p;
    previous = tag;
  }
  return u;
}

double Cmi(const LanguageTaggedUtterance& u) {
  if (u.n == 0) {
    throw NoLanguageTokensError("utterance has no language-dependent tokens");
  }
  const double n = static_cast<double>(u.n);
  const double dominant = static_cast<double>(std::max(u.l1, u.l2));
  return 100.0 * (0.5 * (n - dominant) + 0.5 * static_cast<double>(u.p)) / n;
}

double RecordingCmi(const std::vector<LanguageTaggedUtterance>& utterances) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& u : utterances) {
    if (u.n == 0) continue;
    sum += Cmi(u);
    ++count;
  }
  if (count == 0) {
    throw NoLanguageTokensError("no utterance with language-dependent tokens");
  }
  return sum / static_cast<double>(count);
}

}  // namespace cseval
