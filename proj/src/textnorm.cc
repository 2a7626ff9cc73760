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

#include "cseval/textnorm.h"

#include <sstream>

#include "cseval/error.h"
#include "cseval/unicode.h"

namespace cseval {

namespace {

constexpr char32_t kAlifHamzaAbove = 0x0623;
constexpr char32_t kAlifHamzaBelow = 0x0625;
constexpr char32_t kAlifMadda = 0x0622;
constexpr char32_t kAlif = 0x0627;
constexpr char32_t kAlifMaqsura = 0x0649;
constexpr char32_t kYa = 0x064A;
constexpr char32_t kTaMarbuta = 0x0629;
constexpr char32_t kHa = 0x0647;
constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kWawHamza = 0x0624;
constexpr char32_t kWaw = 0x0648;
constexpr char32_t kYaHamza = 0x0626;

std::u32string MapOnce(std::u32string_view in,
                       const NormalizationProfile& profile) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t c : in) {
    if (profile.alif_ya) {
      if (c == kAlifHamzaAbove || c == kAlifHamzaBelow || c == kAlifMadda) {
        c = kAlif;
      } else if (c == kAlifMaqsura) {
        c = kYa;
      }
    }
    if (profile.extended_arabic) {
      if (c == kTatweel) continue;
      if (c == kTaMarbuta) c = kHa;
      if (c == kWawHamza) c = kWaw;
      if (c == kYaHamza) c = kYa;
    }
    if (profile.lowercase_latin) c = unicode::ToLowerLatin(c);
    if (profile.strip_punctuation && unicode::IsPunctuation(c)) continue;
    out.push_back(c);
  }
  return out;
}

std::u32string NormalizeToken(std::u32string token,
                              const NormalizationProfile& profile) {
  // Mapping can expose new composition pairs (ى + hamza above), so iterate
  // to a fixpoint; each round only shrinks the mapped alphabet.
  for (int round = 0; round < 8; ++round) {
    std::u32string next =
        profile.unicode_compose ? unicode::Compose(token) : token;
    next = MapOnce(next, profile);
    if (next == token) break;
    token = std::move(next);
  }
  return token;
}

}  // namespace

const char* ScriptName(Script script) {
  switch (script) {
    case Script::kArabic: return "Arabic";
    case Script::kLatin: return "Latin";
    case Script::kMixed: return "Mixed";
    case Script::kOther: return "Other";
  }
  return "Other";
}

Script ClassifyScript(std::string_view surface) {
  bool arabic = false;
  bool latin = false;
  for (char32_t c : unicode::ToUtf32(surface)) {
    if (unicode::IsArabicLetter(c)) {
      arabic = true;
    } else if (unicode::IsLatinLetter(c)) {
      latin = true;
    }
  }
  if (arabic && latin) return Script::kMixed;
  if (arabic) return Script::kArabic;
  if (latin) return Script::kLatin;
  return Script::kOther;
}

bool IsTag(std::string_view surface) {
  if (surface.size() < 2) return false;
  return (surface.front() == '[' && surface.back() == ']') ||
         (surface.front() == '<' && surface.back() == '>');
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::u32string current;
  auto flush = [&] {
    if (current.empty()) return;
    Token token;
    token.surface = unicode::ToUtf8(current);
    token.is_tag = IsTag(token.surface);
    token.script =
        token.is_tag ? Script::kOther : ClassifyScript(token.surface);
    tokens.push_back(std::move(token));
    current.clear();
  };
  for (char32_t c : unicode::ToUtf32(text)) {
    if (unicode::IsWhitespace(c)) {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

std::vector<ScriptRun> SplitScriptRuns(std::u32string_view token) {
  std::vector<ScriptRun> runs;
  std::u32string leading;
  for (char32_t c : token) {
    Script kind = Script::kOther;
    // Arabic combining marks belong with the Arabic run.
    if (unicode::IsArabic(c)) {
      kind = Script::kArabic;
    } else if (unicode::IsLatinLetter(c)) {
      kind = Script::kLatin;
    }
    if (kind == Script::kOther) {
      if (runs.empty()) {
        leading.push_back(c);
      } else {
        runs.back().text.push_back(c);
      }
      continue;
    }
    if (runs.empty() || runs.back().script != kind) {
      runs.push_back({kind, std::move(leading)});
      leading.clear();
    }
    runs.back().text.push_back(c);
  }
  if (runs.empty()) runs.push_back({Script::kOther, std::move(leading)});
  return runs;
}

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

NormalizationProfile ParseProfile(std::string_view spec) {
  NormalizationProfile profile;
  std::string item;
  std::istringstream in{std::string(spec)};
  while (std::getline(in, item, ',')) {
    if (item.empty() || item == "none") continue;
    if (item == "alif-ya" || item == "arnorm") {
      profile.alif_ya = true;
    } else if (item == "lowercase") {
      profile.lowercase_latin = true;
    } else if (item == "extended") {
      profile.extended_arabic = true;
    } else if (item == "punct") {
      profile.strip_punctuation = true;
    } else if (item == "no-compose") {
      profile.unicode_compose = false;
    } else {
      throw ConfigError("unknown normalization item '" + item +
                        "' (expected alif-ya, lowercase, extended, punct, "
                        "no-compose)");
    }
  }
  return profile;
}

std::string ProfileToString(const NormalizationProfile& profile) {
  std::vector<std::string> items;
  if (profile.alif_ya) items.emplace_back("alif-ya");
  if (profile.lowercase_latin) items.emplace_back("lowercase");
  if (profile.extended_arabic) items.emplace_back("extended");
  if (profile.strip_punctuation) items.emplace_back("punct");
  if (!profile.unicode_compose) items.emplace_back("no-compose");
  if (items.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(',');
    out += items[i];
  }
  return out;
}

std::string Normalize(std::string_view text,
                      const NormalizationProfile& profile) {
  std::vector<std::string> words;
  for (const Token& token : Tokenize(text)) {
    if (token.is_tag) {
      words.push_back(token.surface);
      continue;
    }
    std::u32string normalized =
        NormalizeToken(unicode::ToUtf32(token.surface), profile);
    words.push_back(normalized.empty() ? token.surface
                                       : unicode::ToUtf8(normalized));
  }
  return Join(words);
}

}  // namespace cseval
