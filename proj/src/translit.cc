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

#include <fstream>
#include <set>

#include "cseval/error.h"
#include "cseval/textnorm.h"
#include "cseval/unicode.h"

namespace cseval {

namespace {

// Standard Buckwalter table, Arabic -> ASCII.
const std::vector<std::pair<char32_t, std::u32string>>& BuckwalterTable() {
  static const std::vector<std::pair<char32_t, std::u32string>> table = {
      {0x0621, U"'"}, {0x0622, U"|"}, {0x0623, U">"}, {0x0624, U"&"},
      {0x0625, U"<"}, {0x0626, U"}"}, {0x0627, U"A"}, {0x0628, U"b"},
      {0x0629, U"p"}, {0x062A, U"t"}, {0x062B, U"v"}, {0x062C, U"j"},
      {0x062D, U"H"}, {0x062E, U"x"}, {0x062F, U"d"}, {0x0630, U"*"},
      {0x0631, U"r"}, {0x0632, U"z"}, {0x0633, U"s"}, {0x0634, U"$"},
      {0x0635, U"S"}, {0x0636, U"D"}, {0x0637, U"T"}, {0x0638, U"Z"},
      {0x0639, U"E"}, {0x063A, U"g"}, {0x0640, U"_"}, {0x0641, U"f"},
      {0x0642, U"q"}, {0x0643, U"k"}, {0x0644, U"l"}, {0x0645, U"m"},
      {0x0646, U"n"}, {0x0647, U"h"}, {0x0648, U"w"}, {0x0649, U"Y"},
      {0x064A, U"y"}, {0x064B, U"F"}, {0x064C, U"N"}, {0x064D, U"K"},
      {0x064E, U"a"}, {0x064F, U"u"}, {0x0650, U"i"}, {0x0651, U"~"},
      {0x0652, U"o"}, {0x0670, U"`"}, {0x0671, U"{"}, {0x067E, U"P"},
      {0x0686, U"J"}, {0x06A4, U"V"}, {0x06AF, U"G"},
  };
  return table;
}

std::string Trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  return s.substr(start);
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool ParseYesNo(const std::string& value, std::size_t line) {
  if (value == "yes" || value == "true") return true;
  if (value == "no" || value == "false") return false;
  throw ParseError("expected yes/no, got '" + value + "'", line);
}

}  // namespace

TranslitDirection ParseDirection(std::string_view text) {
  if (text == "to-arabic" || text == "ar" || text == "ToArabic") {
    return TranslitDirection::kToArabic;
  }
  if (text == "to-roman" || text == "en" || text == "ToRoman") {
    return TranslitDirection::kToRoman;
  }
  throw ConfigError("unknown transliteration direction '" + std::string(text) +
                    "'");
}

TransliterationScheme::TransliterationScheme(
    std::string name, TranslitDirection direction,
    std::vector<std::pair<char32_t, std::u32string>> char_map,
    std::map<std::string, std::string> lexicon, TranslitFallback fallback,
    bool bijective)
    : name_(std::move(name)),
      direction_(direction),
      lexicon_(std::move(lexicon)),
      fallback_(fallback) {
  for (auto& [arabic, roman] : char_map) {
    if (roman.empty()) {
      throw InvalidSchemeError("scheme '" + name_ +
                               "': empty roman value for " +
                               unicode::ToUtf8(arabic));
    }
    if (!to_roman_.emplace(arabic, roman).second) {
      throw InvalidSchemeError("scheme '" + name_ +
                               "': duplicate character " +
                               unicode::ToUtf8(arabic));
    }
    auto [it, inserted] = to_arabic_.emplace(roman, arabic);
    if (!inserted && bijective) {
      throw InvalidSchemeError("scheme '" + name_ + "': character map is not " +
                               "bijective ('" + unicode::ToUtf8(roman) +
                               "' has two sources)");
    }
    max_roman_len_ = std::max(max_roman_len_, roman.size());
  }
  const Script target = direction_ == TranslitDirection::kToArabic
                            ? Script::kArabic
                            : Script::kLatin;
  for (const auto& [source, replacement] : lexicon_) {
    Script script = ClassifyScript(replacement);
    if (replacement.empty() ||
        (script != target && script != Script::kOther)) {
      throw InvalidSchemeError("scheme '" + name_ + "': lexicon target '" +
                               replacement + "' for '" + source +
                               "' is not in the target script");
    }
  }
}

TransliterationScheme TransliterationScheme::Buckwalter(
    TranslitDirection direction) {
  return TransliterationScheme(
      direction == TranslitDirection::kToArabic ? "buckwalter-ar"
                                                : "buckwalter-en",
      direction, BuckwalterTable(), {}, TranslitFallback::kCharMap);
}

std::u32string TransliterationScheme::MapRun(std::u32string_view run) const {
  std::u32string out;
  if (direction_ == TranslitDirection::kToRoman) {
    for (char32_t c : run) {
      auto it = to_roman_.find(c);
      if (it == to_roman_.end()) {
        out.push_back(c);
      } else {
        out += it->second;
      }
    }
    return out;
  }
  std::size_t i = 0;
  while (i < run.size()) {
    bool matched = false;
    for (std::size_t len = std::min(max_roman_len_, run.size() - i); len > 0;
         --len) {
      auto it = to_arabic_.find(std::u32string(run.substr(i, len)));
      if (it != to_arabic_.end()) {
        out.push_back(it->second);
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) out.push_back(run[i++]);
  }
  return out;
}

std::string TransliterationScheme::TransliterateToken(
    std::string_view token) const {
  if (IsTag(token)) return std::string(token);
  const Script script = ClassifyScript(token);
  const Script target = direction_ == TranslitDirection::kToArabic
                            ? Script::kArabic
                            : Script::kLatin;
  if (script == target) return std::string(token);
  if (auto it = lexicon_.find(std::string(token)); it != lexicon_.end()) {
    return it->second;
  }
  auto convert = [&](std::u32string_view run) -> std::u32string {
    if (auto it = lexicon_.find(unicode::ToUtf8(run)); it != lexicon_.end()) {
      return unicode::ToUtf32(it->second);
    }
    if (fallback_ == TranslitFallback::kPassThrough) {
      return std::u32string(run);
    }
    return MapRun(run);
  };
  const std::u32string text = unicode::ToUtf32(token);
  if (script != Script::kMixed) return unicode::ToUtf8(convert(text));
  std::u32string out;
  for (const ScriptRun& run : SplitScriptRuns(text)) {
    out += run.script == target ? run.text : convert(run.text);
  }
  return unicode::ToUtf8(out);
}

std::string TransliterationScheme::Transliterate(std::string_view text) const {
  std::vector<std::string> words;
  for (const Token& token : Tokenize(text)) {
    words.push_back(TransliterateToken(token.surface));
  }
  return Join(words);
}

TransliterationScheme ParseScheme(std::istream& in, std::string default_name) {
  enum class Section { kNone, kCharMap, kLexicon };
  Section section = Section::kNone;
  std::string name = std::move(default_name);
  TranslitDirection direction = TranslitDirection::kToArabic;
  TranslitFallback fallback = TranslitFallback::kCharMap;
  bool bijective = true;
  std::vector<std::pair<char32_t, std::u32string>> char_map;
  std::set<char32_t> seen_chars;
  std::map<std::string, std::string> lexicon;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::vector<std::string> fields = SplitTabs(line);
      const std::string key = Trim(fields[0]);
      const std::string value = fields.size() > 1 ? Trim(fields[1]) : "";
      if (key == "#charmap") {
        section = Section::kCharMap;
      } else if (key == "#lexicon") {
        section = Section::kLexicon;
      } else if (key == "#name" && fields.size() > 1) {
        name = value;
      } else if (key == "#direction" && fields.size() > 1) {
        try {
          direction = ParseDirection(value);
        } catch (const ConfigError& e) {
          throw ParseError(e.what(), line_no);
        }
      } else if (key == "#fallback" && fields.size() > 1) {
        if (value == "charmap") {
          fallback = TranslitFallback::kCharMap;
        } else if (value == "passthrough") {
          fallback = TranslitFallback::kPassThrough;
        } else {
          throw ParseError("unknown fallback '" + value + "'", line_no);
        }
      } else if (key == "#bijective" && fields.size() > 1) {
        bijective = ParseYesNo(value, line_no);
      }
      continue;
    }
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError("expected two tab-separated fields", line_no);
    }
    switch (section) {
      case Section::kNone:
        throw ParseError("entry outside #charmap/#lexicon section", line_no);
      case Section::kCharMap: {
        std::u32string arabic = unicode::ToUtf32(fields[0]);
        if (arabic.size() != 1) {
          throw ParseError("charmap source must be a single character",
                           line_no);
        }
        if (!seen_chars.insert(arabic[0]).second) {
          throw DuplicateKeyError("duplicate charmap key '" + fields[0] + "'",
                                  line_no);
        }
        char_map.emplace_back(arabic[0], unicode::ToUtf32(fields[1]));
        break;
      }
      case Section::kLexicon:
        if (!lexicon.emplace(fields[0], fields[1]).second) {
          throw DuplicateKeyError("duplicate lexicon key '" + fields[0] + "'",
                                  line_no);
        }
        break;
    }
  }
  if (char_map.empty()) char_map = BuckwalterTable();
  return TransliterationScheme(std::move(name), direction, std::move(char_map),
                               std::move(lexicon), fallback, bijective);
}

TransliterationScheme LoadScheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scheme file " + path.string());
  return ParseScheme(in, path.stem().string());
}

TransliterationScheme ResolveScheme(std::string_view spec) {
  if (spec == "ar" || spec == "to-arabic") {
    return TransliterationScheme::Buckwalter(TranslitDirection::kToArabic);
  }
  if (spec == "en" || spec == "to-roman") {
    return TransliterationScheme::Buckwalter(TranslitDirection::kToRoman);
  }
  return LoadScheme(std::filesystem::path(spec));
}

}  // namespace cseval
