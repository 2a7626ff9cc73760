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

#ifndef CSEVAL_TRANSLIT_H_
#define CSEVAL_TRANSLIT_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cseval {

enum class TranslitDirection { kToArabic, kToRoman };
enum class TranslitFallback { kPassThrough, kCharMap };

// A transliteration scheme: whole-word lexicon first, then a per-character
// map. The character map is stored Arabic -> Roman regardless of direction.
class TransliterationScheme {
 public:
  TransliterationScheme(std::string name, TranslitDirection direction,
                        std::vector<std::pair<char32_t, std::u32string>> char_map,
                        std::map<std::string, std::string> lexicon,
                        TranslitFallback fallback, bool bijective = true);

  // Built-in Buckwalter scheme with an empty lexicon.
  static TransliterationScheme Buckwalter(TranslitDirection direction);

  const std::string& name() const { return name_; }
  TranslitDirection direction() const { return direction_; }
  TranslitFallback fallback() const { return fallback_; }
  const std::map<std::string, std::string>& lexicon() const { return lexicon_; }
  const std::map<char32_t, std::u32string>& arabic_to_roman() const {
    return to_roman_;
  }

  // Token-wise transliteration; token count is preserved and output tokens
  // are joined by single spaces.
  std::string Transliterate(std::string_view text) const;
  std::string TransliterateToken(std::string_view token) const;

 private:
  std::u32string MapRun(std::u32string_view run) const;

  std::string name_;
  TranslitDirection direction_;
  std::map<char32_t, std::u32string> to_roman_;
  std::map<std::u32string, char32_t> to_arabic_;
  std::size_t max_roman_len_ = 1;
  std::map<std::string, std::string> lexicon_;
  TranslitFallback fallback_;
};

// Scheme file (UTF-8, tab separated):
//   #name<TAB>my-scheme
//   #direction<TAB>to-arabic | to-roman
//   #fallback<TAB>charmap | passthrough
//   #bijective<TAB>yes | no
//   #charmap          (section: arabic<TAB>roman per line)
//   #lexicon          (section: source-word<TAB>target-word per line)
// Other lines starting with '#' are comments. Without #charmap entries the
// Buckwalter table is used.
TransliterationScheme LoadScheme(const std::filesystem::path& path);
TransliterationScheme ParseScheme(std::istream& in, std::string default_name);

// "ar" / "to-arabic" and "en" / "to-roman" name the built-in Buckwalter
// schemes; anything else is loaded as a scheme file.
TransliterationScheme ResolveScheme(std::string_view spec);

TranslitDirection ParseDirection(std::string_view text);

}  // namespace cseval

#endif  // CSEVAL_TRANSLIT_H_
