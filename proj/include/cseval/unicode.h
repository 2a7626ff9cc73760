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

#ifndef CSEVAL_UNICODE_H_
#define CSEVAL_UNICODE_H_

#include <string>
#include <string_view>

// Thin UTF-8 helpers over ICU. All strings crossing module boundaries are
// UTF-8 std::string; code-point work happens on std::u32string.
namespace cseval::unicode {

std::u32string ToUtf32(std::string_view utf8);
std::string ToUtf8(std::u32string_view text);
std::string ToUtf8(char32_t c);

// Canonical composition (NFC).
std::u32string Compose(std::u32string_view text);

bool IsWhitespace(char32_t c);
bool IsLetter(char32_t c);
bool IsPunctuation(char32_t c);

// Code point in one of the Arabic blocks (Arabic, Supplement, Extended-A,
// Presentation Forms A/B).
bool IsArabic(char32_t c);
bool IsArabicLetter(char32_t c);
// Letter whose Unicode script is Latin (Basic-Latin letters included).
bool IsLatinLetter(char32_t c);

char32_t ToLowerLatin(char32_t c);

}  // namespace cseval::unicode

#endif  // CSEVAL_UNICODE_H_
