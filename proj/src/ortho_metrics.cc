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

#include "cseval/ortho_metrics.h"

#include "cseval/error.h"
#include "cseval/unicode.h"

namespace cseval {

namespace {

void CheckReference(const EditCounts& c) {
  if (c.ref_length() == 0 && c.hyp_length() > 0) {
    throw EmptyReferenceError("reference is empty but hypothesis has " +
                              std::to_string(c.hyp_length()) + " units");
  }
}

}  // namespace

double WerFromCounts(const EditCounts& c) {
  CheckReference(c);
  if (c.ref_length() == 0) return 0.0;
  return static_cast<double>(c.errors()) / static_cast<double>(c.ref_length());
}

double MerFromCounts(const EditCounts& c) {
  CheckReference(c);
  const std::size_t total = c.hits + c.errors();
  if (total == 0) return 0.0;
  return static_cast<double>(c.errors()) / static_cast<double>(total);
}

double WilFromCounts(const EditCounts& c) {
  CheckReference(c);
  if (c.ref_length() == 0) return 0.0;
  if (c.hits == 0) return 1.0;
  const double h = static_cast<double>(c.hits);
  return 1.0 - (h * h) / (static_cast<double>(c.ref_length()) *
                          static_cast<double>(c.hyp_length()));
}

EditCounts WordCounts(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp) {
  return AlignUnit(ref, hyp).counts;
}

std::u32string CharSequence(std::string_view text) {
  return unicode::ToUtf32(Join(Surfaces(Tokenize(text))));
}

EditCounts CharCounts(std::string_view ref, std::string_view hyp) {
  const std::u32string r = CharSequence(ref);
  const std::u32string h = CharSequence(hyp);
  return Align(std::span<const char32_t>(r), std::span<const char32_t>(h),
               CostModel<char32_t>::Unit())
      .counts;
}

double Wer(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp) {
  return WerFromCounts(WordCounts(ref, hyp));
}

double Mer(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp) {
  return MerFromCounts(WordCounts(ref, hyp));
}

double Wil(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp) {
  return WilFromCounts(WordCounts(ref, hyp));
}

double Cer(std::string_view ref, std::string_view hyp) {
  return WerFromCounts(CharCounts(ref, hyp));
}

std::string Pipeline::Apply(std::string_view text) const {
  std::string out = Normalize(text, profile);
  if (scheme) out = Normalize(scheme->Transliterate(out), profile);
  return out;
}

std::string Pipeline::Describe() const {
  std::string out = "norm=" + ProfileToString(profile);
  if (scheme) out += " translit=" + scheme->name();
  return out;
}

ErrorRates ScoreWithPipeline(std::string_view ref, std::string_view hyp,
                             const Pipeline& pipeline) {
  const std::string r = pipeline.Apply(ref);
  const std::string h = pipeline.Apply(hyp);
  ErrorRates rates;
  rates.word_counts =
      WordCounts(Surfaces(Tokenize(r)), Surfaces(Tokenize(h)));
  rates.char_counts = CharCounts(r, h);
  rates.wer = WerFromCounts(rates.word_counts);
  rates.mer = MerFromCounts(rates.word_counts);
  rates.wil = WilFromCounts(rates.word_counts);
  rates.cer = WerFromCounts(rates.char_counts);
  return rates;
}

}  // namespace cseval
