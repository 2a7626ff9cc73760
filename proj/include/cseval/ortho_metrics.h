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

#ifndef CSEVAL_ORTHO_METRICS_H_
#define CSEVAL_ORTHO_METRICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cseval/align.h"
#include "cseval/textnorm.h"
#include "cseval/translit.h"

namespace cseval {

// Rates from edit counts. All throw EmptyReferenceError when the reference
// is empty but the hypothesis is not, and return 0 when both are empty.
double WerFromCounts(const EditCounts& c);
double MerFromCounts(const EditCounts& c);
// 1 - H^2 / ((H+S+D)(H+S+I)); 1.0 whenever H = 0 and a side is non-empty.
double WilFromCounts(const EditCounts& c);

EditCounts WordCounts(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp);
// Characters of the whitespace-tokenized text joined by single spaces.
EditCounts CharCounts(std::string_view ref, std::string_view hyp);

std::u32string CharSequence(std::string_view text);

double Wer(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp);
double Mer(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp);
double Wil(const std::vector<std::string>& ref,
           const std::vector<std::string>& hyp);
double Cer(std::string_view ref, std::string_view hyp);

struct ErrorRates {
  double wer = 0.0;
  double cer = 0.0;
  double mer = 0.0;
  double wil = 0.0;
  EditCounts word_counts;
  EditCounts char_counts;
};

// Normalize, transliterate, then normalize again (so the profile also sees
// the transliteration output). Both sides go through the same steps.
struct Pipeline {
  NormalizationProfile profile;
  std::optional<TransliterationScheme> scheme;

  std::string Apply(std::string_view text) const;
  std::string Describe() const;
};

ErrorRates ScoreWithPipeline(std::string_view ref, std::string_view hyp,
                             const Pipeline& pipeline);

}  // namespace cseval

#endif  // CSEVAL_ORTHO_METRICS_H_
