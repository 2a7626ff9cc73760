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

#ifndef CSEVAL_PHONOLOGY_H_
#define CSEVAL_PHONOLOGY_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cseval/align.h"

namespace cseval {

// IPA phones, one symbol per element; word boundaries are not represented.
using PhoneSequence = std::vector<std::string>;

enum class FeatureValue : std::int8_t { kMinus = -1, kZero = 0, kPlus = 1 };

// Ternary articulatory feature vectors keyed by IPA symbol.
class FeatureTable {
 public:
  FeatureTable(std::vector<std::string> feature_names,
               std::map<std::string, std::vector<FeatureValue>> phones);

  std::size_t num_features() const { return feature_names_.size(); }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::map<std::string, std::vector<FeatureValue>>& phones() const {
    return phones_;
  }
  bool Contains(const std::string& phone) const {
    return phones_.count(phone) > 0;
  }
  const std::vector<FeatureValue>& Features(const std::string& phone) const;

  // 1 - (differing features) / F. Throws UnknownPhoneError.
  double Similarity(const std::string& x, const std::string& y) const;

 private:
  std::vector<std::string> feature_names_;
  std::map<std::string, std::vector<FeatureValue>> phones_;
};

// CSV: header "phone,<feature>...", then one row per phone with cells in
// {+, -, 0} (U+2212 minus accepted).
FeatureTable ParseFeatureTable(std::istream& in);
FeatureTable LoadFeatureTable(const std::filesystem::path& path);

double PhoneSimilarity(const std::string& x, const std::string& y,
                       const FeatureTable& table);

struct G2PRule {
  std::u32string grapheme;
  PhoneSequence phones;
  std::u32string left;
  bool left_at_word_start = false;
  std::u32string right;
  bool right_at_word_end = false;
};

// Ordered rewrite rules. At each position the longest matching grapheme
// whose contexts hold wins; equal lengths resolve to the earliest rule.
class G2PRuleSet {
 public:
  G2PRuleSet(std::string language, std::vector<G2PRule> rules);

  const std::string& language() const { return language_; }
  const std::vector<G2PRule>& rules() const { return rules_; }

  // Rule matching at `pos`, or nullptr.
  const G2PRule* Match(std::u32string_view word, std::size_t pos) const;

  // Throws UnknownPhoneError naming the first output symbol missing from
  // the table.
  void Validate(const FeatureTable& table) const;

 private:
  std::string language_;
  std::vector<G2PRule> rules_;
};

// Lines: grapheme<TAB>ipa[<TAB>left<TAB>right]; "#language<TAB>tag" sets the
// language; other '#' lines are comments.
G2PRuleSet ParseG2PRules(std::istream& in, std::string default_language);
G2PRuleSet LoadG2PRules(const std::filesystem::path& path);

enum class UnknownGraphemePolicy { kSkip, kError };

// Converts mixed-script text, choosing the rule set per script run. Tags
// are dropped. Latin runs are lowercased before rule matching.
class G2PConverter {
 public:
  G2PConverter(G2PRuleSet arabic, G2PRuleSet latin,
               UnknownGraphemePolicy policy = UnknownGraphemePolicy::kSkip);

  // Skipped graphemes are described in `warnings` when given.
  PhoneSequence Convert(std::string_view text,
                        std::vector<std::string>* warnings = nullptr) const;

  void Validate(const FeatureTable& table) const;

 private:
  void ConvertRun(std::u32string_view run, const G2PRuleSet& rules,
                  PhoneSequence& out, std::vector<std::string>* warnings) const;

  G2PRuleSet arabic_;
  G2PRuleSet latin_;
  UnknownGraphemePolicy policy_;
};

struct PsdWeights {
  double sub = 1.0;
  double del = 1.0;
  double ins = 1.0;
};

// Phone error rate: unit-cost edit distance over N reference phones.
double Per(const PhoneSequence& ref, const PhoneSequence& hyp);

// Minimal-cost alignment under substitution cost w_sub * (1 - sim).
AlignmentResult AlignPhones(const PhoneSequence& ref, const PhoneSequence& hyp,
                            const PsdWeights& weights,
                            const FeatureTable& table);

// Phone similarity edit distance: total weighted cost / N.
double Psd(const PhoneSequence& ref, const PhoneSequence& hyp,
           const PsdWeights& weights, const FeatureTable& table);

// Default data locations: $CS_EVAL_DATA_DIR, else the build's data dir.
std::filesystem::path DataDir();

}  // namespace cseval

#endif  // CSEVAL_PHONOLOGY_H_
