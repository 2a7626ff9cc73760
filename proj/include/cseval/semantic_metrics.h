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

#ifndef CSEVAL_SEMANTIC_METRICS_H_
#define CSEVAL_SEMANTIC_METRICS_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cseval {

// dot(a, b) / (|a| |b|), clamped to [-1, 1].
double Cosine(std::span<const double> a, std::span<const double> b);

// Sentence BLEU: n = 1..4, uniform weights, brevity penalty; add-one
// smoothing for n >= 2 and 0 when no unigram matches.
double Bleu(const std::vector<std::string>& ref,
            const std::vector<std::string>& hyp);

// chrF with beta = 2 over character n-grams n = 1..6 (whitespace kept).
// F is computed per order and averaged over orders the reference has.
double Chrf(std::string_view ref, std::string_view hyp);

enum class Side { kRef, kHyp };
const char* SideName(Side side);
Side ParseSide(std::string_view text);

// Channel ids are free-form; "base" names the untranslated text.
inline constexpr std::string_view kBaseChannel = "base";

// Sentence vectors keyed by (id, side, channel). JSON-lines file, one
// object per line: {"id": ..., "side": "ref"|"hyp", "channel": ...,
// "vector": [...]}. Lines starting with '#' are comments.
class EmbeddingStore {
 public:
  static EmbeddingStore Parse(std::istream& in);
  static EmbeddingStore Load(const std::filesystem::path& path);

  void Add(const std::string& id, Side side, const std::string& channel,
           std::vector<double> vector);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<double>* Find(const std::string& id, Side side,
                                  const std::string& channel) const;

 private:
  std::size_t dimension_ = 0;
  std::map<std::tuple<std::string, Side, std::string>, std::vector<double>>
      vectors_;
};

enum class Aggregate { kAvg, kMax };
Aggregate ParseAggregate(std::string_view text);

struct ChannelScores {
  std::map<std::string, double> per_channel;
  double avg = 0.0;
  double max = 0.0;

  double Get(Aggregate aggregate) const {
    return aggregate == Aggregate::kAvg ? avg : max;
  }
};

// Fills avg/max from per_channel. Throws Error when empty.
ChannelScores Aggregated(std::map<std::string, double> per_channel);

// Cosine per channel. The reference vector is looked up under `ref_id` and
// the hypothesis under `hyp_id` (the same id for single-system stores).
// Throws MissingEmbeddingError naming the missing key.
ChannelScores ChannelSemantic(const std::string& ref_id,
                              const std::string& hyp_id,
                              const EmbeddingStore& store,
                              const std::vector<std::string>& channels);
ChannelScores ChannelSemantic(const std::string& id, const EmbeddingStore& store,
                              const std::vector<std::string>& channels);

// Translated texts keyed by (id, side, channel). Channel files are TSV:
// id<TAB>side<TAB>text[<TAB>!failed]; failed rows are not stored.
class TranslationStore {
 public:
  void Parse(std::istream& in, const std::string& channel);
  void Load(const std::filesystem::path& path, const std::string& channel);
  void Add(const std::string& id, Side side, const std::string& channel,
           std::string text);
  const std::string* Find(const std::string& id, Side side,
                          const std::string& channel) const;
  // True when the channel file marked this sentence "!failed".
  bool Failed(const std::string& id, Side side,
              const std::string& channel) const;
  std::size_t size() const { return texts_.size(); }

 private:
  std::map<std::tuple<std::string, Side, std::string>, std::string> texts_;
  std::set<std::tuple<std::string, Side, std::string>> failed_;
};

}  // namespace cseval

#endif  // CSEVAL_SEMANTIC_METRICS_H_
