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

#ifndef CSEVAL_METRIC_CONFIG_H_
#define CSEVAL_METRIC_CONFIG_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cseval/align.h"
#include "cseval/ortho_metrics.h"
#include "cseval/phonology.h"
#include "cseval/semantic_metrics.h"

namespace cseval {

enum class MetricKind { kWer, kCer, kMer, kWil, kPer, kPsd, kCosine, kBleu, kChrf };

// Error metrics: lower is better, correlated against GoldCER. Accuracy
// metrics: higher is better, correlated against 1 - GoldCER.
enum class Orientation { kError, kAccuracy };

struct MetricInfo {
  std::string_view name;
  MetricKind kind;
  Orientation orientation;
  std::string_view description;
};

const std::vector<MetricInfo>& RegisteredMetrics();
const MetricInfo& LookupMetric(std::string_view name);

// A metric plus its preprocessing and parameters, written as
//   name[:key=value,key=value...]
// Keys: norm=<items joined by '+'>, translit=ar|en|<scheme file>,
// ws=, wd=, wi= (PSD weights), channels=<ids joined by '+'>, agg=avg|max.
struct MetricConfig {
  MetricInfo info;
  std::string spec;
  Pipeline pipeline;
  PsdWeights weights;
  std::vector<std::string> channels{std::string(kBaseChannel)};
  Aggregate aggregate = Aggregate::kAvg;

  std::string name() const { return std::string(info.name); }
  // Everything after the metric name ("base" when empty).
  std::string config() const;
};

// Throws ConfigError on unknown metrics, keys or values.
MetricConfig ParseMetricConfig(std::string_view spec);

// One reference/hypothesis pair. Embedding and translation lookups use
// `ref_id` for the reference side and `hyp_id` for the hypothesis side.
struct ScoringItem {
  std::string ref_id;
  std::string hyp_id;
  std::string reference;
  std::string hypothesis;
};

// Per-sentence value plus what corpus-level pooling needs.
struct SentenceScore {
  double value = 0.0;
  EditCounts counts;
  double cost = 0.0;
  double ref_units = 0.0;
};

// External data a metric may need. Null members are fine as long as no
// configured metric requires them.
struct ScoringResources {
  const FeatureTable* features = nullptr;
  const G2PConverter* g2p = nullptr;
  const EmbeddingStore* embeddings = nullptr;
  const TranslationStore* translations = nullptr;
};

class MetricScorer {
 public:
  MetricScorer(MetricConfig config, ScoringResources resources);

  const MetricConfig& config() const { return config_; }
  Orientation orientation() const { return config_.info.orientation; }

  SentenceScore Score(const ScoringItem& item) const;

  // Corpus-level score: rate metrics pool their counts (sum of errors over
  // sum of reference units), PSD pools costs, semantic metrics average.
  double Pool(std::span<const SentenceScore> scores) const;

 private:
  std::string ChannelText(const ScoringItem& item, Side side,
                          const std::string& channel) const;

  MetricConfig config_;
  ScoringResources resources_;
};

}  // namespace cseval

#endif  // CSEVAL_METRIC_CONFIG_H_
