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

#include "cseval/metric_config.h"

#include <charconv>
#include <cmath>

#include "cseval/error.h"
#include "cseval/textnorm.h"

namespace cseval {

namespace {

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double ParseWeight(const std::string& key, const std::string& value) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() ||
      !std::isfinite(out) || out < 0.0) {
    throw ConfigError("'" + key + "' must be a non-negative number, got '" +
                      value + "'");
  }
  return out;
}

bool IsRate(MetricKind kind) {
  return kind == MetricKind::kWer || kind == MetricKind::kCer ||
         kind == MetricKind::kMer || kind == MetricKind::kWil ||
         kind == MetricKind::kPer;
}

}  // namespace

const std::vector<MetricInfo>& RegisteredMetrics() {
  static const std::vector<MetricInfo> metrics = {
      {"wer", MetricKind::kWer, Orientation::kError, "word error rate"},
      {"cer", MetricKind::kCer, Orientation::kError,
       "character error rate (spaces count as characters)"},
      {"mer", MetricKind::kMer, Orientation::kError, "match error rate"},
      {"wil", MetricKind::kWil, Orientation::kError, "word information lost"},
      {"per", MetricKind::kPer, Orientation::kError, "phone error rate"},
      {"psd", MetricKind::kPsd, Orientation::kError,
       "phone similarity edit distance"},
      {"cosine", MetricKind::kCosine, Orientation::kAccuracy,
       "cosine similarity of sentence embeddings"},
      {"bleu", MetricKind::kBleu, Orientation::kAccuracy, "sentence BLEU"},
      {"chrf", MetricKind::kChrf, Orientation::kAccuracy, "character F-score"},
  };
  return metrics;
}

const MetricInfo& LookupMetric(std::string_view name) {
  for (const auto& info : RegisteredMetrics()) {
    if (info.name == name) return info;
  }
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

std::string MetricConfig::config() const {
  const std::size_t colon = spec.find(':');
  return colon == std::string::npos ? "base" : spec.substr(colon + 1);
}

MetricConfig ParseMetricConfig(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  MetricConfig config{LookupMetric(spec.substr(0, colon)), std::string(spec)};
  if (colon == std::string_view::npos) return config;
  const MetricKind kind = config.info.kind;
  const bool semantic = kind == MetricKind::kCosine ||
                        kind == MetricKind::kBleu || kind == MetricKind::kChrf;
  for (const std::string& item : SplitOn(spec.substr(colon + 1), ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("metric option '" + item + "' must be key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "norm" && kind != MetricKind::kCosine) {
      std::string items = value;
      for (char& c : items) {
        if (c == '+') c = ',';
      }
      config.pipeline.profile = ParseProfile(items);
    } else if (key == "translit" && kind != MetricKind::kCosine) {
      config.pipeline.scheme = ResolveScheme(value);
    } else if ((key == "ws" || key == "wd" || key == "wi") &&
               kind == MetricKind::kPsd) {
      double w = ParseWeight(key, value);
      (key == "ws" ? config.weights.sub
                   : key == "wd" ? config.weights.del : config.weights.ins) = w;
    } else if (key == "channels" && semantic) {
      config.channels = SplitOn(value, '+');
      for (const auto& c : config.channels) {
        if (c.empty()) throw ConfigError("empty channel id in '" + value + "'");
      }
    } else if (key == "agg" && semantic) {
      config.aggregate = ParseAggregate(value);
    } else {
      throw ConfigError("option '" + key + "' does not apply to metric '" +
                        config.name() + "'");
    }
  }
  return config;
}

MetricScorer::MetricScorer(MetricConfig config, ScoringResources resources)
    : config_(std::move(config)), resources_(resources) {
  const MetricKind kind = config_.info.kind;
  if (kind == MetricKind::kPer || kind == MetricKind::kPsd) {
    if (!resources_.g2p) {
      throw ConfigError("metric '" + config_.spec + "' needs G2P rules");
    }
    if (kind == MetricKind::kPsd && !resources_.features) {
      throw ConfigError("metric '" + config_.spec + "' needs a feature table");
    }
  }
  if (kind == MetricKind::kCosine && !resources_.embeddings) {
    throw ConfigError("metric '" + config_.spec + "' needs an embedding file");
  }
  for (const auto& channel : config_.channels) {
    if (channel != kBaseChannel && kind != MetricKind::kCosine &&
        !resources_.translations) {
      throw ConfigError("metric '" + config_.spec + "' uses channel '" +
                        channel + "' but no translations were given");
    }
  }
}

std::string MetricScorer::ChannelText(const ScoringItem& item, Side side,
                                      const std::string& channel) const {
  if (channel == kBaseChannel) {
    return config_.pipeline.Apply(side == Side::kRef ? item.reference
                                                     : item.hypothesis);
  }
  const std::string& id = side == Side::kRef ? item.ref_id : item.hyp_id;
  const std::string* text = resources_.translations->Find(id, side, channel);
  if (!text && resources_.translations->Failed(id, side, channel)) {
    throw TranslationFailedError("translation failed (" + id + ", " +
                                 SideName(side) + ", " + channel + ")");
  }
  if (!text) {
    throw MissingEmbeddingError("missing translation (" + id + ", " +
                                SideName(side) + ", " + channel + ")");
  }
  return config_.pipeline.Apply(*text);
}

SentenceScore MetricScorer::Score(const ScoringItem& item) const {
  SentenceScore s;
  switch (config_.info.kind) {
    case MetricKind::kWer:
    case MetricKind::kMer:
    case MetricKind::kWil: {
      const std::string ref = config_.pipeline.Apply(item.reference);
      const std::string hyp = config_.pipeline.Apply(item.hypothesis);
      s.counts = WordCounts(Surfaces(Tokenize(ref)), Surfaces(Tokenize(hyp)));
      s.value = config_.info.kind == MetricKind::kWer   ? WerFromCounts(s.counts)
                : config_.info.kind == MetricKind::kMer ? MerFromCounts(s.counts)
                                                        : WilFromCounts(s.counts);
      break;
    }
    case MetricKind::kCer: {
      s.counts = CharCounts(config_.pipeline.Apply(item.reference),
                            config_.pipeline.Apply(item.hypothesis));
      s.value = WerFromCounts(s.counts);
      break;
    }
    case MetricKind::kPer:
    case MetricKind::kPsd: {
      const PhoneSequence ref =
          resources_.g2p->Convert(config_.pipeline.Apply(item.reference));
      const PhoneSequence hyp =
          resources_.g2p->Convert(config_.pipeline.Apply(item.hypothesis));
      if (config_.info.kind == MetricKind::kPer) {
        s.counts = AlignUnit(ref, hyp).counts;
        s.value = WerFromCounts(s.counts);
      } else {
        if (ref.empty()) {
          s.value = Psd(ref, hyp, config_.weights, *resources_.features);
        } else {
          s.cost = AlignPhones(ref, hyp, config_.weights, *resources_.features)
                       .cost;
          s.value = s.cost / static_cast<double>(ref.size());
        }
      }
      s.ref_units = static_cast<double>(ref.size());
      break;
    }
    case MetricKind::kCosine: {
      s.value = ChannelSemantic(item.ref_id, item.hyp_id,
                                *resources_.embeddings, config_.channels)
                    .Get(config_.aggregate);
      break;
    }
    case MetricKind::kBleu:
    case MetricKind::kChrf: {
      std::map<std::string, double> per_channel;
      for (const auto& channel : config_.channels) {
        const std::string ref = ChannelText(item, Side::kRef, channel);
        const std::string hyp = ChannelText(item, Side::kHyp, channel);
        per_channel[channel] =
            config_.info.kind == MetricKind::kBleu
                ? Bleu(Surfaces(Tokenize(ref)), Surfaces(Tokenize(hyp)))
                : Chrf(Join(Surfaces(Tokenize(ref))),
                       Join(Surfaces(Tokenize(hyp))));
      }
      s.value = Aggregated(std::move(per_channel)).Get(config_.aggregate);
      break;
    }
  }
  if (IsRate(config_.info.kind)) {
    s.ref_units = static_cast<double>(s.counts.ref_length());
  }
  return s;
}

double MetricScorer::Pool(std::span<const SentenceScore> scores) const {
  if (scores.empty()) {
    throw Error("metric '" + config_.spec + "' has no scores to pool");
  }
  const MetricKind kind = config_.info.kind;
  if (IsRate(kind)) {
    EditCounts total;
    for (const auto& s : scores) total += s.counts;
    switch (kind) {
      case MetricKind::kMer: return MerFromCounts(total);
      case MetricKind::kWil: return WilFromCounts(total);
      default: return WerFromCounts(total);
    }
  }
  if (kind == MetricKind::kPsd) {
    double cost = 0.0;
    double units = 0.0;
    for (const auto& s : scores) {
      cost += s.cost;
      units += s.ref_units;
    }
    return units > 0.0 ? cost / units : 0.0;
  }
  double sum = 0.0;
  for (const auto& s : scores) sum += s.value;
  return sum / static_cast<double>(scores.size());
}

}  // namespace cseval
