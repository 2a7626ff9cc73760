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

#include "cseval/semantic_metrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"

#include "cseval/error.h"
#include "cseval/ortho_metrics.h"
#include "cseval/unicode.h"

namespace cseval {

namespace {

template <typename Seq>
std::map<Seq, std::size_t> CountNgrams(const std::vector<typename Seq::value_type>&
                                           symbols,
                                       std::size_t n) {
  std::map<Seq, std::size_t> counts;
  if (symbols.size() < n) return counts;
  for (std::size_t i = 0; i + n <= symbols.size(); ++i) {
    ++counts[Seq(symbols.begin() + static_cast<std::ptrdiff_t>(i),
                 symbols.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

template <typename Map>
std::size_t ClippedMatches(const Map& ref, const Map& hyp) {
  std::size_t matches = 0;
  for (const auto& [gram, count] : hyp) {
    auto it = ref.find(gram);
    if (it != ref.end()) matches += std::min(count, it->second);
  }
  return matches;
}

std::string StripCr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("cosine of vectors with dimensions " +
                                 std::to_string(a.size()) + " and " +
                                 std::to_string(b.size()));
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw ZeroVectorError("cosine of an all-zero vector");
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double Bleu(const std::vector<std::string>& ref,
            const std::vector<std::string>& hyp) {
  if (ref.empty()) throw EmptyReferenceError("BLEU needs a non-empty reference");
  if (hyp.empty()) return 0.0;
  using Gram = std::vector<std::string>;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ref_grams = CountNgrams<Gram>(ref, n);
    const auto hyp_grams = CountNgrams<Gram>(hyp, n);
    const double matches =
        static_cast<double>(ClippedMatches(ref_grams, hyp_grams));
    const double total =
        static_cast<double>(hyp.size() >= n ? hyp.size() - n + 1 : 0);
    if (n == 1) {
      if (matches == 0.0) return 0.0;
      log_sum += std::log(matches / total);
    } else {
      log_sum += std::log((matches + 1.0) / (total + 1.0));
    }
  }
  const double r = static_cast<double>(ref.size());
  const double c = static_cast<double>(hyp.size());
  const double brevity = c >= r ? 1.0 : std::exp(1.0 - r / c);
  return std::clamp(brevity * std::exp(log_sum / 4.0), 0.0, 1.0);
}

double Chrf(std::string_view ref, std::string_view hyp) {
  const std::u32string r = unicode::ToUtf32(ref);
  const std::u32string h = unicode::ToUtf32(hyp);
  if (r.empty()) throw EmptyReferenceError("chrF needs a non-empty reference");
  const std::vector<char32_t> rs(r.begin(), r.end());
  const std::vector<char32_t> hs(h.begin(), h.end());
  constexpr double kBeta2 = 4.0;
  double f_sum = 0.0;
  std::size_t orders = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ref_grams = CountNgrams<std::u32string>(rs, n);
    if (ref_grams.empty()) break;
    ++orders;
    const auto hyp_grams = CountNgrams<std::u32string>(hs, n);
    const double matches =
        static_cast<double>(ClippedMatches(ref_grams, hyp_grams));
    const double ref_total = static_cast<double>(rs.size() - n + 1);
    const double hyp_total =
        static_cast<double>(hs.size() >= n ? hs.size() - n + 1 : 0);
    const double precision = hyp_total > 0 ? matches / hyp_total : 0.0;
    const double recall = matches / ref_total;
    const double denom = kBeta2 * precision + recall;
    if (denom > 0.0) {
      f_sum += (1.0 + kBeta2) * precision * recall / denom;
    }
  }
  return std::clamp(f_sum / static_cast<double>(orders), 0.0, 1.0);
}

const char* SideName(Side side) { return side == Side::kRef ? "ref" : "hyp"; }

Side ParseSide(std::string_view text) {
  if (text == "ref") return Side::kRef;
  if (text == "hyp") return Side::kHyp;
  throw Error("side must be 'ref' or 'hyp', got '" + std::string(text) + "'");
}

void EmbeddingStore::Add(const std::string& id, Side side,
                         const std::string& channel,
                         std::vector<double> vector) {
  if (vector.empty()) throw DimensionMismatchError("empty embedding vector");
  for (double v : vector) {
    if (!std::isfinite(v)) {
      throw Error("non-finite embedding component for id '" + id + "'");
    }
  }
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) {
    throw DimensionMismatchError(
        "embedding for id '" + id + "' has dimension " +
        std::to_string(vector.size()) + ", store dimension is " +
        std::to_string(dimension_));
  }
  if (!vectors_.emplace(std::make_tuple(id, side, channel), std::move(vector))
           .second) {
    throw DuplicateIdError("duplicate embedding (" + id + ", " +
                           SideName(side) + ", " + channel + ")");
  }
}

const std::vector<double>* EmbeddingStore::Find(
    const std::string& id, Side side, const std::string& channel) const {
  auto it = vectors_.find(std::make_tuple(id, side, channel));
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingStore EmbeddingStore::Parse(std::istream& in) {
  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    try {
      const nlohmann::json record = nlohmann::json::parse(line);
      std::vector<double> vector =
          record.at("vector").get<std::vector<double>>();
      store.Add(record.at("id").get<std::string>(),
                ParseSide(record.at("side").get<std::string>()),
                record.at("channel").get<std::string>(), std::move(vector));
    } catch (const DuplicateIdError& e) {
      throw DuplicateIdError(e.what(), line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const DimensionMismatchError& e) {
      throw DimensionMismatchError("line " + std::to_string(line_no) + ": " +
                                   e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad embedding record: ") + e.what(),
                       line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return store;
}

EmbeddingStore EmbeddingStore::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open embedding file " + path.string());
  return Parse(in);
}

Aggregate ParseAggregate(std::string_view text) {
  if (text == "avg") return Aggregate::kAvg;
  if (text == "max") return Aggregate::kMax;
  throw ConfigError("aggregate must be avg or max, got '" + std::string(text) +
                    "'");
}

ChannelScores Aggregated(std::map<std::string, double> per_channel) {
  if (per_channel.empty()) throw Error("no channels to aggregate");
  ChannelScores scores;
  scores.per_channel = std::move(per_channel);
  double sum = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [channel, value] : scores.per_channel) {
    sum += value;
    best = std::max(best, value);
  }
  scores.avg = sum / static_cast<double>(scores.per_channel.size());
  scores.max = best;
  return scores;
}

ChannelScores ChannelSemantic(const std::string& ref_id,
                              const std::string& hyp_id,
                              const EmbeddingStore& store,
                              const std::vector<std::string>& channels) {
  std::map<std::string, double> per_channel;
  for (const std::string& channel : channels) {
    const auto* ref = store.Find(ref_id, Side::kRef, channel);
    if (!ref) {
      throw MissingEmbeddingError("missing embedding (" + ref_id +
                                  ", ref, " + channel + ")");
    }
    const auto* hyp = store.Find(hyp_id, Side::kHyp, channel);
    if (!hyp) {
      throw MissingEmbeddingError("missing embedding (" + hyp_id +
                                  ", hyp, " + channel + ")");
    }
    per_channel[channel] = Cosine(*ref, *hyp);
  }
  return Aggregated(std::move(per_channel));
}

ChannelScores ChannelSemantic(const std::string& id, const EmbeddingStore& store,
                              const std::vector<std::string>& channels) {
  return ChannelSemantic(id, id, store, channels);
}

void TranslationStore::Add(const std::string& id, Side side,
                           const std::string& channel, std::string text) {
  if (!texts_.emplace(std::make_tuple(id, side, channel), std::move(text))
           .second) {
    throw DuplicateIdError("duplicate translation (" + id + ", " +
                           SideName(side) + ", " + channel + ")");
  }
}

const std::string* TranslationStore::Find(const std::string& id, Side side,
                                          const std::string& channel) const {
  auto it = texts_.find(std::make_tuple(id, side, channel));
  return it == texts_.end() ? nullptr : &it->second;
}

bool TranslationStore::Failed(const std::string& id, Side side,
                              const std::string& channel) const {
  return failed_.count(std::make_tuple(id, side, channel)) > 0;
}

void TranslationStore::Parse(std::istream& in, const std::string& channel) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4 || fields[0].empty()) {
      throw ParseError("expected id<TAB>side<TAB>text[<TAB>!failed]", line_no);
    }
    Side side;
    try {
      side = ParseSide(fields[1]);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (fields.size() == 4) {
      if (fields[3] != "!failed") {
        throw ParseError("unknown marker '" + fields[3] + "'", line_no);
      }
      failed_.emplace(fields[0], side, channel);
      continue;
    }
    try {
      Add(fields[0], side, channel, fields[2]);
    } catch (const DuplicateIdError& e) {
      throw DuplicateIdError(e.what(), line_no);
    }
  }
}

void TranslationStore::Load(const std::filesystem::path& path,
                            const std::string& channel) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open translation file " + path.string());
  Parse(in, channel);
}

}  // namespace cseval
