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

#include "cseval/phonology.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cseval/error.h"
#include "cseval/ortho_metrics.h"
#include "cseval/textnorm.h"
#include "cseval/unicode.h"

namespace cseval {

namespace {

std::string StripCr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string TrimSpaces(const std::string& s) {
  std::size_t b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

FeatureValue ParseCell(const std::string& cell, std::size_t line) {
  if (cell == "+") return FeatureValue::kPlus;
  if (cell == "-" || cell == "−") return FeatureValue::kMinus;
  if (cell == "0") return FeatureValue::kZero;
  throw ParseError("feature cell must be +, - or 0, got '" + cell + "'", line);
}

PhoneSequence ParsePhones(const std::string& field) {
  PhoneSequence phones;
  std::istringstream in(field);
  std::string phone;
  while (in >> phone) {
    if (phone != "∅") phones.push_back(phone);
  }
  return phones;
}

void CheckPhones(const PhoneSequence& phones, const FeatureTable& table) {
  for (const auto& p : phones) {
    if (!table.Contains(p)) throw UnknownPhoneError("unknown phone '" + p + "'");
  }
}

}  // namespace

FeatureTable::FeatureTable(
    std::vector<std::string> feature_names,
    std::map<std::string, std::vector<FeatureValue>> phones)
    : feature_names_(std::move(feature_names)), phones_(std::move(phones)) {
  if (feature_names_.empty()) {
    throw ParseError("feature table needs at least one feature");
  }
  for (const auto& [phone, values] : phones_) {
    if (values.size() != feature_names_.size()) {
      throw ParseError("phone '" + phone + "' has " +
                       std::to_string(values.size()) + " features, expected " +
                       std::to_string(feature_names_.size()));
    }
  }
}

const std::vector<FeatureValue>& FeatureTable::Features(
    const std::string& phone) const {
  auto it = phones_.find(phone);
  if (it == phones_.end()) {
    throw UnknownPhoneError("unknown phone '" + phone + "'");
  }
  return it->second;
}

double FeatureTable::Similarity(const std::string& x,
                                const std::string& y) const {
  const auto& a = Features(x);
  const auto& b = Features(y);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++differing;
  }
  return 1.0 - static_cast<double>(differing) /
                   static_cast<double>(feature_names_.size());
}

double PhoneSimilarity(const std::string& x, const std::string& y,
                       const FeatureTable& table) {
  return table.Similarity(x, y);
}

FeatureTable ParseFeatureTable(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  std::map<std::string, std::vector<FeatureValue>> phones;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (TrimSpaces(line).empty()) continue;
    std::vector<std::string> cells = Split(line, ',');
    for (auto& c : cells) c = TrimSpaces(c);
    if (names.empty()) {
      if (cells.size() < 2 || cells[0] != "phone") {
        throw ParseError("header must be 'phone,<feature>,...'", line_no);
      }
      names.assign(cells.begin() + 1, cells.end());
      continue;
    }
    if (cells.size() != names.size() + 1) {
      throw ParseError("expected " + std::to_string(names.size() + 1) +
                           " cells, got " + std::to_string(cells.size()),
                       line_no);
    }
    if (cells[0].empty()) throw ParseError("empty phone symbol", line_no);
    std::vector<FeatureValue> values;
    values.reserve(names.size());
    for (std::size_t i = 1; i < cells.size(); ++i) {
      values.push_back(ParseCell(cells[i], line_no));
    }
    if (!phones.emplace(cells[0], std::move(values)).second) {
      throw DuplicateKeyError("duplicate phone '" + cells[0] + "'", line_no);
    }
  }
  if (names.empty()) throw ParseError("feature table is empty");
  return FeatureTable(std::move(names), std::move(phones));
}

FeatureTable LoadFeatureTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open feature table " + path.string());
  return ParseFeatureTable(in);
}

G2PRuleSet::G2PRuleSet(std::string language, std::vector<G2PRule> rules)
    : language_(std::move(language)), rules_(std::move(rules)) {}

const G2PRule* G2PRuleSet::Match(std::u32string_view word,
                                 std::size_t pos) const {
  const G2PRule* best = nullptr;
  for (const G2PRule& rule : rules_) {
    const std::size_t len = rule.grapheme.size();
    if (best && len <= best->grapheme.size()) continue;
    if (word.substr(pos, len) != rule.grapheme) continue;
    if (rule.left.size() > pos) continue;
    if (word.substr(pos - rule.left.size(), rule.left.size()) != rule.left) {
      continue;
    }
    if (rule.left_at_word_start && pos != rule.left.size()) continue;
    const std::size_t end = pos + len;
    if (word.substr(end, rule.right.size()) != rule.right) continue;
    if (rule.right_at_word_end && end + rule.right.size() != word.size()) {
      continue;
    }
    best = &rule;
  }
  return best;
}

void G2PRuleSet::Validate(const FeatureTable& table) const {
  for (const G2PRule& rule : rules_) {
    for (const auto& phone : rule.phones) {
      if (!table.Contains(phone)) {
        throw UnknownPhoneError(language_ + " rule '" +
                                unicode::ToUtf8(rule.grapheme) +
                                "' emits unknown phone '" + phone + "'");
      }
    }
  }
}

G2PRuleSet ParseG2PRules(std::istream& in, std::string default_language) {
  std::string language = std::move(default_language);
  std::vector<G2PRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripCr(line);
    if (TrimSpaces(line).empty()) continue;
    if (line[0] == '#') {
      std::vector<std::string> fields = Split(line, '\t');
      if (fields[0] == "#language" && fields.size() > 1) {
        language = TrimSpaces(fields[1]);
      }
      continue;
    }
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() < 2 || fields.size() > 4 || fields[0].empty()) {
      throw ParseError("expected grapheme<TAB>ipa[<TAB>left<TAB>right]",
                       line_no);
    }
    G2PRule rule;
    rule.grapheme = unicode::ToUtf32(fields[0]);
    rule.phones = ParsePhones(fields[1]);
    if (fields.size() > 2) {
      std::u32string left = unicode::ToUtf32(TrimSpaces(fields[2]));
      if (!left.empty() && left.front() == U'#') {
        rule.left_at_word_start = true;
        left.erase(0, 1);
      }
      rule.left = std::move(left);
    }
    if (fields.size() > 3) {
      std::u32string right = unicode::ToUtf32(TrimSpaces(fields[3]));
      if (!right.empty() && right.back() == U'#') {
        rule.right_at_word_end = true;
        right.pop_back();
      }
      rule.right = std::move(right);
    }
    rules.push_back(std::move(rule));
  }
  return G2PRuleSet(std::move(language), std::move(rules));
}

G2PRuleSet LoadG2PRules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open G2P rules " + path.string());
  return ParseG2PRules(in, path.stem().string());
}

G2PConverter::G2PConverter(G2PRuleSet arabic, G2PRuleSet latin,
                           UnknownGraphemePolicy policy)
    : arabic_(std::move(arabic)), latin_(std::move(latin)), policy_(policy) {}

void G2PConverter::Validate(const FeatureTable& table) const {
  arabic_.Validate(table);
  latin_.Validate(table);
}

void G2PConverter::ConvertRun(std::u32string_view run, const G2PRuleSet& rules,
                              PhoneSequence& out,
                              std::vector<std::string>* warnings) const {
  std::size_t pos = 0;
  while (pos < run.size()) {
    const G2PRule* rule = rules.Match(run, pos);
    if (rule == nullptr) {
      const std::string what = "no " + rules.language() + " rule for '" +
                               unicode::ToUtf8(run[pos]) + "' in '" +
                               unicode::ToUtf8(run) + "'";
      if (policy_ == UnknownGraphemePolicy::kError) {
        throw UnknownGraphemeError(what);
      }
      if (warnings) warnings->push_back(what);
      ++pos;
      continue;
    }
    out.insert(out.end(), rule->phones.begin(), rule->phones.end());
    pos += rule->grapheme.size();
  }
}

PhoneSequence G2PConverter::Convert(std::string_view text,
                                    std::vector<std::string>* warnings) const {
  PhoneSequence phones;
  for (const Token& token : Tokenize(text)) {
    if (token.is_tag) continue;
    for (ScriptRun& run : SplitScriptRuns(unicode::ToUtf32(token.surface))) {
      if (run.script == Script::kArabic) {
        ConvertRun(run.text, arabic_, phones, warnings);
      } else {
        for (char32_t& c : run.text) c = unicode::ToLowerLatin(c);
        ConvertRun(run.text, latin_, phones, warnings);
      }
    }
  }
  return phones;
}

double Per(const PhoneSequence& ref, const PhoneSequence& hyp) {
  return WerFromCounts(AlignUnit(ref, hyp).counts);
}

AlignmentResult AlignPhones(const PhoneSequence& ref, const PhoneSequence& hyp,
                            const PsdWeights& weights,
                            const FeatureTable& table) {
  for (double w : {weights.sub, weights.del, weights.ins}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("PSD weights must be finite and non-negative");
    }
  }
  CheckPhones(ref, table);
  CheckPhones(hyp, table);
  CostModel<std::string> model{
      [&](const std::string& a, const std::string& b) {
        return weights.sub * (1.0 - table.Similarity(a, b));
      },
      weights.del, weights.ins,
      [](const std::string& a, const std::string& b) { return a == b; }};
  return Align(ref, hyp, model);
}

double Psd(const PhoneSequence& ref, const PhoneSequence& hyp,
           const PsdWeights& weights, const FeatureTable& table) {
  if (ref.empty()) {
    if (hyp.empty()) return 0.0;
    throw EmptyReferenceError("PSD needs a non-empty reference phone sequence");
  }
  return AlignPhones(ref, hyp, weights, table).cost /
         static_cast<double>(ref.size());
}

std::filesystem::path DataDir() {
  if (const char* env = std::getenv("CS_EVAL_DATA_DIR"); env && *env) {
    return env;
  }
  return CSEVAL_DEFAULT_DATA_DIR;
}

}  // namespace cseval
