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

#include "cseval/report.h"

#include <cstdio>

namespace cseval {

namespace {

const char* GranularityName(Granularity g) {
  return g == Granularity::kCer ? "CER" : "WER";
}

std::string Percent(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", rate * 100.0);
  return buf;
}

std::string MarkdownCell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string FormatValue(std::optional<double> value) {
  if (!value) return "undefined";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", *value == 0.0 ? 0.0 : *value);
  return buf;
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteSentenceScoresCsv(const std::vector<MetricScorer>& scorers,
                            const ScoredCorpus& scored, std::ostream& out) {
  out << "utterance_id,recording_id,system,gold_cer";
  for (const auto& s : scorers) out << ',' << CsvField(s.config().spec);
  out << '\n';
  for (const auto& pair : scored.pairs) {
    out << CsvField(pair.utterance_id) << ',' << CsvField(pair.recording_id)
        << ',' << CsvField(pair.system_id) << ',' << FormatValue(pair.gold_cer);
    for (const auto& score : pair.metric_scores) {
      out << ','
          << FormatValue(score ? std::optional<double>(score->value)
                               : std::nullopt);
    }
    out << '\n';
  }
}

void WriteCorrelationCsv(const CorrelationReport& report, std::ostream& out) {
  out << "metric,config,pearson,spearman,n\n";
  for (const auto& m : report.metrics) {
    out << CsvField(m.metric) << ',' << CsvField(m.config) << ','
        << FormatValue(m.overall.pearson) << ','
        << FormatValue(m.overall.spearman) << ',' << m.overall.n << '\n';
  }
}

void WriteRecordingCsv(const CorrelationReport& report, std::ostream& out) {
  out << "recording_id,cmi";
  for (const auto& m : report.metrics) out << ',' << CsvField(m.spec);
  out << '\n';
  for (const auto& [recording, cmi] : report.recording_cmi) {
    out << CsvField(recording) << ',' << FormatValue(cmi);
    for (const auto& m : report.metrics) {
      auto it = m.per_recording.find(recording);
      out << ','
          << FormatValue(it == m.per_recording.end() ? std::nullopt
                                                     : it->second.pearson);
    }
    out << '\n';
  }
  out << "stddev,";
  for (const auto& m : report.metrics) {
    out << ',' << FormatValue(m.per_recording_stddev);
  }
  out << '\n';
}

void WriteCorrelationMarkdown(const CorrelationReport& report,
                              std::ostream& out) {
  out << "## Sentence-level correlation with GoldCER\n\n"
      << "Pairs: " << report.pairs << " (excluded: "
      << report.excluded_unclear_records << " unclear records, "
      << report.excluded_pairs << " pairs without a usable minimal edit).\n"
      << "Accuracy metrics are correlated with 1 - GoldCER.\n\n"
      << "| Metric | Config | Pearson | Spearman | n | Per-recording SD |\n"
      << "|---|---|---|---|---|---|\n";
  for (const auto& m : report.metrics) {
    out << "| " << m.metric << " | " << MarkdownCell(m.config) << " | "
        << FormatValue(m.overall.pearson) << " | "
        << FormatValue(m.overall.spearman) << " | " << m.overall.n << " | "
        << FormatValue(m.per_recording_stddev) << " |\n";
  }
  if (report.recording_cmi.empty()) return;
  out << "\n## Per-recording Pearson\n\n| Recording | CMI |";
  for (const auto& m : report.metrics) out << ' ' << MarkdownCell(m.spec) << " |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < report.metrics.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& [recording, cmi] : report.recording_cmi) {
    out << "| " << MarkdownCell(recording) << " | " << FormatValue(cmi) << " |";
    for (const auto& m : report.metrics) {
      auto it = m.per_recording.find(recording);
      out << ' '
          << FormatValue(it == m.per_recording.end() ? std::nullopt
                                                     : it->second.pearson)
          << " |";
    }
    out << '\n';
  }
}

void WriteSystemCsv(const SystemReport& report, std::ostream& out) {
  out << "metric,config,system,score,rank,gold_rank,agrees\n";
  for (std::size_t s = 0; s < report.systems.size(); ++s) {
    out << "gold_cer,base," << CsvField(report.systems[s]) << ','
        << FormatValue(report.gold_cer[s]) << ',' << report.gold_ranks[s]
        << ',' << report.gold_ranks[s] << ",yes\n";
  }
  for (const auto& m : report.metrics) {
    for (std::size_t s = 0; s < report.systems.size(); ++s) {
      out << CsvField(m.metric) << ',' << CsvField(m.config) << ','
          << CsvField(report.systems[s]) << ',' << FormatValue(m.scores[s])
          << ',' << m.ranks[s] << ',' << report.gold_ranks[s] << ','
          << (m.agrees_with_gold ? "yes" : "no") << '\n';
    }
  }
}

void WriteSystemMarkdown(const SystemReport& report, std::ostream& out) {
  out << "## System-level scores (rank)\n\n| Metric | Config |";
  for (const auto& s : report.systems) out << ' ' << MarkdownCell(s) << " |";
  out << " Same ranking as GoldCER |\n|---|---|";
  for (std::size_t i = 0; i < report.systems.size(); ++i) out << "---|";
  out << "---|\n| gold_cer | base |";
  for (std::size_t s = 0; s < report.systems.size(); ++s) {
    out << ' ' << FormatValue(report.gold_cer[s]) << " ("
        << report.gold_ranks[s] << ") |";
  }
  out << " - |\n";
  for (const auto& m : report.metrics) {
    out << "| " << m.metric << " | " << MarkdownCell(m.config) << " |";
    for (std::size_t s = 0; s < report.systems.size(); ++s) {
      out << ' ' << FormatValue(m.scores[s]) << " (" << m.ranks[s] << ") |";
    }
    out << ' ' << (m.agrees_with_gold ? "yes" : "no") << " |\n";
  }
}

void WriteIaaCsv(const IaaReport& report, std::ostream& out) {
  out << "annotator";
  for (const auto& a : report.annotators) out << ',' << CsvField(a);
  out << ",H,R\n";
  for (const auto& a : report.annotators) {
    out << CsvField(a);
    for (const auto& b : report.annotators) {
      auto it = report.pairwise.find({a, b});
      out << ','
          << (a == b ? "" : it == report.pairwise.end()
                                ? "undefined"
                                : FormatValue(it->second));
    }
    auto h = report.vs_hypothesis.find(a);
    auto r = report.vs_reference.find(a);
    out << ','
        << (h == report.vs_hypothesis.end() ? "undefined"
                                            : FormatValue(h->second))
        << ','
        << (r == report.vs_reference.end() ? "undefined"
                                           : FormatValue(r->second))
        << '\n';
  }
  out << "avg,";
  for (std::size_t i = 1; i < report.annotators.size(); ++i) out << ',';
  out << FormatValue(report.pairwise_avg) << ','
      << FormatValue(report.hypothesis_avg) << ','
      << FormatValue(report.reference_avg) << '\n';
}

void WriteIaaMarkdown(const IaaReport& report, std::ostream& out) {
  out << "## Inter-annotator agreement (" << GranularityName(report.granularity)
      << ", %)\n\nItems: " << report.items << " (excluded unclear records: "
      << report.excluded_unclear << ")\n\n|   |";
  for (std::size_t i = 1; i < report.annotators.size(); ++i) {
    out << ' ' << MarkdownCell(report.annotators[i]) << " |";
  }
  out << " H | R |\n|---|";
  for (std::size_t i = 1; i < report.annotators.size(); ++i) out << "---|";
  out << "---|---|\n";
  for (std::size_t i = 0; i < report.annotators.size(); ++i) {
    const std::string& a = report.annotators[i];
    out << "| " << MarkdownCell(a) << " |";
    for (std::size_t j = 1; j < report.annotators.size(); ++j) {
      auto it = report.pairwise.find({a, report.annotators[j]});
      out << ' '
          << (j <= i || it == report.pairwise.end() ? ""
                                                    : Percent(it->second))
          << " |";
    }
    auto h = report.vs_hypothesis.find(a);
    auto r = report.vs_reference.find(a);
    out << ' ' << (h == report.vs_hypothesis.end() ? "" : Percent(h->second))
        << " | "
        << (r == report.vs_reference.end() ? "" : Percent(r->second)) << " |\n";
  }
  out << "| Avg |";
  for (std::size_t j = 1; j + 1 < report.annotators.size(); ++j) out << " |";
  out << ' ' << Percent(report.pairwise_avg) << " | "
      << Percent(report.hypothesis_avg) << " | "
      << Percent(report.reference_avg) << " |\n";
}

}  // namespace cseval
