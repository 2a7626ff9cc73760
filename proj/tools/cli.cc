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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cseval/benchmark.h"
#include "cseval/codeswitch.h"
#include "cseval/corpus.h"
#include "cseval/error.h"
#include "cseval/metric_config.h"
#include "cseval/ortho_metrics.h"
#include "cseval/phonology.h"
#include "cseval/report.h"
#include "cseval/semantic_metrics.h"
#include "cseval/textnorm.h"
#include "cseval/translit.h"

namespace cseval::cli {

namespace fs = std::filesystem;

namespace {

// Options shared by the scoring subcommands.
struct ScoringOptions {
  std::vector<std::string> metrics;
  std::string norm;
  std::string translit;
  std::string g2p_arabic;
  std::string g2p_latin;
  std::string features;
  std::string g2p_policy = "skip";
  std::string embeddings;
  std::vector<std::string> translations;
};

struct RunConfig {
  ScoringOptions scoring;
  std::string ref_file;
  std::string hyp_file;
  std::string corpus;
  std::string system;
  std::string output;
  std::string out_dir;
  std::string annotator;
  std::string lexicon;
  std::string granularity = "both";
  std::string format = "md";
  std::string scheme = "ar";
  std::string text;
  unsigned jobs = 1;
};

// Resources loaded once and shared by every scorer.
struct LoadedResources {
  std::optional<FeatureTable> features;
  std::optional<G2PConverter> g2p;
  std::optional<EmbeddingStore> embeddings;
  std::optional<TranslationStore> translations;

  ScoringResources View() const {
    return {features ? &*features : nullptr, g2p ? &*g2p : nullptr,
            embeddings ? &*embeddings : nullptr,
            translations ? &*translations : nullptr};
  }
};

std::string WithDefaults(std::string spec, const ScoringOptions& options) {
  auto has = [&](const char* key) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) return false;
    const std::string rest = "," + spec.substr(colon + 1);
    return rest.find(std::string(",") + key + "=") != std::string::npos;
  };
  std::vector<std::string> extra;
  const std::string name = spec.substr(0, spec.find(':'));
  if (!options.norm.empty() && options.norm != "none" && name != "cosine" &&
      !has("norm")) {
    std::string norm = options.norm;
    for (char& c : norm) {
      if (c == ',') c = '+';
    }
    extra.push_back("norm=" + norm);
  }
  if (!options.translit.empty() && name != "cosine" && !has("translit")) {
    extra.push_back("translit=" + options.translit);
  }
  for (const auto& e : extra) {
    spec += spec.find(':') == std::string::npos ? ":" : ",";
    spec += e;
  }
  return spec;
}

void RequireFile(const std::string& path, std::vector<std::string>& errors) {
  if (!path.empty() && !fs::is_regular_file(path)) {
    errors.push_back("file not found: " + path);
  }
}

fs::path TableOr(const std::string& given, const fs::path& fallback) {
  return given.empty() ? DataDir() / fallback : fs::path(given);
}

// Parses metric specs and checks referenced files, collecting every problem
// before any work starts.
std::vector<MetricConfig> ValidateMetrics(const ScoringOptions& options,
                                          std::vector<std::string>& errors) {
  std::vector<MetricConfig> configs;
  if (!options.norm.empty()) {
    try {
      ParseProfile(options.norm);
    } catch (const Error& e) {
      errors.emplace_back(e.what());
    }
  }
  for (const auto& raw : options.metrics) {
    try {
      configs.push_back(ParseMetricConfig(WithDefaults(raw, options)));
    } catch (const Error& e) {
      errors.push_back("metric '" + raw + "': " + e.what());
    }
  }
  bool phonological = false;
  bool cosine = false;
  for (const auto& c : configs) {
    phonological |= c.info.kind == MetricKind::kPer ||
                    c.info.kind == MetricKind::kPsd;
    cosine |= c.info.kind == MetricKind::kCosine;
  }
  if (phonological) {
    for (const fs::path& p :
         {TableOr(options.g2p_arabic, "g2p/ara-Arab.tsv"),
          TableOr(options.g2p_latin, "g2p/eng-Latn.tsv"),
          TableOr(options.features, "features.csv")}) {
      if (!fs::is_regular_file(p)) errors.push_back("file not found: " + p.string());
    }
    if (options.g2p_policy != "skip" && options.g2p_policy != "error") {
      errors.push_back("--g2p-policy must be skip or error");
    }
  }
  if (cosine && options.embeddings.empty()) {
    errors.emplace_back("cosine metrics need --embeddings");
  }
  if (!options.embeddings.empty() && !fs::is_regular_file(options.embeddings)) {
    errors.push_back("file not found: " + options.embeddings);
  }
  for (const auto& t : options.translations) {
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      errors.push_back("--translations expects CHANNEL=FILE, got '" + t + "'");
    } else if (!fs::is_regular_file(t.substr(eq + 1))) {
      errors.push_back("file not found: " + t.substr(eq + 1));
    }
  }
  return configs;
}

LoadedResources LoadResources(const ScoringOptions& options,
                              const std::vector<MetricConfig>& configs) {
  LoadedResources r;
  bool phonological = false;
  for (const auto& c : configs) {
    phonological |= c.info.kind == MetricKind::kPer ||
                    c.info.kind == MetricKind::kPsd;
  }
  if (phonological) {
    r.features = LoadFeatureTable(TableOr(options.features, "features.csv"));
    r.g2p.emplace(
        LoadG2PRules(TableOr(options.g2p_arabic, "g2p/ara-Arab.tsv")),
        LoadG2PRules(TableOr(options.g2p_latin, "g2p/eng-Latn.tsv")),
        options.g2p_policy == "error" ? UnknownGraphemePolicy::kError
                                      : UnknownGraphemePolicy::kSkip);
    r.g2p->Validate(*r.features);
  }
  if (!options.embeddings.empty()) {
    r.embeddings = EmbeddingStore::Load(options.embeddings);
  }
  if (!options.translations.empty()) {
    r.translations.emplace();
    for (const auto& t : options.translations) {
      const std::size_t eq = t.find('=');
      r.translations->Load(t.substr(eq + 1), t.substr(0, eq));
    }
  }
  return r;
}

std::vector<MetricScorer> MakeScorers(const std::vector<MetricConfig>& configs,
                                      const LoadedResources& resources) {
  std::vector<MetricScorer> scorers;
  for (const auto& c : configs) scorers.emplace_back(c, resources.View());
  return scorers;
}

void AddScoringOptions(CLI::App* cmd, ScoringOptions& o,
                       std::vector<std::string> default_metrics) {
  o.metrics = std::move(default_metrics);
  cmd->add_option("-m,--metric", o.metrics,
                  "Metric spec name[:key=value,...]; repeatable")
      ->capture_default_str();
  cmd->add_option("--norm", o.norm,
                  "Default normalization: alif-ya,lowercase,extended,punct,"
                  "no-compose");
  cmd->add_option("--translit", o.translit,
                  "Default transliteration: ar, en, or a scheme file");
  cmd->add_option("--g2p-ar", o.g2p_arabic, "Arabic G2P rules (TSV)");
  cmd->add_option("--g2p-en", o.g2p_latin, "English G2P rules (TSV)");
  cmd->add_option("--features", o.features, "Articulatory feature table (CSV)");
  cmd->add_option("--g2p-policy", o.g2p_policy,
                  "Unknown graphemes: skip (with warning) or error")
      ->capture_default_str();
  cmd->add_option("--embeddings", o.embeddings, "Embedding store (JSON-lines)");
  cmd->add_option("--translations", o.translations,
                  "Translation channel CHANNEL=FILE (TSV); repeatable");
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> InputLines(const RunConfig& cfg, std::istream& in) {
  if (!cfg.text.empty()) return {cfg.text};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string Footer() {
  std::ostringstream s;
  s << "\nRegistered metrics:\n";
  for (const auto& m : RegisteredMetrics()) {
    s << "  " << m.name << std::string(8 - m.name.size(), ' ')
      << (m.orientation == Orientation::kError ? "[error]    " : "[accuracy] ")
      << m.description << '\n';
  }
  s << "\nMetric options (name:key=value,...):\n"
       "  norm=alif-ya+lowercase+extended+punct+no-compose\n"
       "  translit=ar|en|<scheme file>\n"
       "  ws=, wd=, wi=           PSD substitution/deletion/insertion weights\n"
       "  channels=base+ar+en+ja  semantic channels\n"
       "  agg=avg|max             channel aggregation\n"
       "\nPipeline flags (score, benchmark): --norm, --translit, --g2p-ar,\n"
       "  --g2p-en, --features, --g2p-policy, --embeddings, --translations.\n"
       "  Options inside a metric spec override them for that metric.\n"
       "\nEnvironment: CS_EVAL_DATA_DIR overrides the default table "
       "directory.\n";
  return s.str();
}

int Fail(std::ostream& err, const std::vector<std::string>& errors) {
  err << "configuration error" << (errors.size() > 1 ? "s" : "") << ":\n";
  for (const auto& e : errors) err << "  - " << e << '\n';
  return 2;
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

int RunScore(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  const bool files = !cfg.ref_file.empty() || !cfg.hyp_file.empty();
  if (files == !cfg.corpus.empty()) {
    errors.emplace_back("give either --ref and --hyp, or --corpus");
  }
  if (files && (cfg.ref_file.empty() || cfg.hyp_file.empty())) {
    errors.emplace_back("--ref and --hyp must be given together");
  }
  RequireFile(cfg.ref_file, errors);
  RequireFile(cfg.hyp_file, errors);
  RequireFile(cfg.corpus, errors);
  std::vector<MetricConfig> configs = ValidateMetrics(cfg.scoring, errors);
  if (!errors.empty()) return Fail(err, errors);

  std::vector<ScoringItem> items;
  if (files) {
    const auto refs = ReadLines(cfg.ref_file);
    const auto hyps = ReadLines(cfg.hyp_file);
    if (refs.size() != hyps.size()) {
      return Fail(err, {"--ref has " + std::to_string(refs.size()) +
                        " lines but --hyp has " + std::to_string(hyps.size())});
    }
    for (std::size_t i = 0; i < refs.size(); ++i) {
      const std::string id = std::to_string(i + 1);
      items.push_back({id, id, refs[i], hyps[i]});
    }
  } else {
    const Corpus corpus = LoadCorpus(cfg.corpus);
    const std::vector<std::string> systems = SystemIds(corpus);
    if (cfg.system.empty() && systems.size() > 1) {
      return Fail(err, {"corpus has several systems; choose one with --system"});
    }
    const std::string system =
        cfg.system.empty() && !systems.empty() ? systems.front() : cfg.system;
    for (const auto& r : corpus) {
      if (r.unclear) continue;
      auto it = r.hypotheses.find(system);
      if (it == r.hypotheses.end()) continue;
      items.push_back({r.utterance_id, r.utterance_id + "/" + system,
                       r.reference, it->second});
    }
  }

  const LoadedResources resources = LoadResources(cfg.scoring, configs);
  const std::vector<MetricScorer> scorers = MakeScorers(configs, resources);
  std::ostringstream csv;
  csv << "id";
  for (const auto& s : scorers) csv << ',' << CsvField(s.config().spec);
  csv << '\n';
  std::vector<std::vector<SentenceScore>> pooled(scorers.size());
  for (const auto& item : items) {
    csv << CsvField(item.ref_id);
    for (std::size_t k = 0; k < scorers.size(); ++k) {
      try {
        SentenceScore s = scorers[k].Score(item);
        csv << ',' << FormatValue(s.value);
        pooled[k].push_back(s);
      } catch (const EmptyReferenceError& e) {
        err << "warning: " << item.ref_id << ": " << e.what() << '\n';
        csv << ",undefined";
      } catch (const TranslationFailedError& e) {
        err << "warning: " << item.ref_id << ": " << e.what() << '\n';
        csv << ",undefined";
      }
    }
    csv << '\n';
  }
  csv << "pooled";
  for (std::size_t k = 0; k < scorers.size(); ++k) {
    csv << ','
        << (pooled[k].empty() ? "undefined"
                              : FormatValue(scorers[k].Pool(pooled[k])));
  }
  csv << '\n';
  if (cfg.output.empty()) {
    out << csv.str();
  } else {
    WriteFile(cfg.output, csv.str());
  }
  return 0;
}

int RunBenchmark(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  RequireFile(cfg.corpus, errors);
  RequireFile(cfg.lexicon, errors);
  std::vector<MetricConfig> configs = ValidateMetrics(cfg.scoring, errors);
  if (!errors.empty()) return Fail(err, errors);

  const Corpus corpus = LoadCorpus(cfg.corpus);
  std::optional<LanguageLexicon> lexicon;
  if (!cfg.lexicon.empty()) lexicon = LoadLanguageLexicon(cfg.lexicon);
  const LoadedResources resources = LoadResources(cfg.scoring, configs);
  const std::vector<MetricScorer> scorers = MakeScorers(configs, resources);

  BenchmarkOptions options;
  if (!cfg.annotator.empty()) options.annotator = cfg.annotator;
  options.jobs = cfg.jobs;
  options.language_lexicon = lexicon ? &*lexicon : nullptr;

  const ScoredCorpus scored = ScoreCorpus(corpus, scorers, options);
  const CorrelationReport correlations =
      SentenceCorrelations(corpus, scorers, scored, options);
  for (const auto& w : correlations.warnings) err << "warning: " << w << '\n';

  std::ostringstream pairs_csv, corr_csv, corr_md, rec_csv, sys_csv, sys_md;
  WriteSentenceScoresCsv(scorers, scored, pairs_csv);
  WriteCorrelationCsv(correlations, corr_csv);
  WriteCorrelationMarkdown(correlations, corr_md);
  WriteRecordingCsv(correlations, rec_csv);
  std::optional<SystemReport> systems;
  if (!scored.pairs.empty()) {
    systems = SystemScores(scorers, scored);
    WriteSystemCsv(*systems, sys_csv);
    WriteSystemMarkdown(*systems, sys_md);
  }

  out << corr_md.str();
  if (systems) out << '\n' << sys_md.str();
  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    WriteFile(dir / "sentence_scores.csv", pairs_csv.str());
    WriteFile(dir / "sentence_correlations.csv", corr_csv.str());
    WriteFile(dir / "sentence_correlations.md", corr_md.str());
    WriteFile(dir / "per_recording.csv", rec_csv.str());
    if (systems) {
      WriteFile(dir / "system_scores.csv", sys_csv.str());
      WriteFile(dir / "system_scores.md", sys_md.str());
    }
  }
  return 0;
}

int RunIaa(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  RequireFile(cfg.corpus, errors);
  if (!errors.empty()) return Fail(err, errors);
  std::vector<Granularity> levels;
  if (cfg.granularity == "both") {
    levels = {Granularity::kCer, Granularity::kWer};
  } else {
    try {
      levels = {ParseGranularity(cfg.granularity)};
    } catch (const Error& e) {
      return Fail(err, {e.what()});
    }
  }
  const Corpus corpus = LoadCorpus(cfg.corpus);
  for (Granularity g : levels) {
    const IaaReport report = IaaMatrix(corpus, g);
    if (cfg.format == "csv") {
      WriteIaaCsv(report, out);
    } else {
      WriteIaaMarkdown(report, out);
    }
    out << '\n';
  }
  return 0;
}

int RunCmi(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> errors;
  RequireFile(cfg.corpus, errors);
  RequireFile(cfg.lexicon, errors);
  if (!errors.empty()) return Fail(err, errors);
  std::optional<LanguageLexicon> lexicon;
  if (!cfg.lexicon.empty()) lexicon = LoadLanguageLexicon(cfg.lexicon);
  const Corpus corpus = LoadCorpus(cfg.corpus);
  std::ostringstream csv;
  csv << "utterance_id,recording_id,n,p,cmi\n";
  for (const auto& r : corpus) {
    if (r.unclear) continue;
    const LanguageTaggedUtterance u =
        TagLanguages(Tokenize(r.reference), lexicon ? &*lexicon : nullptr);
    csv << CsvField(r.utterance_id) << ',' << CsvField(r.recording_id) << ','
        << u.n << ',' << u.p << ','
        << (u.n ? FormatValue(Cmi(u)) : std::string("undefined")) << '\n';
    if (u.n == 0) {
      err << "warning: " << r.utterance_id
          << ": no language-dependent tokens, skipped in recording CMI\n";
    }
  }
  if (cfg.output.empty()) {
    out << csv.str() << '\n';
  } else {
    WriteFile(cfg.output, csv.str());
  }
  out << "recording_id,cmi\n";
  for (const auto& [recording, cmi] :
       RecordingCmis(corpus, lexicon ? &*lexicon : nullptr)) {
    out << CsvField(recording) << ',' << FormatValue(cmi) << '\n';
  }
  return 0;
}

int RunG2P(const RunConfig& cfg, std::istream& in, std::ostream& out,
           std::ostream& err) {
  const ScoringOptions& o = cfg.scoring;
  std::vector<std::string> errors;
  if (o.g2p_policy != "skip" && o.g2p_policy != "error") {
    errors.emplace_back("--g2p-policy must be skip or error");
  }
  for (const fs::path& p : {TableOr(o.g2p_arabic, "g2p/ara-Arab.tsv"),
                            TableOr(o.g2p_latin, "g2p/eng-Latn.tsv"),
                            TableOr(o.features, "features.csv")}) {
    RequireFile(p.string(), errors);
  }
  if (!errors.empty()) return Fail(err, errors);
  const FeatureTable table =
      LoadFeatureTable(TableOr(o.features, "features.csv"));
  const G2PConverter g2p(
      LoadG2PRules(TableOr(o.g2p_arabic, "g2p/ara-Arab.tsv")),
      LoadG2PRules(TableOr(o.g2p_latin, "g2p/eng-Latn.tsv")),
      o.g2p_policy == "error" ? UnknownGraphemePolicy::kError
                              : UnknownGraphemePolicy::kSkip);
  g2p.Validate(table);
  for (const auto& line : InputLines(cfg, in)) {
    std::vector<std::string> warnings;
    out << Join(g2p.Convert(line, &warnings)) << '\n';
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  }
  return 0;
}

int RunTranslit(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const TransliterationScheme scheme = ResolveScheme(cfg.scheme);
  const NormalizationProfile profile = ParseProfile(cfg.scoring.norm);
  for (const auto& line : InputLines(cfg, in)) {
    out << Normalize(scheme.Transliterate(Normalize(line, profile)), profile)
        << '\n';
  }
  return 0;
}

int RunNormalize(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const NormalizationProfile profile = ParseProfile(cfg.scoring.norm);
  for (const auto& line : InputLines(cfg, in)) {
    out << Normalize(line, profile) << '\n';
  }
  return 0;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"cs-eval: code-switching ASR evaluation toolkit", "cs-eval"};
  app.footer(Footer());
  app.set_config("--config", "", "TOML config file with one [section] per subcommand (flags take precedence)");
  app.require_subcommand(1);

  RunConfig cfg;

  auto* score = app.add_subcommand("score", "Score hypotheses against references");
  AddScoringOptions(score, cfg.scoring, {"wer", "cer", "mer", "wil"});
  score->add_option("--ref", cfg.ref_file, "Reference lines (UTF-8)");
  score->add_option("--hyp", cfg.hyp_file, "Hypothesis lines (UTF-8)");
  score->add_option("--corpus", cfg.corpus, "Corpus (JSON-lines)");
  score->add_option("--system", cfg.system, "System id when scoring a corpus");
  score->add_option("-o,--output", cfg.output, "CSV output file (default stdout)");

  auto* bench = app.add_subcommand(
      "benchmark", "Correlate metrics with GoldCER and rank systems");
  AddScoringOptions(bench, cfg.scoring, {"cer", "wer", "mer", "wil"});
  bench->add_option("--corpus", cfg.corpus, "Corpus (JSON-lines)")
      ->required();
  bench->add_option("--out-dir", cfg.out_dir, "Directory for report files");
  bench->add_option("--annotator", cfg.annotator,
                    "Annotator whose minimal edits define GoldCER");
  bench->add_option("-j,--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--lexicon", cfg.lexicon,
                    "Language lexicon word<TAB>L1|L2|Other for CMI");

  auto* iaa = app.add_subcommand("iaa", "Inter-annotator agreement matrix");
  iaa->add_option("--corpus", cfg.corpus, "Corpus (JSON-lines)")
      ->required();
  iaa->add_option("--granularity", cfg.granularity, "cer, wer or both")
      ->capture_default_str();
  iaa->add_option("--format", cfg.format, "md or csv")
      ->check(CLI::IsMember({"md", "csv"}))
      ->capture_default_str();

  auto* cmi = app.add_subcommand("cmi", "Code-mixing index per utterance and recording");
  cmi->add_option("--corpus", cfg.corpus, "Corpus (JSON-lines)")
      ->required();
  cmi->add_option("--lexicon", cfg.lexicon,
                  "Language lexicon word<TAB>L1|L2|Other");
  cmi->add_option("-o,--output", cfg.output, "Per-utterance CSV file");

  auto* g2p = app.add_subcommand("g2p", "Convert text to IPA phones");
  g2p->add_option("--text", cfg.text, "Input text (default: stdin lines)");
  g2p->add_option("--g2p-ar", cfg.scoring.g2p_arabic, "Arabic G2P rules (TSV)");
  g2p->add_option("--g2p-en", cfg.scoring.g2p_latin, "English G2P rules (TSV)");
  g2p->add_option("--features", cfg.scoring.features, "Feature table (CSV)");
  g2p->add_option("--g2p-policy", cfg.scoring.g2p_policy, "skip or error")
      ->capture_default_str();

  auto* translit = app.add_subcommand("translit", "Transliterate text");
  translit->add_option("--text", cfg.text, "Input text (default: stdin lines)");
  translit->add_option("--scheme", cfg.scheme, "ar, en, or a scheme file")
      ->capture_default_str();
  translit->add_option("--norm", cfg.scoring.norm, "Normalization profile");

  auto* normalize = app.add_subcommand("normalize", "Normalize text");
  normalize->add_option("--text", cfg.text, "Input text (default: stdin lines)");
  normalize->add_option("--norm", cfg.scoring.norm,
                        "alif-ya,lowercase,extended,punct,no-compose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (score->parsed()) return RunScore(cfg, out, err);
    if (bench->parsed()) return RunBenchmark(cfg, out, err);
    if (iaa->parsed()) return RunIaa(cfg, out, err);
    if (cmi->parsed()) return RunCmi(cfg, out, err);
    if (g2p->parsed()) return RunG2P(cfg, std::cin, out, err);
    if (translit->parsed()) return RunTranslit(cfg, std::cin, out);
    if (normalize->parsed()) return RunNormalize(cfg, std::cin, out);
  } catch (const ConfigError& e) {
    return Fail(err, {e.what()});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cseval::cli
