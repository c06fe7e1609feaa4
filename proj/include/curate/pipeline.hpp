#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curate/analytics.hpp"
#include "curate/corpus_io.hpp"
#include "curate/domain_vector.hpp"
#include "curate/embeddings.hpp"
#include "curate/lexicon.hpp"
#include "curate/parallel.hpp"
#include "curate/stage1.hpp"
#include "curate/stage2.hpp"

namespace curate {

enum class StageSelection { stage1, stage2, both };

inline StageSelection parse_stage_selection(std::string_view s) {
  if (s == "1") return StageSelection::stage1;
  if (s == "2") return StageSelection::stage2;
  if (s == "both") return StageSelection::both;
  throw ConfigError("--stage must be 1, 2 or both (got '" + std::string(s) + "')");
}

inline const char* to_string(StageSelection s) {
  switch (s) {
    case StageSelection::stage1: return "1";
    case StageSelection::stage2: return "2";
    case StageSelection::both: return "both";
  }
  return "?";
}

/// Everything a filter run depends on. Keys of the JSON form match the CLI flags.
struct PipelineConfig {
  std::string embeddings;
  std::string lexicon;
  std::string vector;
  std::string corpus;
  std::string corpus_format = "jsonl";
  std::string output;
  std::string stage = "1";
  std::string strategy = "embedding";
  double tau = 0.2;
  double eta = 3.0;
  std::size_t min_tokens = 1;
  std::size_t min_hits = 1;
  std::size_t workers = default_workers();
  std::uint64_t seed = 0;
  std::string scorer = "mock";
  std::string endpoint;
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 1;
  std::size_t chunk_size = 4096;

  Stage1Config stage1_config() const {
    Stage1Config c;
    c.tau = tau;
    c.min_tokens_in_vocab = min_tokens;
    c.strategy = parse_strategy(strategy);
    c.min_hits = min_hits;
    return c;
  }

  Stage2Config stage2_config() const {
    Stage2Config c;
    c.eta = eta;
    c.batch_size = batch_size;
    c.scorer = parse_scorer_kind(scorer);
    if (!endpoint.empty()) c.endpoint = endpoint;
    c.max_in_flight = max_in_flight;
    return c;
  }
};

inline nlohmann::ordered_json to_json(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["embeddings"] = c.embeddings;
  j["lexicon"] = c.lexicon;
  j["vector"] = c.vector;
  j["corpus"] = c.corpus;
  j["corpus-format"] = c.corpus_format;
  j["output"] = c.output;
  j["stage"] = c.stage;
  j["strategy"] = c.strategy;
  j["tau"] = c.tau;
  j["eta"] = c.eta;
  j["min-tokens"] = c.min_tokens;
  j["min-hits"] = c.min_hits;
  j["workers"] = c.workers;
  j["seed"] = c.seed;
  j["scorer"] = c.scorer;
  j["endpoint"] = c.endpoint;
  j["batch-size"] = c.batch_size;
  j["max-in-flight"] = c.max_in_flight;
  j["chunk-size"] = c.chunk_size;
  return j;
}

inline PipelineConfig pipeline_config_from_json(const nlohmann::json& j) {
  PipelineConfig c;
  const auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("embeddings", c.embeddings);
  get("lexicon", c.lexicon);
  get("vector", c.vector);
  get("corpus", c.corpus);
  get("corpus-format", c.corpus_format);
  get("output", c.output);
  get("stage", c.stage);
  get("strategy", c.strategy);
  get("tau", c.tau);
  get("eta", c.eta);
  get("min-tokens", c.min_tokens);
  get("min-hits", c.min_hits);
  get("workers", c.workers);
  get("seed", c.seed);
  get("scorer", c.scorer);
  get("endpoint", c.endpoint);
  get("batch-size", c.batch_size);
  get("max-in-flight", c.max_in_flight);
  get("chunk-size", c.chunk_size);
  return c;
}

/// "<dir>/out.jsonl" + ".decisions.jsonl" -> "<dir>/out.decisions.jsonl".
inline std::filesystem::path sidecar_path(const std::filesystem::path& output, std::string_view suffix) {
  std::string base = output.string();
  for (std::string_view ext : {".jsonl", ".json", ".csv"}) {
    if (base.size() > ext.size() && base.ends_with(ext)) {
      base.resize(base.size() - ext.size());
      break;
    }
  }
  return base + std::string(suffix);
}

/// Loaded inputs; only the ones the selected stages need must be present.
struct PipelineResources {
  const EmbeddingTable* table = nullptr;
  const DomainVector* domain = nullptr;
  const DomainLexicon* lexicon = nullptr;
  Scorer* scorer = nullptr;
};

struct PipelineResult {
  std::vector<RetentionReport> retention;
  std::uint64_t skipped_records = 0;
  std::vector<SkipRecord> skip_samples;
  ScorerStats scorer_stats;
  QualityGateResult gate_totals;
};

/// Streams the corpus through the selected stages. Writes, next to output:
///   <base>.decisions.jsonl  one Stage-1 decision per input document
///   <base>.scores.jsonl     one score per document reaching Stage 2
///   <base>.retention.json   per-stage and combined retention
/// Every file is written in input order, so the bytes do not depend on workers.
inline PipelineResult run_pipeline(const PipelineConfig& cfg, const PipelineResources& res) {
  const StageSelection stages = parse_stage_selection(cfg.stage);
  const bool run1 = stages != StageSelection::stage2;
  const bool run2 = stages != StageSelection::stage1;
  if (cfg.output.empty()) throw ConfigError("--output is required");
  if (cfg.chunk_size == 0) throw ConfigError("--chunk-size must be positive");

  std::optional<Stage1Filter> filter;
  if (run1) filter.emplace(res.table, res.domain, res.lexicon, cfg.stage1_config());
  if (run2 && !res.scorer) throw ConfigError("stage 2 needs a scorer");
  const double eta = cfg.eta;

  CorpusReader reader(cfg.corpus, parse_corpus_format(cfg.corpus_format));
  CorpusWriter retained(cfg.output);
  std::optional<JsonlWriter> decisions_out;
  std::optional<JsonlWriter> scores_out;
  if (run1) decisions_out.emplace(sidecar_path(cfg.output, ".decisions.jsonl"));
  if (run2) scores_out.emplace(sidecar_path(cfg.output, ".scores.jsonl"));

  FilterSummary s1;
  CorpusStats s2_before, s2_after;
  PipelineResult result;
  std::vector<Document> chunk;
  std::vector<Document> survivors;
  std::vector<double> survivor_sims;
  while (reader.next_chunk(chunk, cfg.chunk_size)) {
    survivors.clear();
    survivor_sims.clear();
    if (run1) {
      const auto decisions = filter_batch(*filter, chunk, cfg.workers);
      for (std::size_t i = 0; i < chunk.size(); ++i) {
        decisions_out->write_line(to_json(decisions[i]));
        s1.before.add(chunk[i]);
        if (!decisions[i].retained) continue;
        s1.after.add(chunk[i]);
        survivor_sims.push_back(decisions[i].similarity);
        survivors.push_back(std::move(chunk[i]));
      }
    } else {
      survivors = std::move(chunk);
    }

    if (!run2) {
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        Annotations a;
        a["similarity"] = survivor_sims[i];
        retained.write(survivors[i], a);
      }
      continue;
    }

    const auto scores = res.scorer->score(survivors);
    for (const auto& s : scores) scores_out->write_line(to_json(s));
    const auto gate = apply_quality_threshold(scores, survivors, eta);
    s2_before += gate.before;
    s2_after += gate.after;
    result.gate_totals.missing_scores += gate.missing_scores;
    result.gate_totals.failed_scores += gate.failed_scores;
    for (std::size_t i : gate.retained) {
      Annotations a;
      if (run1) a["similarity"] = survivor_sims[i];
      a["edu_score"] = scores[i].score;
      retained.write(survivors[i], a);
    }
  }

  const CorpusStats final_stats = retained.finish();
  if (decisions_out) decisions_out->finish();
  if (scores_out) scores_out->finish();

  const CorpusStats input = reader.stats();
  if (run1) result.retention.push_back(retention_report(s1.before, s1.after, Stage::stage1));
  if (run2) result.retention.push_back(retention_report(s2_before, s2_after, Stage::stage2));
  result.retention.push_back(retention_report(input, final_stats, Stage::combined));
  result.skipped_records = reader.skipped();
  result.skip_samples = reader.skip_records();
  if (res.scorer) result.scorer_stats = res.scorer->stats();

  nlohmann::ordered_json report;
  report["retention"] = nlohmann::ordered_json::array();
  for (const auto& r : result.retention) report["retention"].push_back(to_json(r));
  report["skipped_records"] = result.skipped_records;
  if (run2) {
    report["missing_scores"] = result.gate_totals.missing_scores;
    report["failed_scores"] = result.gate_totals.failed_scores;
    report["clamped_scores"] = result.scorer_stats.clamped;
  }
  JsonlWriter report_out(sidecar_path(cfg.output, ".retention.json"));
  report_out.write_line(report);
  report_out.finish();
  return result;
}

}  // namespace curate
