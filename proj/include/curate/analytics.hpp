#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curate/document.hpp"
#include "curate/error.hpp"
#include "curate/stage1.hpp"
#include "curate/stage2.hpp"

namespace curate {

/// Shortest round-trip spelling of a double, locale independent.
inline std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

inline double round_cents(double v) { return std::round(v * 100.0) / 100.0; }

// ---------------------------------------------------------------- retention

enum class Stage { stage1, stage2, combined };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::stage1: return "stage1";
    case Stage::stage2: return "stage2";
    case Stage::combined: return "combined";
  }
  return "?";
}

struct RetentionReport {
  Stage stage = Stage::stage1;
  std::uint64_t docs_in = 0;
  std::uint64_t docs_out = 0;
  std::uint64_t tokens_in = 0;
  std::uint64_t tokens_out = 0;
  double retention_docs = 1.0;
  double retention_tokens = 1.0;
};

/// Exact retention ratios. An empty input counts as fully retained.
inline RetentionReport retention_report(const CorpusStats& before, const CorpusStats& after, Stage stage) {
  if (after.document_count > before.document_count || after.token_count > before.token_count) {
    throw Error(std::string("inconsistent ") + to_string(stage) + " counts: " +
                std::to_string(after.document_count) + " docs / " + std::to_string(after.token_count) +
                " tokens out of " + std::to_string(before.document_count) + " / " +
                std::to_string(before.token_count));
  }
  RetentionReport r{stage, before.document_count, after.document_count, before.token_count, after.token_count};
  if (before.document_count > 0) {
    r.retention_docs = static_cast<double>(after.document_count) / static_cast<double>(before.document_count);
  }
  if (before.token_count > 0) {
    r.retention_tokens = static_cast<double>(after.token_count) / static_cast<double>(before.token_count);
  }
  return r;
}

inline nlohmann::ordered_json to_json(const RetentionReport& r) {
  nlohmann::ordered_json j;
  j["stage"] = to_string(r.stage);
  j["docs_in"] = r.docs_in;
  j["docs_out"] = r.docs_out;
  j["tokens_in"] = r.tokens_in;
  j["tokens_out"] = r.tokens_out;
  j["retention_docs"] = r.retention_docs;
  j["retention_tokens"] = r.retention_tokens;
  return j;
}

// ---------------------------------------------------------------- cost model

/// Processing time and price of the two stages on a full corpus.
struct CostModel {
  double stage1_rate_per_hour = 44.0 / 177.0;
  double stage2_rate_per_hour = 16200.0 / 12000.0;
  double stage1_hours_full_corpus = 177.0;
  double stage2_hours_full_corpus = 12000.0;
  /// Fraction of the corpus Stage 1 lets through to Stage 2.
  double stage1_retention = 0.01;

  void validate() const {
    if (!(stage1_rate_per_hour > 0.0) || !(stage2_rate_per_hour > 0.0) || !(stage1_hours_full_corpus > 0.0) ||
        !(stage2_hours_full_corpus > 0.0)) {
      throw ConfigError("cost model rates and hours must be positive");
    }
    if (!(stage1_retention > 0.0) || stage1_retention > 1.0) {
      throw ConfigError("stage-1 retention must lie in (0, 1]");
    }
  }
};

enum class CostScenario { stage1_only, stage2_only, combined };

inline const char* to_string(CostScenario s) {
  switch (s) {
    case CostScenario::stage1_only: return "stage1_only";
    case CostScenario::stage2_only: return "stage2_only";
    case CostScenario::combined: return "combined";
  }
  return "?";
}

struct CostEstimate {
  double hours = 0.0;
  double cost = 0.0;
};

/// Stage 2 in the combined scenario only sees the Stage-1 survivors.
inline CostEstimate estimate_cost(const CostModel& m, CostScenario scenario) {
  m.validate();
  const double h1 = m.stage1_hours_full_corpus;
  const double h2 = m.stage2_hours_full_corpus;
  switch (scenario) {
    case CostScenario::stage1_only: return {h1, h1 * m.stage1_rate_per_hour};
    case CostScenario::stage2_only: return {h2, h2 * m.stage2_rate_per_hour};
    case CostScenario::combined: {
      const double h2_eff = h2 * m.stage1_retention;
      return {h1 + h2_eff, h1 * m.stage1_rate_per_hour + h2_eff * m.stage2_rate_per_hour};
    }
  }
  return {};
}

/// All three scenarios, hours and cost rounded to cents.
inline nlohmann::ordered_json cost_report(const CostModel& m) {
  nlohmann::ordered_json j;
  j["model"] = {{"stage1_rate_per_hour", m.stage1_rate_per_hour},
                {"stage2_rate_per_hour", m.stage2_rate_per_hour},
                {"stage1_hours_full_corpus", m.stage1_hours_full_corpus},
                {"stage2_hours_full_corpus", m.stage2_hours_full_corpus},
                {"stage1_retention", m.stage1_retention}};
  j["scenarios"] = nlohmann::ordered_json::array();
  for (auto s : {CostScenario::stage1_only, CostScenario::stage2_only, CostScenario::combined}) {
    const auto e = estimate_cost(m, s);
    nlohmann::ordered_json row;
    row["scenario"] = to_string(s);
    row["hours"] = round_cents(e.hours);
    row["cost"] = round_cents(e.cost);
    j["scenarios"].push_back(row);
  }
  return j;
}

// ---------------------------------------------------------------- sweeps

struct SweepPlan {
  std::vector<Strategy> strategies{Strategy::embedding};
  /// Embedding thresholds, ascending.
  std::vector<double> taus{0.0, 0.1, 0.2, 0.3, 0.4};
  /// Keyword thresholds, ascending.
  std::vector<std::size_t> min_hits{1, 2, 4, 8};
  std::size_t min_tokens_in_vocab = 1;
  /// Name used for the embedding rows (e.g. "glove-300d").
  std::string embedding_label = "embedding";
};

struct SweepResult {
  std::string strategy;
  double parameter = 0.0;
  double percent_kept = 0.0;
  /// Absent when nothing was kept.
  std::optional<double> mean_quality;
  double sem_quality = 0.0;
  /// Indices of kept documents, ascending.
  std::vector<std::size_t> retained;
};

namespace detail {

inline void summarize_quality(SweepResult& r, const std::vector<QualityScore>& scores, std::size_t total) {
  r.percent_kept = total == 0 ? 0.0 : 100.0 * static_cast<double>(r.retained.size()) / static_cast<double>(total);
  double sum = 0.0, sumsq = 0.0;
  std::size_t n = 0;
  for (std::size_t i : r.retained) {
    if (scores[i].error) continue;
    sum += scores[i].score;
    sumsq += scores[i].score * scores[i].score;
    ++n;
  }
  if (n == 0) return;
  const double mean = sum / static_cast<double>(n);
  r.mean_quality = mean;
  if (n > 1) {
    const double var = std::max(0.0, (sumsq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1));
    r.sem_quality = std::sqrt(var / static_cast<double>(n));
  }
}

}  // namespace detail

/// Percent kept and mean/SEM quality of the kept documents for every
/// (strategy, threshold) pair. Each document is scored and embedded once;
/// thresholds only re-cut the cached values, so kept sets are nested.
inline std::vector<SweepResult> threshold_sweep(const DomainVector* dv, const EmbeddingTable* table,
                                                const DomainLexicon* lexicon, const std::vector<Document>& docs,
                                                Scorer& quality, const SweepPlan& plan, std::size_t workers = 1) {
  if (!std::is_sorted(plan.taus.begin(), plan.taus.end())) throw ConfigError("sweep taus must be ascending");
  if (!std::is_sorted(plan.min_hits.begin(), plan.min_hits.end())) {
    throw ConfigError("sweep min_hits must be ascending");
  }
  const auto scores = quality.score(docs);
  std::vector<SweepResult> out;
  for (Strategy strategy : plan.strategies) {
    if (strategy == Strategy::none) {
      SweepResult r;
      r.strategy = "none";
      r.retained.resize(docs.size());
      for (std::size_t i = 0; i < docs.size(); ++i) r.retained[i] = i;
      detail::summarize_quality(r, scores, docs.size());
      out.push_back(std::move(r));
    } else if (strategy == Strategy::embedding) {
      Stage1Config cfg;
      cfg.min_tokens_in_vocab = plan.min_tokens_in_vocab;
      const Stage1Filter filter(table, dv, nullptr, cfg);
      std::vector<std::optional<double>> sims(docs.size());
      parallel_for(docs.size(), workers, [&](std::size_t i) { sims[i] = filter.similarity(docs[i]).first; });
      for (double tau : plan.taus) {
        SweepResult r;
        r.strategy = plan.embedding_label;
        r.parameter = tau;
        for (std::size_t i = 0; i < docs.size(); ++i) {
          if (sims[i] && *sims[i] > tau) r.retained.push_back(i);
        }
        detail::summarize_quality(r, scores, docs.size());
        out.push_back(std::move(r));
      }
    } else {
      if (!lexicon) throw ConfigError("keyword sweep needs a lexicon");
      const TermSet terms(*lexicon);
      std::vector<std::size_t> hits(docs.size());
      parallel_for(docs.size(), workers, [&](std::size_t i) { hits[i] = terms.count(docs[i].text).hits; });
      for (std::size_t k : plan.min_hits) {
        if (k == 0) throw ConfigError("min_hits must be at least 1");
        SweepResult r;
        r.strategy = "keyword";
        r.parameter = static_cast<double>(k);
        for (std::size_t i = 0; i < docs.size(); ++i) {
          if (hits[i] >= k) r.retained.push_back(i);
        }
        detail::summarize_quality(r, scores, docs.size());
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepResult>& results) {
  os << "strategy,parameter,percent_kept,mean_quality,sem_quality\n";
  for (const auto& r : results) {
    os << r.strategy << ',' << format_double(r.parameter) << ',' << format_double(r.percent_kept) << ','
       << (r.mean_quality ? format_double(*r.mean_quality) : std::string()) << ','
       << format_double(r.sem_quality) << '\n';
  }
}

// ---------------------------------------------------------------- histograms

struct ScoreHistogram {
  double bin_width = 0.5;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
};

/// Counts scores into equal bins over [0, 5]; the last bin is closed so 5.0 lands in it.
inline ScoreHistogram score_distribution(const std::vector<QualityScore>& scores, double bin_width) {
  if (!(bin_width > 0.0)) throw ConfigError("bin width must be positive");
  const double nbins = 5.0 / bin_width;
  const double rounded = std::round(nbins);
  if (rounded < 1.0 || std::abs(nbins - rounded) > 1e-9) throw ConfigError("bin width must divide 5 evenly");
  ScoreHistogram h{bin_width, std::vector<std::uint64_t>(static_cast<std::size_t>(rounded), 0)};
  const std::size_t last = h.counts.size() - 1;
  for (const auto& s : scores) {
    const double x = std::clamp(s.score, 0.0, 5.0);
    // The small epsilon keeps e.g. 0.3 / 0.1 = 2.9999999999999996 in bin 3.
    const auto i = static_cast<std::size_t>(std::floor(x / bin_width + 1e-9));
    h.counts[std::min(i, last)]++;
  }
  return h;
}

inline void write_histogram_csv(std::ostream& os, const ScoreHistogram& h) {
  os << "bin_low,bin_high,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    os << format_double(static_cast<double>(i) * h.bin_width) << ','
       << format_double(static_cast<double>(i + 1) * h.bin_width) << ',' << h.counts[i] << '\n';
  }
}

}  // namespace curate
