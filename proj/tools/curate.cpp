// curate: command-line front end for the corpus curation library.
//
//   curate build-vector      lexicon + embeddings -> domain vector JSON
//   curate filter            Stage 1, Stage 2 or both over a corpus
//   curate score             Stage-2 scores + score histogram for a corpus
//   curate analyze-residuals sub-lexicon residual experiment + mean check
//   curate sweep             percent-kept vs quality over thresholds
//   curate cost              two-stage time/cost model
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curate/analytics.hpp"
#include "curate/corpus_io.hpp"
#include "curate/domain_vector.hpp"
#include "curate/embeddings.hpp"
#include "curate/lexicon.hpp"
#include "curate/pipeline.hpp"
#include "curate/stage1.hpp"
#include "curate/stage2.hpp"

namespace fs = std::filesystem;
using namespace curate;

namespace {

void log(const std::string& msg) { std::cerr << "curate: " << msg << '\n'; }

template <class T>
std::vector<T> parse_list(const std::string& flag, const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw ConfigError(flag + ": cannot parse '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(flag + ": empty list");
  return out;
}

DomainLexicon resolve_lexicon(const std::string& name_or_path) {
  if (name_or_path.empty()) throw ConfigError("--lexicon is required");
  if (fs::is_regular_file(name_or_path)) return load_lexicon(name_or_path);
  try {
    return bundled_lexicon(name_or_path);
  } catch (const ConfigError&) {
    throw ConfigError("--lexicon: '" + name_or_path + "' is neither a file nor a bundled lexicon (astronomy, medicine, law)");
  }
}

void log_lexicon_coverage(const DomainVector& dv) {
  log("domain '" + dv.source_domain + "': d=" + std::to_string(dv.vector.size()) + ", terms found " +
      std::to_string(dv.terms_found) + ", missing " + std::to_string(dv.terms_missing.size()));
  if (!dv.terms_missing.empty()) {
    std::string list;
    for (const auto& t : dv.terms_missing) list += (list.empty() ? "" : ", ") + t;
    log("missing terms: " + list);
  }
}

EmbeddingTable load_table(const std::string& path) {
  EmbeddingTable table = load_embeddings(path);
  log("loaded " + std::to_string(table.vocab_size()) + " vectors of dimension " +
      std::to_string(table.dimension()) + " from " + path);
  if (table.dropped_zero_vectors() > 0) {
    log("warning: dropped " + std::to_string(table.dropped_zero_vectors()) + " zero vectors");
  }
  return table;
}

// Writes body to path via a temporary file and rename.
void write_file(const fs::path& path, const std::string& body) {
  const fs::path partial = path.string() + ".partial";
  {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << body;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(partial, ec);
      throw IoError("write failure on '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(partial, path, ec);
  if (ec) throw IoError("cannot finalize '" + path.string() + "': " + ec.message());
}

/// Flag values of a subcommand as a JSON object, reloadable with --config.
nlohmann::ordered_json effective_config(const CLI::App* sub) {
  nlohmann::ordered_json j;
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config" || opt->get_lnames().empty()) continue;
    if (opt->count() > 0) {
      j[name] = opt->results().back();
    } else {
      j[name] = opt->get_default_str();
    }
  }
  return j;
}

void write_effective_config(const CLI::App* sub, const fs::path& output) {
  const fs::path path = sidecar_path(output, ".config.json");
  nlohmann::ordered_json j;
  j["command"] = sub->get_name();
  j["flags"] = effective_config(sub);
  write_file(path, j.dump(2) + "\n");
}

/// Expands "--config file.json" into ordinary flags placed before the user's
/// own flags; with TakeLast semantics the explicit flags win.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty() || args.empty()) return args;
  std::ifstream in(config_path);
  if (!in) throw ConfigError("--config: cannot read '" + config_path + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigError("--config: '" + config_path + "' is not a JSON object");
  if (j.contains("flags") && j["flags"].is_object()) j = j["flags"];
  std::vector<std::string> injected;
  for (const auto& [key, value] : j.items()) {
    if (key == "config" || key == "command") continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (const auto& v : value) text += (text.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
    } else if (value.is_boolean()) {
      text = value.get<bool>() ? "true" : "false";
    } else if (value.is_null()) {
      continue;
    } else {
      text = value.dump();
    }
    if (text.empty()) continue;
    injected.push_back("--" + key);
    injected.push_back(text);
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& description) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();
  sub->add_option("--config", "JSON file of flag values; explicit flags override it");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domain-specific corpus curation: embedding-similarity filtering and quality gating"};
  app.require_subcommand(1);

  // build-vector
  std::string bv_lexicon, bv_embeddings, bv_output;
  CLI::App* build = add_subcommand(app, "build-vector", "Aggregate a lexicon into a unit domain vector");
  build->add_option("--lexicon", bv_lexicon, "Lexicon file or bundled name")->required();
  build->add_option("--embeddings", bv_embeddings, "GloVe-style embedding file")->required()->check(CLI::ExistingFile);
  build->add_option("--output", bv_output, "Destination vector JSON")->required();

  // filter
  PipelineConfig pc;
  CLI::App* filter = add_subcommand(app, "filter", "Filter a corpus through Stage 1, Stage 2, or both");
  filter->add_option("--corpus", pc.corpus, "Corpus file or directory")->required()->check(CLI::ExistingPath);
  filter->add_option("--corpus-format", pc.corpus_format, "jsonl or text_dir")->check(CLI::IsMember({"jsonl", "text_dir"}));
  filter->add_option("--output", pc.output, "Retained corpus (JSONL)")->required();
  filter->add_option("--stage", pc.stage, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
  filter->add_option("--embeddings", pc.embeddings, "Embedding file (Stage 1)")->check(CLI::ExistingFile);
  filter->add_option("--lexicon", pc.lexicon, "Lexicon file or bundled name");
  filter->add_option("--vector", pc.vector, "Prebuilt domain vector JSON")->check(CLI::ExistingFile);
  filter->add_option("--strategy", pc.strategy, "embedding, keyword or none")
      ->check(CLI::IsMember({"embedding", "keyword", "none"}));
  filter->add_option("--tau", pc.tau, "Similarity threshold (strict >)")->check(CLI::Range(-1.0, 1.0));
  filter->add_option("--eta", pc.eta, "Quality threshold (inclusive >=)");
  filter->add_option("--min-tokens", pc.min_tokens, "Minimum in-vocabulary tokens for a defined document vector");
  filter->add_option("--min-hits", pc.min_hits, "Keyword strategy: minimum lexicon hits")->check(CLI::PositiveNumber);
  filter->add_option("--workers", pc.workers, "Worker threads")->check(CLI::PositiveNumber);
  filter->add_option("--seed", pc.seed, "Seed (recorded for reproducibility)");
  filter->add_option("--scorer", pc.scorer, "mock or remote")->check(CLI::IsMember({"mock", "remote"}));
  filter->add_option("--endpoint", pc.endpoint, "Remote scorer base URL");
  filter->add_option("--batch-size", pc.batch_size, "Remote scorer batch size")->check(CLI::PositiveNumber);
  filter->add_option("--max-in-flight", pc.max_in_flight, "Concurrent remote batches")->check(CLI::PositiveNumber);
  filter->add_option("--chunk-size", pc.chunk_size, "Documents read per processing chunk")->check(CLI::PositiveNumber);

  // score
  PipelineConfig sc;
  double sc_bin_width = 0.5;
  CLI::App* score = add_subcommand(app, "score", "Score a corpus with the Stage-2 scorer");
  score->add_option("--corpus", sc.corpus, "Corpus file or directory")->required()->check(CLI::ExistingPath);
  score->add_option("--corpus-format", sc.corpus_format, "jsonl or text_dir")->check(CLI::IsMember({"jsonl", "text_dir"}));
  score->add_option("--output", sc.output, "Score sidecar (JSONL)")->required();
  score->add_option("--lexicon", sc.lexicon, "Lexicon for the mock scorer");
  score->add_option("--scorer", sc.scorer, "mock or remote")->check(CLI::IsMember({"mock", "remote"}));
  score->add_option("--endpoint", sc.endpoint, "Remote scorer base URL");
  score->add_option("--batch-size", sc.batch_size, "Remote scorer batch size")->check(CLI::PositiveNumber);
  score->add_option("--max-in-flight", sc.max_in_flight, "Concurrent remote batches")->check(CLI::PositiveNumber);
  score->add_option("--workers", sc.workers, "Worker threads")->check(CLI::PositiveNumber);
  score->add_option("--bin-width", sc_bin_width, "Histogram bin width (must divide 5)");

  // analyze-residuals
  std::string ar_embeddings, ar_lexicon, ar_output, ar_m = "5,10,25,50,100";
  std::size_t ar_trials = 200, ar_probes = 64, ar_bins = 50, ar_workers = default_workers();
  std::uint64_t ar_seed = 0;
  CLI::App* residuals = add_subcommand(app, "analyze-residuals", "Residual error vs. sub-lexicon size");
  residuals->add_option("--embeddings", ar_embeddings, "Embedding file")->required()->check(CLI::ExistingFile);
  residuals->add_option("--lexicon", ar_lexicon, "Lexicon file or bundled name")->required();
  residuals->add_option("--output", ar_output, "Output prefix (writes <prefix>.json, <prefix>.components.csv)")->required();
  residuals->add_option("--m", ar_m, "Comma-separated sub-lexicon sizes");
  residuals->add_option("--trials", ar_trials, "Trials per m")->check(CLI::PositiveNumber);
  residuals->add_option("--seed", ar_seed, "Sampling seed");
  residuals->add_option("--probes", ar_probes, "Perturbation probes for the mean-minimizer check");
  residuals->add_option("--bins", ar_bins, "Bins of the residual component histogram")->check(CLI::PositiveNumber);
  residuals->add_option("--workers", ar_workers, "Worker threads")->check(CLI::PositiveNumber);

  // sweep
  PipelineConfig sw;
  std::string sw_taus = "0.0,0.1,0.2,0.3,0.4", sw_strategies = "embedding,keyword,none", sw_hits = "1,2,4,8";
  std::string sw_label = "embedding";
  CLI::App* sweep = add_subcommand(app, "sweep", "Percent kept vs. mean quality over thresholds");
  sweep->add_option("--corpus", sw.corpus, "Corpus file or directory")->required()->check(CLI::ExistingPath);
  sweep->add_option("--corpus-format", sw.corpus_format, "jsonl or text_dir")->check(CLI::IsMember({"jsonl", "text_dir"}));
  sweep->add_option("--output", sw.output, "Sweep CSV")->required();
  sweep->add_option("--embeddings", sw.embeddings, "Embedding file")->check(CLI::ExistingFile);
  sweep->add_option("--lexicon", sw.lexicon, "Lexicon file or bundled name")->required();
  sweep->add_option("--taus", sw_taus, "Ascending similarity thresholds");
  sweep->add_option("--min-hits", sw_hits, "Ascending keyword thresholds");
  sweep->add_option("--strategies", sw_strategies, "Subset of embedding,keyword,none");
  sweep->add_option("--label", sw_label, "Name for the embedding rows, e.g. glove-300d");
  sweep->add_option("--min-tokens", sw.min_tokens, "Minimum in-vocabulary tokens");
  sweep->add_option("--scorer", sw.scorer, "mock or remote")->check(CLI::IsMember({"mock", "remote"}));
  sweep->add_option("--endpoint", sw.endpoint, "Remote scorer base URL");
  sweep->add_option("--batch-size", sw.batch_size, "Remote scorer batch size")->check(CLI::PositiveNumber);
  sweep->add_option("--workers", sw.workers, "Worker threads")->check(CLI::PositiveNumber);

  // cost
  CostModel cm;
  std::string cost_output;
  CLI::App* cost = add_subcommand(app, "cost", "Time and cost of Stage 1, Stage 2 and the combination");
  cost->add_option("--stage1-hours", cm.stage1_hours_full_corpus, "Stage-1 hours on the full corpus");
  cost->add_option("--stage2-hours", cm.stage2_hours_full_corpus, "Stage-2 hours on the full corpus");
  cost->add_option("--stage1-rate", cm.stage1_rate_per_hour, "Stage-1 price per hour");
  cost->add_option("--stage2-rate", cm.stage2_rate_per_hour, "Stage-2 price per hour");
  cost->add_option("--retention", cm.stage1_retention, "Fraction kept by Stage 1");
  cost->add_option("--output", cost_output, "Report JSON (default: stdout)");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "curate: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "curate: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*build) {
      const DomainLexicon lexicon = resolve_lexicon(bv_lexicon);
      const EmbeddingTable table = load_table(bv_embeddings);
      const DomainVector dv = aggregate_domain_vector(table, lexicon);
      log_lexicon_coverage(dv);
      save_domain_vector(dv, bv_output);
      write_effective_config(build, bv_output);
    } else if (*filter) {
      const StageSelection stages = parse_stage_selection(pc.stage);
      const Strategy strategy = parse_strategy(pc.strategy);
      const bool run1 = stages != StageSelection::stage2;
      const bool run2 = stages != StageSelection::stage1;
      std::optional<DomainLexicon> lexicon;
      if (!pc.lexicon.empty()) lexicon = resolve_lexicon(pc.lexicon);
      std::optional<EmbeddingTable> table;
      std::optional<DomainVector> dv;
      if (run1 && strategy == Strategy::embedding) {
        if (pc.embeddings.empty()) throw ConfigError("--embeddings is required for the embedding strategy");
        table = load_table(pc.embeddings);
        if (!pc.vector.empty()) {
          dv = load_domain_vector(pc.vector);
        } else if (lexicon) {
          dv = aggregate_domain_vector(*table, *lexicon);
        } else {
          throw ConfigError("--vector or --lexicon is required for the embedding strategy");
        }
        log_lexicon_coverage(*dv);
      }
      if (run1 && strategy == Strategy::keyword && !lexicon) throw ConfigError("--lexicon is required for keyword");
      std::unique_ptr<Scorer> scorer;
      if (run2) {
        const Stage2Config s2 = pc.stage2_config();
        if (s2.scorer == ScorerKind::mock && !lexicon) throw ConfigError("--lexicon is required for the mock scorer");
        s2.validate();
        scorer = make_scorer(s2, lexicon ? &*lexicon : nullptr, pc.workers);
      }
      write_effective_config(filter, pc.output);
      const PipelineResult r = run_pipeline(
          pc, {table ? &*table : nullptr, dv ? &*dv : nullptr, lexicon ? &*lexicon : nullptr, scorer.get()});
      for (const auto& s : r.skip_samples) log("skipped " + s.source + ":" + std::to_string(s.line) + ": " + s.reason);
      if (r.skipped_records > r.skip_samples.size()) {
        log("... " + std::to_string(r.skipped_records - r.skip_samples.size()) + " more skipped records");
      }
      for (const auto& rep : r.retention) {
        log(std::string(to_string(rep.stage)) + ": kept " + std::to_string(rep.docs_out) + "/" +
            std::to_string(rep.docs_in) + " docs, " + std::to_string(rep.tokens_out) + "/" +
            std::to_string(rep.tokens_in) + " tokens");
      }
    } else if (*score) {
      const Stage2Config s2 = sc.stage2_config();
      std::optional<DomainLexicon> lexicon;
      if (!sc.lexicon.empty()) lexicon = resolve_lexicon(sc.lexicon);
      if (s2.scorer == ScorerKind::mock && !lexicon) throw ConfigError("--lexicon is required for the mock scorer");
      auto scorer = make_scorer(s2, lexicon ? &*lexicon : nullptr, sc.workers);
      (void)score_distribution({}, sc_bin_width);  // validates the bin width before any work
      write_effective_config(score, sc.output);
      CorpusReader reader(sc.corpus, parse_corpus_format(sc.corpus_format));
      JsonlWriter out(sc.output);
      std::vector<QualityScore> all;
      score_documents(*scorer, reader, [&](const Document&, const QualityScore& s) {
        out.write_line(to_json(s));
        all.push_back(s);
      });
      out.finish();
      std::ostringstream csv;
      write_histogram_csv(csv, score_distribution(all, sc_bin_width));
      write_file(sidecar_path(sc.output, ".histogram.csv"), csv.str());
      log("scored " + std::to_string(all.size()) + " documents (" + std::to_string(scorer->stats().errors) +
          " errors, " + std::to_string(scorer->stats().clamped) + " clamped)");
    } else if (*residuals) {
      const auto m_values = parse_list<std::size_t>("--m", ar_m);
      const DomainLexicon lexicon = resolve_lexicon(ar_lexicon);
      const EmbeddingTable table = load_table(ar_embeddings);
      const ResidualReport report = run_residual_experiment(table, lexicon, m_values, ar_trials, ar_seed, ar_workers);
      const MeanMinimizerReport mm = verify_mean_minimizer(table, lexicon, ar_probes, ar_seed);
      nlohmann::json j = to_json(report);
      j["mean_minimizer"] = to_json(mm);
      write_file(ar_output + ".json", j.dump(2) + "\n");
      const ComponentHistogram h = residual_component_histogram(table, lexicon, ar_bins);
      std::ostringstream csv;
      csv << "bin_low,bin_high,count\n";
      for (std::size_t i = 0; i < h.counts.size(); ++i) {
        csv << format_double(h.low + static_cast<double>(i) * h.width) << ','
            << format_double(h.low + static_cast<double>(i + 1) * h.width) << ',' << h.counts[i] << '\n';
      }
      write_file(ar_output + ".components.csv", csv.str());
      write_effective_config(residuals, ar_output + ".json");
      for (std::size_t i = 0; i < m_values.size(); ++i) {
        log("m=" + std::to_string(m_values[i]) + ": mean |E| = " + format_double(report.mean_error_norms[i]));
      }
      log(std::string("mean minimizer check: ") + (mm.passed ? "passed" : "FAILED") +
          " (gradient norm " + format_double(mm.gradient_norm) + ")");
    } else if (*sweep) {
      SweepPlan plan;
      plan.strategies.clear();
      for (const auto& s : parse_list<std::string>("--strategies", sw_strategies)) plan.strategies.push_back(parse_strategy(s));
      plan.taus = parse_list<double>("--taus", sw_taus);
      plan.min_hits = parse_list<std::size_t>("--min-hits", sw_hits);
      plan.min_tokens_in_vocab = sw.min_tokens;
      plan.embedding_label = sw_label;
      const DomainLexicon lexicon = resolve_lexicon(sw.lexicon);
      std::optional<EmbeddingTable> table;
      std::optional<DomainVector> dv;
      if (std::find(plan.strategies.begin(), plan.strategies.end(), Strategy::embedding) != plan.strategies.end()) {
        if (sw.embeddings.empty()) throw ConfigError("--embeddings is required for the embedding strategy");
        table = load_table(sw.embeddings);
        dv = aggregate_domain_vector(*table, lexicon);
        log_lexicon_coverage(*dv);
      }
      const Stage2Config s2 = sw.stage2_config();
      auto scorer = make_scorer(s2, &lexicon, sw.workers);
      write_effective_config(sweep, sw.output);
      const auto docs = read_corpus(sw.corpus, parse_corpus_format(sw.corpus_format));
      const auto results = threshold_sweep(dv ? &*dv : nullptr, table ? &*table : nullptr, &lexicon, docs, *scorer,
                                           plan, sw.workers);
      std::ostringstream csv;
      write_sweep_csv(csv, results);
      write_file(sw.output, csv.str());
    } else if (*cost) {
      const std::string body = cost_report(cm).dump(2) + "\n";
      if (cost_output.empty()) {
        std::cout << body;
      } else {
        write_file(cost_output, body);
        write_effective_config(cost, cost_output);
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "curate: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "curate: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
