// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
// Set CURATE_EMBEDDINGS to a GloVe-format file to run the mean-minimizer
// criterion on real vectors; otherwise a synthetic 300-d table is used.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curate/analytics.hpp"
#include "curate/domain_vector.hpp"
#include "curate/stage1.hpp"
#include "curate/stage2.hpp"
#include "support.hpp"

using namespace curate;
namespace ct = curate::testing;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kCli = CURATE_CLI;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Workspace {
  ct::TempDir dir{"acceptance"};
  ct::PlantedWorld world = ct::make_planted_world(2024, 50, 100, 5000);
  std::vector<Document> docs;

  Workspace() {
    docs = ct::make_planted_corpus(world, 50000, 500, 2025);
    ct::write_embedding_file(dir / "emb.txt", world.vocabulary);
    std::string lex;
    for (const auto& w : world.domain_words) lex += w + "\n";
    ct::write_file(dir / "planted.txt", lex);
    ct::write_jsonl_corpus(dir / "corpus.jsonl", docs);
  }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  int cli(const std::string& args, const std::string& tag) const {
    return ct::run_command(kCli + " " + args + " >" + path(tag + ".out") + " 2>" + path(tag + ".err"));
  }
};

Outcome cost_model(const Workspace& ws) {
  const auto start = Clock::now();
  if (ws.cli("cost", "cost") != 0) return {false, "cost command failed"};
  const double elapsed = seconds_since(start);
  const auto j = json::parse(ct::read_file(ws.path("cost.out")));
  const double want[3][2] = {{177, 44}, {12000, 16200}, {297, 206}};
  std::ostringstream d;
  bool ok = elapsed < 1.0;
  for (int i = 0; i < 3; ++i) {
    const double h = j["scenarios"][i]["hours"].get<double>();
    const double c = j["scenarios"][i]["cost"].get<double>();
    ok = ok && std::lround(h * 100) == std::lround(want[i][0] * 100) &&
         std::lround(c * 100) == std::lround(want[i][1] * 100);
    d << j["scenarios"][i]["scenario"].get<std::string>() << "=(" << h << " h, $" << c << ") ";
  }
  d << "in " << elapsed << " s";
  return {ok, d.str()};
}

Outcome stage1_oracle(const Workspace& ws) {
  const auto start = Clock::now();
  if (ws.cli("filter --stage 1 --tau 0.2 --corpus " + ws.path("corpus.jsonl") + " --embeddings " +
                 ws.path("emb.txt") + " --lexicon " + ws.path("planted.txt") + " --output " + ws.path("s1.jsonl"),
             "s1") != 0) {
    return {false, "filter failed: " + ct::read_file(ws.path("s1.err"))};
  }
  const double elapsed = seconds_since(start);
  const ct::ReferenceStage1 ref(ws.world.vocabulary, ws.world.domain_words);
  std::istringstream decisions(ct::read_file(ws.path("s1.decisions.jsonl")));
  std::size_t n = 0, mismatches = 0, kept = 0;
  for (std::string line; std::getline(decisions, line); ++n) {
    const auto j = json::parse(line);
    if (n >= ws.docs.size() || j["doc_id"] != ws.docs[n].id) return {false, "decision order differs at " + std::to_string(n)};
    const bool retained = j["retained"].get<bool>();
    mismatches += retained != ref.retained(ws.docs[n].text, 0.2);
    kept += retained;
  }
  std::ostringstream d;
  d << n << " docs, " << kept << " retained, " << mismatches << " mismatches, " << elapsed << " s";
  return {n == ws.docs.size() && mismatches == 0 && elapsed < 60.0, d.str()};
}

Outcome parallel_determinism(const Workspace& ws) {
  const auto start = Clock::now();
  std::vector<std::string> bodies[3];
  const int workers[3] = {1, 4, 8};
  for (int i = 0; i < 3; ++i) {
    const std::string out = "par" + std::to_string(workers[i]);
    if (ws.cli("filter --stage both --scorer mock --workers " + std::to_string(workers[i]) + " --corpus " +
                   ws.path("corpus.jsonl") + " --embeddings " + ws.path("emb.txt") + " --lexicon " +
                   ws.path("planted.txt") + " --output " + ws.path(out + ".jsonl"),
               out) != 0) {
      return {false, "filter failed with workers=" + std::to_string(workers[i])};
    }
    for (const char* suffix : {".jsonl", ".decisions.jsonl", ".scores.jsonl", ".retention.json"}) {
      bodies[i].push_back(ct::read_file(ws.path(out + suffix)));
    }
  }
  const double elapsed = seconds_since(start);
  const bool same = bodies[0] == bodies[1] && bodies[0] == bodies[2];
  std::ostringstream d;
  d << "4 files x 3 worker counts " << (same ? "identical" : "DIFFER") << ", retained corpus "
    << bodies[0][0].size() << " bytes, " << elapsed << " s";
  return {same && !bodies[0][0].empty() && elapsed < 120.0, d.str()};
}

Outcome residual_scaling() {
  const auto start = Clock::now();
  const double sigma = 0.1;
  const auto rows = ct::make_residual_world(77, 2000, 50, sigma);
  EmbeddingTable table;
  std::vector<std::string> words;
  for (const auto& r : rows) {
    table.add(r.word, r.values);
    words.push_back(r.word);
  }
  const std::vector<std::size_t> ms{5, 10, 25, 50, 100};
  const auto rep = run_residual_experiment(table, make_lexicon("synthetic", words), ms, 200, 7, default_workers());
  const double c = rep.mean_error_norms[0] * std::sqrt(5.0);
  bool ok = true;
  std::ostringstream d;
  d << "c=" << c;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double ratio = rep.mean_error_norms[i] / (c / std::sqrt(double(ms[i])));
    const double bound = 3.0 * sigma / std::sqrt(200.0 * double(ms[i]) * 50.0);
    ok = ok && std::abs(ratio - 1.0) <= 0.2 && std::abs(rep.component_means[i]) < bound;
    d << " m=" << ms[i] << ":ratio " << ratio << ",|mean| " << std::abs(rep.component_means[i]) << "<" << bound;
  }
  const double elapsed = seconds_since(start);
  d << ", " << elapsed << " s";
  return {ok && elapsed < 30.0, d.str()};
}

Outcome mean_minimizer(const Workspace& ws) {
  EmbeddingTable table;
  std::string source;
  if (const char* real = std::getenv("CURATE_EMBEDDINGS"); real && *real) {
    table = load_embeddings(real);
    source = real;
  } else {
    for (const auto& r : ct::make_astronomy_world(11, 300, 2000)) table.add(r.word, r.values);
    source = "synthetic 300-d table";
  }
  (void)ws;
  const auto start = Clock::now();
  const auto rep = verify_mean_minimizer(table, astronomy_lexicon(), 1000, 5);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << source << ", " << rep.terms << " terms, gradient norm " << rep.gradient_norm << ", improving probes "
    << rep.improving_probes << "/" << rep.probes << ", " << elapsed << " s";
  return {rep.passed && elapsed < 5.0, d.str()};
}

Outcome sweep(const Workspace& ws) {
  const auto start = Clock::now();
  const auto table = ws.world.table();
  const auto lex = ws.world.lexicon();
  const auto dv = aggregate_domain_vector(table, lex);
  MockScorer scorer(lex, default_workers());
  SweepPlan plan;
  plan.taus = {0.0, 0.1, 0.2, 0.3, 0.4};
  const auto r = threshold_sweep(&dv, &table, &lex, ws.docs, scorer, plan, default_workers());
  bool ok = r.size() == 5;
  std::ostringstream d;
  for (std::size_t i = 0; ok && i < r.size(); ++i) {
    d << "tau " << r[i].parameter << ": " << r[i].percent_kept << "% mean "
      << (r[i].mean_quality ? format_double(*r[i].mean_quality) : "n/a") << "; ";
    if (i > 0) {
      ok = ok && r[i].percent_kept <= r[i - 1].percent_kept &&
           std::includes(r[i - 1].retained.begin(), r[i - 1].retained.end(), r[i].retained.begin(),
                         r[i].retained.end());
    }
  }
  ok = ok && r[0].mean_quality && r[3].mean_quality && *r[3].mean_quality > *r[0].mean_quality;
  const double elapsed = seconds_since(start);
  d << elapsed << " s";
  return {ok && elapsed < 60.0, d.str()};
}

Outcome threshold_semantics() {
  EmbeddingTable t;
  t.add("a", std::vector<double>{1.0, 0.0});
  t.add("q", std::vector<double>{0.6, 0.8});
  const auto dv = aggregate_domain_vector(t, make_lexicon("x", {"a"}));
  Stage1Config cfg;
  cfg.tau = 1.0;
  const auto exact_one = filter_document(dv, t, make_document("a", "a"), cfg);
  const double sim_q = filter_document(dv, t, make_document("q", "q"), cfg).similarity;
  cfg.tau = sim_q;
  const auto exact_q = filter_document(dv, t, make_document("q", "q"), cfg);
  const bool stage1_ok = exact_one.similarity == 1.0 && !exact_one.retained && !exact_q.retained;

  const std::vector<Document> docs{make_document("x", "one"), make_document("y", "two")};
  const auto at3 = apply_quality_threshold({{"x", 3.0, "t", false}, {"y", 2.99, "t", false}}, docs, 3.0);
  const auto at45 = apply_quality_threshold({{"x", 4.5, "t", false}, {"y", 5.0, "t", false}}, docs, 4.5);
  const bool stage2_ok = at3.retained == std::vector<std::size_t>{0} && at45.retained == std::vector<std::size_t>{0, 1};

  std::ostringstream d;
  d << "sim=tau (1.0 and " << sim_q << ") dropped: " << (stage1_ok ? "yes" : "no")
    << "; score=eta (3.0 and 4.5) kept: " << (stage2_ok ? "yes" : "no");
  return {stage1_ok && stage2_ok, d.str()};
}

double stage1_seconds(const Stage1Filter& f, const std::vector<Document>& docs) {
  const auto start = Clock::now();
  VectorSource src(docs);
  std::size_t kept = 0;
  filter_corpus(f, src, 1, [&](const Document&, const FilterDecision& d) { kept += d.retained; });
  const double s = seconds_since(start);
  if (kept > docs.size()) std::abort();
  return s;
}

Outcome complexity(const Workspace& ws) {
  const auto table = ws.world.table();
  const auto dv = aggregate_domain_vector(table, ws.world.lexicon());
  const Stage1Filter f(&table, &dv, nullptr, Stage1Config{});
  const auto short_docs = ct::make_planted_corpus(ws.world, 10000, 100, 31, 40, 120);
  const auto long_docs = ct::make_planted_corpus(ws.world, 10000, 100, 31, 80, 240);
  // Alternate the two corpora and keep the best time of each.
  double t1 = 1e30, t2 = 1e30;
  for (int round = 0; round < 5; ++round) {
    t1 = std::min(t1, stage1_seconds(f, short_docs));
    t2 = std::min(t2, stage1_seconds(f, long_docs));
  }
  const double ratio = t2 / t1;
  std::ostringstream d;
  d << "mean length 80 -> 160 tokens: " << t1 << " s -> " << t2 << " s, ratio " << ratio;
  return {ratio >= 1.4 && ratio <= 2.6, d.str()};
}

}  // namespace

int main() {
  std::cout << "preparing 50000-document planted corpus\n" << std::flush;
  const Workspace ws;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cost-model-reproduction", [&] { return cost_model(ws); }},
      {"stage1-oracle-equivalence", [&] { return stage1_oracle(ws); }},
      {"parallel-determinism", [&] { return parallel_determinism(ws); }},
      {"residual-scaling", [] { return residual_scaling(); }},
      {"mean-minimizer", [&] { return mean_minimizer(ws); }},
      {"sweep-monotonicity-and-nesting", [&] { return sweep(ws); }},
      {"threshold-semantics", [] { return threshold_semantics(); }},
      {"stage1-complexity", [&] { return complexity(ws); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n" << std::flush;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
