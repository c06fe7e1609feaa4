#include <gtest/gtest.h>

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "curate/domain_vector.hpp"
#include "curate/stage1.hpp"
#include "curate/stage2.hpp"
#include "support.hpp"

using namespace curate;
namespace ct = curate::testing;
using nlohmann::json;

namespace {

/// Local /score endpoint. The handler maps a request body to (status, reply body).
class StubServer {
 public:
  using Handler = std::function<std::pair<int, std::string>(const json& request)>;

  explicit StubServer(Handler h) : handler_(std::move(h)) {
    server_.Post("/score", [this](const httplib::Request& req, httplib::Response& res) {
      const auto body = json::parse(req.body);
      {
        std::lock_guard lock(mu_);
        batch_sizes_.push_back(body.at("texts").size());
      }
      ++requests_;
      const int now = ++in_flight_;
      int seen = max_in_flight_.load();
      while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
      }
      if (delay_ms_ > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms_));
      auto [status, reply] = handler_(body);
      --in_flight_;
      res.status = status;
      res.set_content(reply, "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }
  std::vector<std::size_t> batch_sizes() const {
    std::lock_guard lock(mu_);
    return batch_sizes_;
  }
  int requests() const { return requests_; }
  int max_in_flight() const { return max_in_flight_; }
  void set_delay_ms(int ms) { delay_ms_ = ms; }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  mutable std::mutex mu_;
  std::vector<std::size_t> batch_sizes_;
  std::atomic<int> requests_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::atomic<int> delay_ms_{0};
};

std::pair<int, std::string> token_mod6(const json& req) {
  json scores = json::array();
  for (const auto& t : req.at("texts")) scores.push_back(static_cast<double>(count_tokens(t.get<std::string>()) % 6));
  return {200, json{{"scores", scores}}.dump()};
}

Stage2Config remote_config(const std::string& endpoint, std::size_t batch) {
  Stage2Config cfg;
  cfg.scorer = ScorerKind::remote;
  cfg.endpoint = endpoint;
  cfg.batch_size = batch;
  cfg.initial_backoff = std::chrono::milliseconds(5);
  cfg.timeout = std::chrono::seconds(5);
  return cfg;
}

std::vector<Document> numbered_docs(std::size_t n) {
  std::vector<Document> docs;
  Rng rng(17);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    const auto len = rng.below(40);
    for (std::size_t k = 0; k < len; ++k) text += "w" + std::to_string(rng.below(100)) + " ";
    docs.push_back(make_document("d" + std::to_string(i), text));
  }
  return docs;
}

TEST(MockScore, Examples) {
  const auto lex = astronomy_lexicon();
  EXPECT_EQ(mock_score(make_document("x", "bread and butter"), lex), 0.0);
  EXPECT_EQ(mock_score(make_document("x", ""), lex), 0.0);
  EXPECT_EQ(mock_score(make_document("x", "galaxy one two three four five six seven eight nine"), lex), 5.0);
  std::string fifty = "galaxy nebula";
  for (int i = 0; i < 48; ++i) fifty += " filler";
  const auto doc = make_document("x", fifty);
  ASSERT_EQ(doc.token_count, 50u);
  EXPECT_EQ(mock_score(doc, lex), 2.0);
}

TEST(MockScore, DeterministicAcrossRunsAndWorkers) {
  const auto w = ct::make_planted_world(3);
  const auto docs = ct::make_planted_corpus(w, 500, 40, 4);
  MockScorer one(w.lexicon(), 1), eight(w.lexicon(), 8);
  const auto a = one.score(docs);
  const auto b = eight.score(docs);
  const auto c = one.score(docs);
  ASSERT_EQ(a.size(), docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(a[i].doc_id, docs[i].id);
    EXPECT_EQ(a[i].score, b[i].score);
    EXPECT_EQ(a[i].score, c[i].score);
    EXPECT_GE(a[i].score, 0.0);
    EXPECT_LE(a[i].score, 5.0);
  }
}

TEST(QualityThreshold, InclusiveAtEta) {
  const std::vector<Document> docs{make_document("a", "x"), make_document("b", "y"), make_document("c", "z")};
  const std::vector<QualityScore> scores{{"a", 3.0, "t", false}, {"b", 2.99, "t", false}, {"c", 5.0, "t", true}};
  const auto r = apply_quality_threshold(scores, docs, 3.0);
  EXPECT_EQ(r.retained, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.failed_scores, 1u);
  EXPECT_EQ(r.before.document_count, 3u);
  EXPECT_EQ(r.after.document_count, 1u);
  EXPECT_EQ(Stage2Config{}.eta, 3.0);
}

TEST(QualityThreshold, MissingScoreIsDropped) {
  const std::vector<Document> docs{make_document("a", "x"), make_document("b", "y")};
  const std::vector<QualityScore> scores{{"b", 4.0, "t", false}};
  const auto r = apply_quality_threshold(scores, docs, 3.0);
  EXPECT_EQ(r.retained, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.missing_scores, 1u);
}

// Re-filter the serialized score sidecar independently and compare.
TEST(QualityThreshold, MatchesSidecarRefilter) {
  const auto w = ct::make_planted_world(5);
  const auto docs = ct::make_planted_corpus(w, 1000, 200, 6);
  MockScorer scorer(w.lexicon());
  const auto scores = scorer.score(docs);
  std::string sidecar;
  for (const auto& s : scores) sidecar += to_json(s).dump() + "\n";

  std::vector<std::string> oracle;
  std::istringstream lines(sidecar);
  for (std::string line; std::getline(lines, line);) {
    const auto j = json::parse(line);
    if (j.at("score").get<double>() >= 3.0) oracle.push_back(j.at("doc_id").get<std::string>());
  }
  std::vector<std::string> kept;
  for (std::size_t i : apply_quality_threshold(scores, docs, 3.0).retained) kept.push_back(docs[i].id);
  EXPECT_EQ(kept, oracle);
  EXPECT_FALSE(kept.empty());
}

TEST(LabelPrompt, Astronomy) {
  const auto doc = make_document("x", "Jupiter has at least 95 moons.");
  const auto p = render_label_prompt(doc);
  EXPECT_NE(p.find("6-point scoring system"), std::string::npos);
  EXPECT_TRUE(p.ends_with("\n\nJupiter has at least 95 moons."));
  EXPECT_TRUE(p.starts_with("Please evaluate the educational value of the following astronomy-related text"));
  EXPECT_EQ(p, render_label_prompt(doc));
  EXPECT_EQ(p.find("{text}"), std::string::npos);
}

TEST(LabelPrompt, EmptyTextAndOtherDomains) {
  const auto empty = render_label_prompt(make_document("x", ""));
  EXPECT_TRUE(empty.ends_with("Here's the text to evaluate:\n\n"));
  const auto med = render_label_prompt(make_document("x", "Aspirin."), "medicine");
  EXPECT_NE(med.find("medicine-related text"), std::string::npos);
  EXPECT_NE(med.find("No medicine content"), std::string::npos);
  EXPECT_EQ(med.find("astronom"), std::string::npos);
  EXPECT_TRUE(med.ends_with("Aspirin."));
}

TEST(Stage2Config, Validation) {
  Stage2Config cfg;
  cfg.scorer = ScorerKind::remote;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.endpoint = "http://x";
  cfg.batch_size = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_THROW(parse_scorer_kind("gpt"), ConfigError);
  const auto lex = astronomy_lexicon();
  EXPECT_THROW(make_scorer(Stage2Config{}, nullptr, 1), ConfigError);
  EXPECT_EQ(make_scorer(Stage2Config{}, &lex, 1)->id(), "mock:astronomy");
}

TEST(RemoteScorer, BatchesInOrder) {
  StubServer stub(token_mod6);
  RemoteScorer scorer(remote_config(stub.endpoint(), 3));
  const auto docs = numbered_docs(7);
  const auto scores = scorer.score(docs);
  EXPECT_EQ(stub.batch_sizes(), (std::vector<std::size_t>{3, 3, 1}));
  ASSERT_EQ(scores.size(), 7u);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(scores[i].doc_id, docs[i].id);
    EXPECT_EQ(scores[i].score, static_cast<double>(docs[i].token_count % 6));
    EXPECT_FALSE(scores[i].error);
  }
}

TEST(RemoteScorer, StubFormulaOnHundredDocs) {
  StubServer stub(token_mod6);
  RemoteScorer scorer(remote_config(stub.endpoint(), 16));
  const auto docs = numbered_docs(100);
  VectorSource src(docs);
  std::size_t i = 0;
  score_documents(scorer, src, [&](const Document& d, const QualityScore& s) {
    EXPECT_EQ(d.id, docs[i++].id);
    EXPECT_EQ(s.score, static_cast<double>(d.token_count % 6));
  }, 37);
  EXPECT_EQ(i, 100u);
  EXPECT_EQ(scorer.stats().scored, 100u);
  EXPECT_EQ(scorer.stats().errors, 0u);
}

TEST(RemoteScorer, RetriesTransientFailures) {
  for (int code : {503, 429}) {
    std::atomic<int> calls{0};
    StubServer stub([&](const json& req) -> std::pair<int, std::string> {
      if (++calls <= 2) return {code, "{}"};
      return token_mod6(req);
    });
    RemoteScorer scorer(remote_config(stub.endpoint(), 10));
    const auto scores = scorer.score(numbered_docs(5));
    EXPECT_EQ(stub.requests(), 3) << code;
    EXPECT_EQ(scorer.stats().retries, 2u);
    for (const auto& s : scores) EXPECT_FALSE(s.error);
  }
}

TEST(RemoteScorer, GivesUpAfterThreeAttempts) {
  StubServer stub([](const json&) { return std::pair<int, std::string>{500, "{}"}; });
  RemoteScorer scorer(remote_config(stub.endpoint(), 4));
  try {
    scorer.score(numbered_docs(10));
    FAIL();
  } catch (const ScorerUnavailable& e) {
    EXPECT_EQ(e.unsent(), 10u);
  }
  EXPECT_EQ(stub.requests(), 9);
}

TEST(RemoteScorer, UnreachableEndpointReportsUnsent) {
  int port;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  auto cfg = remote_config("http://127.0.0.1:" + std::to_string(port), 2);
  cfg.timeout = std::chrono::seconds(1);
  RemoteScorer scorer(cfg);
  try {
    scorer.score(numbered_docs(5));
    FAIL();
  } catch (const ScorerUnavailable& e) {
    EXPECT_EQ(e.unsent(), 5u);
    EXPECT_NE(std::string(e.what()).find("unsent"), std::string::npos);
  }
}

TEST(RemoteScorer, ClampsAndFlagsBadElements) {
  StubServer stub([](const json&) {
    return std::pair<int, std::string>{200, R"({"scores":[7.5,-1,"bad",null,2.5]})"};
  });
  RemoteScorer scorer(remote_config(stub.endpoint(), 5));
  const auto s = scorer.score(numbered_docs(5));
  EXPECT_EQ(s[0].score, 5.0);
  EXPECT_EQ(s[1].score, 0.0);
  EXPECT_TRUE(s[2].error);
  EXPECT_TRUE(s[3].error);
  EXPECT_EQ(s[4].score, 2.5);
  EXPECT_FALSE(s[0].error);
  EXPECT_EQ(scorer.stats().clamped, 2u);
  EXPECT_EQ(scorer.stats().errors, 2u);
}

TEST(RemoteScorer, LengthMismatchFlagsBatch) {
  StubServer stub([](const json&) { return std::pair<int, std::string>{200, R"({"scores":[1]})"}; });
  RemoteScorer scorer(remote_config(stub.endpoint(), 3));
  for (const auto& s : scorer.score(numbered_docs(3))) EXPECT_TRUE(s.error);
  StubServer bad([](const json&) { return std::pair<int, std::string>{400, "{}"}; });
  RemoteScorer scorer2(remote_config(bad.endpoint(), 3));
  for (const auto& s : scorer2.score(numbered_docs(3))) EXPECT_TRUE(s.error);
  EXPECT_EQ(bad.requests(), 1);
}

TEST(RemoteScorer, ConcurrentBatches) {
  StubServer stub(token_mod6);
  stub.set_delay_ms(50);
  auto cfg = remote_config(stub.endpoint(), 2);
  cfg.max_in_flight = 4;
  RemoteScorer scorer(cfg);
  const auto docs = numbered_docs(16);
  const auto s = scorer.score(docs);
  for (std::size_t i = 0; i < docs.size(); ++i) EXPECT_EQ(s[i].score, static_cast<double>(docs[i].token_count % 6));
  EXPECT_GT(stub.max_in_flight(), 1);
}

// Stage 2 over Stage 1 output equals brute-force per-document composition.
TEST(TwoStage, CompositionMatchesBruteForce) {
  const auto w = ct::make_planted_world(13);
  const auto t = w.table();
  const auto lex = w.lexicon();
  const auto dv = aggregate_domain_vector(t, lex);
  const auto docs = ct::make_planted_corpus(w, 3000, 150, 14);
  Stage1Filter f(&t, &dv, nullptr, Stage1Config{});
  std::vector<Document> stage1;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (f(docs[i]).retained) stage1.push_back(docs[i]);
  }
  MockScorer scorer(lex);
  const auto scores = scorer.score(stage1);
  std::vector<std::string> composed;
  for (std::size_t i : apply_quality_threshold(scores, stage1, 3.0).retained) composed.push_back(stage1[i].id);

  const ct::ReferenceStage1 ref(w.vocabulary, w.domain_words);
  std::vector<std::string> brute;
  for (const auto& d : docs) {
    if (!ref.retained(d.text, 0.2)) continue;
    std::size_t hits = 0, n = 0;
    std::istringstream words(d.text);
    for (std::string word; words >> word; ++n) {
      hits += std::find(w.domain_words.begin(), w.domain_words.end(), word) != w.domain_words.end();
    }
    const double score = std::round(5.0 * std::min(1.0, 10.0 * double(hits) / double(n)) * 100.0) / 100.0;
    if (score >= 3.0) brute.push_back(d.id);
  }
  EXPECT_EQ(composed, brute);
  EXPECT_FALSE(brute.empty());
}

}  // namespace
