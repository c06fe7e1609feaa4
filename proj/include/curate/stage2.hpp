#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "curate/document.hpp"
#include "curate/error.hpp"
#include "curate/lexicon.hpp"
#include "curate/parallel.hpp"
#include "curate/tokenize.hpp"

namespace curate {

struct QualityScore {
  std::string doc_id;
  double score = 0.0;
  std::string scorer_id;
  /// Scoring failed for this document; score is 0 and it never passes the gate.
  bool error = false;

  bool operator==(const QualityScore&) const = default;
};

inline nlohmann::ordered_json to_json(const QualityScore& s) {
  nlohmann::ordered_json j;
  j["doc_id"] = s.doc_id;
  j["score"] = s.score;
  j["scorer_id"] = s.scorer_id;
  if (s.error) j["error"] = true;
  return j;
}

enum class ScorerKind { mock, remote };

inline ScorerKind parse_scorer_kind(std::string_view s) {
  if (s == "mock") return ScorerKind::mock;
  if (s == "remote") return ScorerKind::remote;
  throw ConfigError("unknown scorer '" + std::string(s) + "'");
}

struct Stage2Config {
  double eta = 3.0;
  std::size_t batch_size = 32;
  ScorerKind scorer = ScorerKind::mock;
  std::optional<std::string> endpoint;
  /// Remote batches in flight at once.
  std::size_t max_in_flight = 1;
  /// Total attempts per batch, including the first.
  std::size_t attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::seconds timeout{60};

  void validate() const {
    if (batch_size == 0) throw ConfigError("batch_size must be positive");
    if (scorer == ScorerKind::remote && (!endpoint || endpoint->empty())) {
      throw ConfigError("remote scorer needs an endpoint");
    }
    if (attempts == 0) throw ConfigError("attempts must be at least 1");
  }
};

/// Counters a scorer accumulates across calls.
struct ScorerStats {
  std::size_t scored = 0;
  std::size_t errors = 0;
  /// Out-of-range scores clamped into [0, 5].
  std::size_t clamped = 0;
  std::size_t retries = 0;
};

/// Maps documents to 0-5 educational-value scores, one per input in order.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string id() const = 0;
  virtual std::vector<QualityScore> score(const std::vector<Document>& docs) = 0;
  const ScorerStats& stats() const noexcept { return stats_; }

 protected:
  ScorerStats stats_;
};

/// Deterministic stand-in for the regressor: 5 * min(1, 10 * f) rounded to two
/// decimals, where f is the fraction of the document's tokens that are lexicon terms.
inline double mock_score(const Document& doc, const TermSet& terms) {
  const auto h = terms.count(doc.text);
  if (h.tokens == 0) return 0.0;
  const double frac = static_cast<double>(h.hits) / static_cast<double>(h.tokens);
  return std::round(5.0 * std::min(1.0, 10.0 * frac) * 100.0) / 100.0;
}

inline double mock_score(const Document& doc, const DomainLexicon& lexicon) {
  return mock_score(doc, TermSet(lexicon));
}

class MockScorer final : public Scorer {
 public:
  MockScorer(DomainLexicon lexicon, std::size_t workers = 1)
      : lexicon_(std::move(lexicon)), terms_(lexicon_), workers_(workers) {}

  std::string id() const override { return "mock:" + lexicon_.domain_name; }

  std::vector<QualityScore> score(const std::vector<Document>& docs) override {
    const std::string sid = id();
    auto out = parallel_map(docs, workers_, [&](const Document& d) {
      return QualityScore{d.id, mock_score(d, terms_), sid, false};
    });
    stats_.scored += out.size();
    return out;
  }

 private:
  DomainLexicon lexicon_;
  TermSet terms_;
  std::size_t workers_;
};

namespace detail {

struct Endpoint {
  std::string scheme_host_port;
  std::string base_path;
};

inline Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint '" + url + "' must start with http://");
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint ep;
  ep.scheme_host_port = url.substr(0, path_start);
  if (path_start != std::string::npos) ep.base_path = url.substr(path_start);
  while (!ep.base_path.empty() && ep.base_path.back() == '/') ep.base_path.pop_back();
  return ep;
}

}  // namespace detail

/// Client for the batch scoring service:
///   POST {endpoint}/score  {"texts": [...]}  ->  200 {"scores": [...]}
/// Documents go out in batches of batch_size; up to max_in_flight batches are
/// sent concurrently and results are placed back by position. Connection
/// failures, 429 and 5xx are retried with exponential backoff. Any other bad
/// reply marks the affected documents as errors instead of aborting.
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(Stage2Config cfg) : cfg_(std::move(cfg)), endpoint_(detail::split_endpoint(*cfg_.endpoint)) {
    cfg_.validate();
  }

  std::string id() const override { return "remote:" + *cfg_.endpoint; }

  std::vector<QualityScore> score(const std::vector<Document>& docs) override {
    const std::string sid = id();
    std::vector<QualityScore> out(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) out[i] = {docs[i].id, 0.0, sid, true};

    const std::size_t batches = (docs.size() + cfg_.batch_size - 1) / cfg_.batch_size;
    std::vector<BatchOutcome> outcomes(batches);
    parallel_for(batches, cfg_.max_in_flight, [&](std::size_t b) {
      const std::size_t begin = b * cfg_.batch_size;
      const std::size_t end = std::min(docs.size(), begin + cfg_.batch_size);
      outcomes[b] = send_batch(docs, begin, end, out);
    });

    std::size_t unsent = 0;
    std::string last_failure;
    for (const auto& o : outcomes) {
      stats_.retries += o.retries;
      stats_.clamped += o.clamped;
      if (o.unreachable) {
        unsent += o.size;
        last_failure = o.failure;
      }
    }
    if (unsent > 0) {
      throw ScorerUnavailable("scorer at " + *cfg_.endpoint + " unreachable after " +
                                  std::to_string(cfg_.attempts) + " attempts (" + last_failure + "); " +
                                  std::to_string(unsent) + " documents unsent",
                              unsent);
    }
    for (const auto& s : out) {
      ++stats_.scored;
      if (s.error) ++stats_.errors;
    }
    return out;
  }

 private:
  struct BatchOutcome {
    std::size_t size = 0;
    std::size_t retries = 0;
    std::size_t clamped = 0;
    bool unreachable = false;
    std::string failure;
  };

  BatchOutcome send_batch(const std::vector<Document>& docs, std::size_t begin, std::size_t end,
                          std::vector<QualityScore>& out) const {
    BatchOutcome o;
    o.size = end - begin;
    nlohmann::json body;
    body["texts"] = nlohmann::json::array();
    for (std::size_t i = begin; i < end; ++i) body["texts"].push_back(docs[i].text);
    const std::string payload = body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);

    httplib::Client client(endpoint_.scheme_host_port);
    client.set_connection_timeout(cfg_.timeout);
    client.set_read_timeout(cfg_.timeout);
    client.set_write_timeout(cfg_.timeout);

    auto backoff = cfg_.initial_backoff;
    for (std::size_t attempt = 0; attempt < cfg_.attempts; ++attempt) {
      if (attempt > 0) {
        ++o.retries;
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
      }
      auto res = client.Post(endpoint_.base_path + "/score", payload, "application/json");
      if (!res) {
        o.failure = httplib::to_string(res.error());
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        o.failure = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) return o;  // documents keep their error flag
      const auto reply = nlohmann::json::parse(res->body, nullptr, false);
      if (reply.is_discarded() || !reply.is_object() || !reply.contains("scores") ||
          !reply["scores"].is_array() || reply["scores"].size() != o.size) {
        return o;
      }
      const auto& scores = reply["scores"];
      for (std::size_t i = 0; i < o.size; ++i) {
        if (!scores[i].is_number()) continue;
        double s = scores[i].get<double>();
        if (s < 0.0 || s > 5.0) {
          ++o.clamped;
          s = std::clamp(s, 0.0, 5.0);
        }
        out[begin + i].score = s;
        out[begin + i].error = false;
      }
      return o;
    }
    o.unreachable = true;
    return o;
  }

  Stage2Config cfg_;
  detail::Endpoint endpoint_;
};

inline std::unique_ptr<Scorer> make_scorer(const Stage2Config& cfg, const DomainLexicon* lexicon,
                                           std::size_t workers) {
  cfg.validate();
  if (cfg.scorer == ScorerKind::remote) return std::make_unique<RemoteScorer>(cfg);
  if (!lexicon) throw ConfigError("mock scorer needs a lexicon");
  return std::make_unique<MockScorer>(*lexicon, workers);
}

/// Scores a stream chunk by chunk; sink(doc, score) sees input order.
template <class Source, class Sink>
void score_documents(Scorer& scorer, Source& source, Sink&& sink, std::size_t chunk_size = 4096) {
  std::vector<Document> chunk;
  while (source.next_chunk(chunk, chunk_size)) {
    const auto scores = scorer.score(chunk);
    for (std::size_t i = 0; i < chunk.size(); ++i) sink(chunk[i], scores[i]);
  }
}

struct QualityGateResult {
  /// Indices into the input documents that passed, in input order.
  std::vector<std::size_t> retained;
  CorpusStats before;
  CorpusStats after;
  /// Documents with no score record; dropped.
  std::size_t missing_scores = 0;
  /// Documents whose score record carries the error flag; dropped.
  std::size_t failed_scores = 0;
};

/// Keeps documents whose score is >= eta. Scores are matched by doc_id.
inline QualityGateResult apply_quality_threshold(const std::vector<QualityScore>& scores,
                                                 const std::vector<Document>& docs, double eta) {
  std::unordered_map<std::string_view, const QualityScore*> by_id;
  by_id.reserve(scores.size());
  for (const auto& s : scores) by_id.emplace(s.doc_id, &s);
  QualityGateResult r;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    r.before.add(docs[i]);
    const auto it = by_id.find(docs[i].id);
    if (it == by_id.end()) {
      ++r.missing_scores;
      continue;
    }
    if (it->second->error) {
      ++r.failed_scores;
      continue;
    }
    if (it->second->score >= eta) {
      r.retained.push_back(i);
      r.after.add(docs[i]);
    }
  }
  return r;
}

/// Labeling prompt template; "{text}" is the document slot.
inline constexpr std::string_view kLabelPromptTemplate =
    "Please evaluate the educational value of the following astronomy-related text from a web document. "
    "Use this 6-point scoring system:\n"
    "\n"
    "0 points: No astronomy content at all.\n"
    "1 point: Minimal astronomy information, or astronomy mixed with non-astronomical content.\n"
    "2 points: Covers basic astronomical concepts but lacks depth or comprehensive explanation.\n"
    "3 points: Clear explanation of concepts with relevant examples, educational for a general audience.\n"
    "4 points: In-depth knowledge, covers advanced concepts or recent discoveries, well-structured and "
    "engaging.\n"
    "5 points: Exceptionally high educational value, expert-level insights, connects multiple concepts, "
    "addresses misconceptions, inspires further learning.\n"
    "\n"
    "Provide a brief justification (up to 100 words) and conclude with the score in the format \"Score: X\".\n"
    "\n"
    "Here's the text to evaluate:\n"
    "\n"
    "{text}";

namespace detail {

inline void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace detail

/// Renders the labeling prompt for doc. For a domain other than astronomy,
/// "astronomical" and "astronomy" are replaced by the domain name.
inline std::string render_label_prompt(const Document& doc, std::string_view domain_name = "astronomy") {
  std::string prompt(kLabelPromptTemplate.substr(0, kLabelPromptTemplate.size() - std::string_view("{text}").size()));
  if (domain_name != "astronomy") {
    detail::replace_all(prompt, "astronomical", domain_name);
    detail::replace_all(prompt, "astronomy", domain_name);
  }
  prompt += doc.text;
  return prompt;
}

}  // namespace curate
