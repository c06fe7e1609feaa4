#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curate/document.hpp"
#include "curate/domain_vector.hpp"
#include "curate/embeddings.hpp"
#include "curate/error.hpp"
#include "curate/lexicon.hpp"
#include "curate/parallel.hpp"
#include "curate/tokenize.hpp"

namespace curate {

enum class Strategy { embedding, keyword, none };

inline Strategy parse_strategy(std::string_view s) {
  if (s == "embedding") return Strategy::embedding;
  if (s == "keyword") return Strategy::keyword;
  if (s == "none") return Strategy::none;
  throw ConfigError("unknown strategy '" + std::string(s) + "'");
}

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::embedding: return "embedding";
    case Strategy::keyword: return "keyword";
    case Strategy::none: return "none";
  }
  return "?";
}

struct Stage1Config {
  double tau = 0.2;
  std::size_t min_tokens_in_vocab = 1;
  Strategy strategy = Strategy::embedding;
  /// Keyword strategy only.
  std::size_t min_hits = 1;
};

struct FilterDecision {
  std::string doc_id;
  /// Cosine to the domain vector (embedding), hits/s (keyword), 0 when undefined.
  double similarity = 0.0;
  bool retained = false;
  /// In-vocabulary tokens (embedding) or lexicon hits (keyword).
  std::size_t in_vocab_tokens = 0;

  bool operator==(const FilterDecision&) const = default;
};

inline nlohmann::ordered_json to_json(const FilterDecision& d) {
  nlohmann::ordered_json j;
  j["doc_id"] = d.doc_id;
  j["similarity"] = d.similarity;
  j["retained"] = d.retained;
  j["in_vocab_tokens"] = d.in_vocab_tokens;
  return j;
}

struct DocumentVector {
  /// Mean of in-vocabulary token vectors; empty when too few tokens were found.
  std::optional<Vector> vector;
  std::size_t in_vocab = 0;
};

/// Mean of the unit embeddings of in-vocabulary tokens (OOV tokens skipped),
/// divided by the in-vocabulary count. Undefined below min_in_vocab.
template <class TokenRange>
DocumentVector document_vector(const EmbeddingTable& table, const TokenRange& tokens,
                               std::size_t min_in_vocab = 1) {
  DocumentVector out;
  Vector acc(table.dimension(), 0.0);
  for (const auto& tok : tokens) {
    if (const auto row = table.lookup(tok)) {
      add_to(acc, *row);
      ++out.in_vocab;
    }
  }
  if (out.in_vocab == 0 || out.in_vocab < min_in_vocab) return out;
  const double inv = 1.0 / static_cast<double>(out.in_vocab);
  for (double& v : acc) v *= inv;
  out.vector = std::move(acc);
  return out;
}

inline DocumentVector document_vector(const EmbeddingTable& table, std::initializer_list<std::string_view> tokens,
                                      std::size_t min_in_vocab = 1) {
  return document_vector<std::initializer_list<std::string_view>>(table, tokens, min_in_vocab);
}

/// u.v / (|u||v|), clamped to [-1, 1]. Throws DegenerateError on a zero vector.
inline double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw ConfigError("cosine_similarity: dimension mismatch");
  const double nu = norm(u);
  const double nv = norm(v);
  if (!(nu > 0.0) || !(nv > 0.0)) throw DegenerateError("cosine_similarity: zero-norm input");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

/// Stage-1 decision function over a shared, immutable domain vector and table.
/// Thread-safe; one instance serves all workers.
class Stage1Filter {
 public:
  Stage1Filter(const EmbeddingTable* table, const DomainVector* domain, const DomainLexicon* lexicon,
               Stage1Config cfg)
      : table_(table), domain_(domain), cfg_(cfg) {
    if (cfg_.strategy == Strategy::embedding) {
      if (!table_ || !domain_) throw ConfigError("embedding strategy needs a table and a domain vector");
      if (domain_->vector.size() != table_->dimension()) {
        throw ConfigError("domain vector dimension " + std::to_string(domain_->vector.size()) +
                          " does not match embedding dimension " + std::to_string(table_->dimension()));
      }
      if (cfg_.tau < -1.0 || cfg_.tau > 1.0) throw ConfigError("tau must lie in [-1, 1]");
    }
    if (cfg_.strategy == Strategy::keyword) {
      if (!lexicon) throw ConfigError("keyword strategy needs a lexicon");
      if (cfg_.min_hits == 0) throw ConfigError("min_hits must be at least 1");
      keywords_.emplace(*lexicon);
    }
  }

  const Stage1Config& config() const noexcept { return cfg_; }

  FilterDecision operator()(const Document& doc) const {
    switch (cfg_.strategy) {
      case Strategy::embedding: return embedding_decision(doc);
      case Strategy::keyword: return keyword_decision(doc);
      case Strategy::none: break;
    }
    return {doc.id, 0.0, true, 0};
  }

  /// Cosine of the document vector with the domain vector; nullopt when undefined.
  std::pair<std::optional<double>, std::size_t> similarity(const Document& doc) const {
    Vector acc(table_->dimension(), 0.0);
    std::size_t found = 0;
    std::string token;
    detail::for_each_token_span(doc.text, [&](std::size_t b, std::size_t e) {
      lower_into(token, std::string_view(doc.text).substr(b, e - b));
      if (const auto row = table_->lookup(token)) {
        add_to(acc, *row);
        ++found;
      }
    });
    if (found == 0 || found < cfg_.min_tokens_in_vocab) return {std::nullopt, found};
    // The domain vector is unit length, so only |B| is divided out. The mean's
    // 1/count factor cancels in the ratio.
    const double nb = norm(acc);
    if (!(nb > 0.0)) return {std::nullopt, found};
    return {std::clamp(dot(domain_->vector, acc) / nb, -1.0, 1.0), found};
  }

  std::size_t keyword_hits(const Document& doc) const { return keywords_->count(doc.text).hits; }

 private:
  static void lower_into(std::string& out, std::string_view token) {
    out.clear();
    std::size_t pos = 0;
    while (pos < token.size()) detail::append_lower(out, detail::decode_utf8(token, pos));
  }

  FilterDecision embedding_decision(const Document& doc) const {
    const auto [sim, found] = similarity(doc);
    FilterDecision d{doc.id, sim.value_or(0.0), false, found};
    d.retained = sim.has_value() && *sim > cfg_.tau;
    return d;
  }

  FilterDecision keyword_decision(const Document& doc) const {
    const auto h = keywords_->count(doc.text);
    const double frac = h.tokens == 0 ? 0.0 : static_cast<double>(h.hits) / static_cast<double>(h.tokens);
    return {doc.id, frac, h.hits >= cfg_.min_hits, h.hits};
  }

  const EmbeddingTable* table_;
  const DomainVector* domain_;
  Stage1Config cfg_;
  std::optional<TermSet> keywords_;
};

/// Single-document embedding decision.
inline FilterDecision filter_document(const DomainVector& dv, const EmbeddingTable& table, const Document& doc,
                                      const Stage1Config& cfg) {
  Stage1Config c = cfg;
  c.strategy = Strategy::embedding;
  return Stage1Filter(&table, &dv, nullptr, c)(doc);
}

/// Keyword baseline: retained iff at least min_hits tokens are lexicon terms.
inline FilterDecision keyword_filter(const DomainLexicon& lexicon, const Document& doc, std::size_t min_hits) {
  Stage1Config c;
  c.strategy = Strategy::keyword;
  c.min_hits = min_hits;
  return Stage1Filter(nullptr, nullptr, &lexicon, c)(doc);
}

struct FilterSummary {
  CorpusStats before;
  CorpusStats after;
};

/// Decisions for an in-memory batch, in input order.
inline std::vector<FilterDecision> filter_batch(const Stage1Filter& filter, const std::vector<Document>& docs,
                                                std::size_t workers) {
  return parallel_map(docs, workers, [&](const Document& d) { return filter(d); });
}

/// Streams a corpus through Stage 1. Chunks are read in order, decided in
/// parallel, and handed to sink(doc, decision) in input order for every
/// document, so the sink sees the same sequence for any worker count.
template <class Source, class Sink>
FilterSummary filter_corpus(const Stage1Filter& filter, Source& source, std::size_t workers, Sink&& sink,
                            std::size_t chunk_size = 4096) {
  FilterSummary summary;
  std::vector<Document> chunk;
  while (source.next_chunk(chunk, chunk_size)) {
    const auto decisions = filter_batch(filter, chunk, workers);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      summary.before.add(chunk[i]);
      if (decisions[i].retained) summary.after.add(chunk[i]);
      sink(chunk[i], decisions[i]);
    }
  }
  return summary;
}

/// Source over an in-memory vector, for tests and sweeps.
class VectorSource {
 public:
  explicit VectorSource(const std::vector<Document>& docs) : docs_(&docs) {}
  bool next_chunk(std::vector<Document>& out, std::size_t max_docs) {
    out.clear();
    while (pos_ < docs_->size() && out.size() < max_docs) out.push_back((*docs_)[pos_++]);
    return !out.empty();
  }

 private:
  const std::vector<Document>* docs_;
  std::size_t pos_ = 0;
};

}  // namespace curate
