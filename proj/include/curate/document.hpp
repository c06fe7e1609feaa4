#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "curate/tokenize.hpp"

namespace curate {

/// One corpus record. Immutable once ingested; safe to share across threads.
struct Document {
  std::string id;
  std::string text;
  std::uint64_t token_count = 0;
  std::map<std::string, std::string> meta;

  bool operator==(const Document&) const = default;
};

/// Builds a document and fills token_count with the canonical tokenizer.
inline Document make_document(std::string id, std::string text,
                              std::map<std::string, std::string> meta = {}) {
  Document doc{std::move(id), std::move(text), 0, std::move(meta)};
  doc.token_count = count_tokens(doc.text);
  return doc;
}

struct CorpusStats {
  std::uint64_t document_count = 0;
  std::uint64_t token_count = 0;

  void add(const Document& doc) {
    ++document_count;
    token_count += doc.token_count;
  }

  CorpusStats& operator+=(const CorpusStats& other) {
    document_count += other.document_count;
    token_count += other.token_count;
    return *this;
  }
  friend CorpusStats operator+(CorpusStats a, const CorpusStats& b) { return a += b; }
  bool operator==(const CorpusStats&) const = default;
};

}  // namespace curate
