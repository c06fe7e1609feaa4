#pragma once

// Synthetic fixtures shared by the unit and acceptance suites, plus a
// straight-line Stage-1 reference that shares no code with the library's
// tokenizer or filter.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "curate/document.hpp"
#include "curate/embeddings.hpp"
#include "curate/lexicon.hpp"
#include "curate/random.hpp"

namespace curate::testing {

namespace fs = std::filesystem;

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("curate-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
}

inline void write_jsonl_corpus(const fs::path& p, const std::vector<Document>& docs) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  for (const auto& d : docs) out << nlohmann::json{{"id", d.id}, {"text", d.text}}.dump() << '\n';
}

/// Runs a shell command line; returns its exit status, or -1 if it did not exit normally.
inline int run_command(const std::string& command) {
  const int rc = std::system(command.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

struct WordVector {
  std::string word;
  std::vector<double> values;
};

inline void write_embedding_file(const fs::path& p, const std::vector<WordVector>& rows) {
  std::FILE* f = std::fopen(p.c_str(), "w");
  for (const auto& r : rows) {
    std::fputs(r.word.c_str(), f);
    for (double v : r.values) std::fprintf(f, " %.9g", v);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

inline std::vector<double> random_unit(Rng& rng, std::size_t d) {
  std::vector<double> v(d);
  double n = 0.0;
  for (auto& x : v) {
    x = rng.normal();
    n += x * x;
  }
  n = std::sqrt(n);
  for (auto& x : v) x /= n;
  return v;
}

/// Vocabulary whose first `domain_terms` words cluster around one direction.
struct PlantedWorld {
  std::size_t dimension = 50;
  std::vector<double> domain_direction;
  std::vector<WordVector> vocabulary;
  std::vector<std::string> domain_words;
  std::vector<std::string> noise_words;
  std::vector<std::string> oov_words;

  DomainLexicon lexicon() const { return make_lexicon("planted", domain_words); }

  EmbeddingTable table() const {
    EmbeddingTable t;
    for (const auto& r : vocabulary) t.add(r.word, r.values);
    return t;
  }
};

inline PlantedWorld make_planted_world(std::uint64_t seed, std::size_t d = 50, std::size_t domain_terms = 100,
                                       std::size_t noise_terms = 5000) {
  Rng rng(seed);
  PlantedWorld w;
  w.dimension = d;
  w.domain_direction = random_unit(rng, d);
  char name[32];
  for (std::size_t i = 0; i < domain_terms; ++i) {
    std::snprintf(name, sizeof name, "dom%03zu", i);
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = w.domain_direction[k] + 0.15 * rng.normal();
    w.vocabulary.push_back({name, v});
    w.domain_words.push_back(name);
  }
  for (std::size_t i = 0; i < noise_terms; ++i) {
    std::snprintf(name, sizeof name, "w%05zu", i);
    w.vocabulary.push_back({name, random_unit(rng, d)});
    w.noise_words.push_back(name);
  }
  for (std::size_t i = 0; i < 100; ++i) {
    std::snprintf(name, sizeof name, "oov%03zu", i);
    w.oov_words.push_back(name);
  }
  return w;
}

/// `dense` domain-heavy documents scattered among noise documents. Token
/// counts are uniform in [min_len, max_len]. Noise documents occasionally
/// carry a domain word; a few are empty or entirely out of vocabulary.
inline std::vector<Document> make_planted_corpus(const PlantedWorld& w, std::size_t total, std::size_t dense,
                                                 std::uint64_t seed, std::size_t min_len = 20,
                                                 std::size_t max_len = 60) {
  Rng rng(seed);
  std::vector<bool> is_dense(total, false);
  for (std::size_t placed = 0; placed < dense;) {
    const auto i = rng.below(total);
    if (!is_dense[i]) {
      is_dense[i] = true;
      ++placed;
    }
  }
  std::vector<Document> docs;
  docs.reserve(total);
  char id[32];
  for (std::size_t i = 0; i < total; ++i) {
    std::snprintf(id, sizeof id, "p%06zu", i);
    const std::size_t len = min_len + rng.below(max_len - min_len + 1);
    const auto kind = rng.below(1000);
    std::string text;
    for (std::size_t t = 0; t < len; ++t) {
      const double r = rng.uniform();
      const std::string* word;
      if (!is_dense[i] && kind == 0) {
        break;  // empty document
      } else if (!is_dense[i] && kind < 4) {
        word = &w.oov_words[rng.below(w.oov_words.size())];
      } else if (is_dense[i] ? r < 0.6 : r < 0.02) {
        word = &w.domain_words[rng.below(w.domain_words.size())];
      } else if (r < 0.95) {
        word = &w.noise_words[rng.below(w.noise_words.size())];
      } else {
        word = &w.oov_words[rng.below(w.oov_words.size())];
      }
      if (!text.empty()) text += ' ';
      text += *word;
    }
    docs.push_back(make_document(id, std::move(text)));
  }
  return docs;
}

/// Straight-line Stage-1 reference over whitespace-separated lowercase text.
class ReferenceStage1 {
 public:
  ReferenceStage1(const std::vector<WordVector>& vocabulary, const std::vector<std::string>& lexicon) {
    for (const auto& r : vocabulary) {
      double n = 0.0;
      for (double v : r.values) n += v * v;
      n = std::sqrt(n);
      std::vector<double> u(r.values.size());
      for (std::size_t k = 0; k < u.size(); ++k) u[k] = static_cast<double>(static_cast<float>(r.values[k] / n));
      vectors_.emplace(r.word, std::move(u));
    }
    const std::size_t d = vocabulary.front().values.size();
    domain_.assign(d, 0.0);
    std::size_t m = 0;
    for (const auto& t : lexicon) {
      const auto it = vectors_.find(t);
      if (it == vectors_.end()) continue;
      for (std::size_t k = 0; k < d; ++k) domain_[k] += it->second[k];
      ++m;
    }
    for (auto& v : domain_) v /= static_cast<double>(m);
  }

  /// Cosine similarity, or NaN when no token is in the vocabulary.
  double similarity(const std::string& text) const {
    std::vector<double> b(domain_.size(), 0.0);
    std::size_t count = 0;
    std::istringstream words(text);
    std::string word;
    while (words >> word) {
      const auto it = vectors_.find(word);
      if (it == vectors_.end()) continue;
      for (std::size_t k = 0; k < b.size(); ++k) b[k] += it->second[k];
      ++count;
    }
    if (count == 0) return std::nan("");
    for (auto& v : b) v /= static_cast<double>(count);
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      ab += domain_[k] * b[k];
      aa += domain_[k] * domain_[k];
      bb += b[k] * b[k];
    }
    return ab / (std::sqrt(aa) * std::sqrt(bb));
  }

  bool retained(const std::string& text, double tau) const {
    const double s = similarity(text);
    return !std::isnan(s) && s > tau;
  }

 private:
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::vector<double> domain_;
};

/// Table where every lexicon term is a + N(0, sigma^2 I) around a random unit a.
inline std::vector<WordVector> make_residual_world(std::uint64_t seed, std::size_t terms, std::size_t d,
                                                   double sigma) {
  Rng rng(seed);
  const auto a = random_unit(rng, d);
  std::vector<WordVector> rows;
  char name[32];
  for (std::size_t i = 0; i < terms; ++i) {
    std::snprintf(name, sizeof name, "t%05zu", i);
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = a[k] + sigma * rng.normal();
    rows.push_back({name, v});
  }
  return rows;
}

/// GloVe-style table holding the bundled astronomy terms plus filler words,
/// standing in for a real pre-trained file.
inline std::vector<WordVector> make_astronomy_world(std::uint64_t seed, std::size_t d = 300,
                                                    std::size_t filler = 2000) {
  Rng rng(seed);
  const auto theme = random_unit(rng, d);
  std::vector<WordVector> rows;
  for (const auto& term : astronomy_lexicon().terms) {
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = 0.5 * theme[k] + 0.4 * rng.normal() / std::sqrt(double(d));
    rows.push_back({term, v});
  }
  char name[32];
  for (std::size_t i = 0; i < filler; ++i) {
    std::snprintf(name, sizeof name, "filler%05zu", i);
    std::vector<double> v(d);
    for (auto& x : v) x = 0.4 * rng.normal();
    rows.push_back({name, v});
  }
  return rows;
}

}  // namespace curate::testing
