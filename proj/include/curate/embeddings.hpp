#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curate/error.hpp"

namespace curate {

/// Dense vector used for every computed quantity (means, residuals, B).
using Vector = std::vector<double>;

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

}  // namespace detail

/// Immutable word -> unit vector table. Rows are stored contiguously as float;
/// all arithmetic on them is done in double by callers.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t vocab_size() const noexcept { return words_.size(); }
  /// Lines skipped at load because their vector had zero norm.
  std::size_t dropped_zero_vectors() const noexcept { return dropped_zero_; }

  /// Row for token, or nullopt. Keys are matched verbatim (no case folding).
  std::optional<std::span<const float>> lookup(std::string_view token) const {
    const auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return row(it->second);
  }

  /// Row index for token, or nullopt.
  std::optional<std::size_t> find(std::string_view token) const {
    const auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const float> row(std::size_t i) const {
    return {data_.data() + i * dimension_, dimension_};
  }
  const std::string& word(std::size_t i) const { return words_[i]; }

  /// Adds a word, L2-normalizing its vector. Returns false (and counts the
  /// drop) for an all-zero vector. A repeated word keeps its first vector.
  bool add(std::string word, std::span<const double> values) {
    if (dimension_ == 0) dimension_ = values.size();
    if (values.size() != dimension_ || dimension_ == 0) {
      throw ParseError("vector for '" + word + "' has " + std::to_string(values.size()) +
                       " components, expected " + std::to_string(dimension_));
    }
    double sq = 0.0;
    for (double v : values) sq += v * v;
    if (sq == 0.0) {
      ++dropped_zero_;
      return false;
    }
    if (index_.contains(std::string_view(word))) return true;
    const double inv = 1.0 / std::sqrt(sq);
    for (double v : values) data_.push_back(static_cast<float>(v * inv));
    index_.emplace(word, words_.size());
    words_.push_back(std::move(word));
    return true;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<float> data_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t, detail::StringHash, std::equal_to<>> index_;
  std::size_t dropped_zero_ = 0;
};

/// Loads a GloVe-style text file: "word f1 ... fd" per line, separated by
/// spaces or tabs. d comes from the first non-empty line; every vector is
/// L2-normalized and zero vectors are dropped. A leading fastText
/// "<count> <dimension>" header line is skipped.
inline EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read embeddings '" + path.string() + "'");
  EmbeddingTable table;
  std::string line;
  std::vector<double> values;
  std::uint64_t line_no = 0;
  bool any = false;
  bool header_seen = false;
  const auto is_sep = [](char c) { return c == ' ' || c == '\t'; };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rest(line);
    std::size_t p = 0;
    while (p < rest.size() && is_sep(rest[p])) ++p;
    if (p == rest.size()) continue;
    std::size_t q = p;
    while (q < rest.size() && !is_sep(rest[q])) ++q;
    std::string word(rest.substr(p, q - p));
    values.clear();
    p = q;
    for (;;) {
      while (p < rest.size() && is_sep(rest[p])) ++p;
      if (p == rest.size()) break;
      double v = 0.0;
      const auto [end, ec] = std::from_chars(rest.data() + p, rest.data() + rest.size(), v);
      if (ec != std::errc() || (end != rest.data() + rest.size() && !is_sep(*end))) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad number");
      }
      if (!std::isfinite(v)) throw ParseError(path.string() + ":" + std::to_string(line_no) + ": non-finite value");
      values.push_back(v);
      p = static_cast<std::size_t>(end - rest.data());
    }
    // fastText .vec files open with a "<count> <dimension>" header line.
    if (!any && !header_seen && values.size() == 1 && !word.empty() &&
        word.find_first_not_of("0123456789") == std::string::npos && values[0] >= 1.0 &&
        values[0] == std::floor(values[0])) {
      header_seen = true;
      continue;
    }
    if (values.empty()) throw ParseError(path.string() + ":" + std::to_string(line_no) + ": no vector components");
    if (table.dimension() != 0 && values.size() != table.dimension()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(table.dimension()) + " components, found " +
                       std::to_string(values.size()));
    }
    table.add(std::move(word), values);
    any = true;
  }
  if (in.bad()) throw IoError("read failure on embeddings '" + path.string() + "'");
  if (!any) throw ParseError("embeddings file '" + path.string() + "' is empty");
  return table;
}

// Small vector helpers shared by the filtering and analysis code.

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

inline void add_to(Vector& acc, std::span<const float> row) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += row[i];
}

inline Vector to_vector(std::span<const float> row) { return Vector(row.begin(), row.end()); }

}  // namespace curate
