#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "curate/document.hpp"
#include "curate/error.hpp"

namespace curate {

enum class CorpusFormat { jsonl, text_dir };

inline CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::jsonl;
  if (name == "text_dir" || name == "text-dir") return CorpusFormat::text_dir;
  throw ConfigError("unknown corpus format '" + std::string(name) + "'");
}

/// A record the reader dropped instead of turning into a document.
struct SkipRecord {
  std::string source;
  std::uint64_t line = 0;
  std::string reason;
};

/// Streams documents in file order, then line order.
///
/// JSONL lines must be objects with a string "text". "id" is optional and is
/// synthesized as "<filename>:<line>" when absent or empty. An optional "meta"
/// object and any other top-level keys are folded into Document::meta
/// (non-string values keep their JSON spelling). Malformed lines, and lines
/// repeating an id already seen in this run, are skipped and recorded.
///
/// In text_dir mode every *.txt file under the root is one document whose id
/// is its path relative to the root.
class CorpusReader {
 public:
  CorpusReader(std::filesystem::path path, CorpusFormat format)
      : root_(std::move(path)), format_(format) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::exists(root_, ec)) throw IoError("cannot read corpus '" + root_.string() + "': no such file");
    if (fs::is_directory(root_)) {
      const char* ext = format_ == CorpusFormat::jsonl ? ".jsonl" : ".txt";
      for (const auto& entry : fs::recursive_directory_iterator(root_)) {
        if (entry.is_regular_file() && entry.path().extension() == ext) files_.push_back(entry.path());
      }
      std::sort(files_.begin(), files_.end(), [this](const auto& a, const auto& b) {
        return relative_id(a) < relative_id(b);
      });
    } else if (format_ == CorpusFormat::text_dir) {
      throw IoError("cannot read corpus '" + root_.string() + "': text_dir mode needs a directory");
    } else {
      files_.push_back(root_);
    }
  }

  /// Next document, or nullopt once every file is exhausted.
  std::optional<Document> next() {
    return format_ == CorpusFormat::jsonl ? next_jsonl() : next_text();
  }

  /// Reads up to max_docs documents into out (cleared first). Returns false at end of stream.
  bool next_chunk(std::vector<Document>& out, std::size_t max_docs) {
    out.clear();
    while (out.size() < max_docs) {
      auto doc = next();
      if (!doc) break;
      out.push_back(std::move(*doc));
    }
    return !out.empty();
  }

  const CorpusStats& stats() const noexcept { return stats_; }
  std::uint64_t skipped() const noexcept { return skipped_; }
  /// The first kMaxKeptSkips skip records; skipped() keeps the full count.
  const std::vector<SkipRecord>& skip_records() const noexcept { return skip_records_; }

  static constexpr std::size_t kMaxKeptSkips = 1000;

 private:
  std::string relative_id(const std::filesystem::path& p) const {
    return std::filesystem::relative(p, root_).generic_string();
  }

  void open_next_file() {
    current_.close();
    current_.clear();
    const auto& p = files_[file_index_++];
    current_.open(p, std::ios::binary);
    if (!current_) throw IoError("cannot read corpus file '" + p.string() + "'");
    current_name_ = std::filesystem::is_directory(root_) ? relative_id(p) : p.filename().string();
    line_no_ = 0;
  }

  void skip(std::string reason) {
    ++skipped_;
    if (skip_records_.size() < kMaxKeptSkips) {
      skip_records_.push_back({files_[file_index_ - 1].string(), line_no_, std::move(reason)});
    }
  }

  static std::string json_to_meta_value(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  std::optional<Document> next_jsonl() {
    std::string line;
    for (;;) {
      if (!current_.is_open() || !std::getline(current_, line)) {
        if (current_.is_open() && current_.bad()) {
          throw IoError("read failure in corpus file '" + files_[file_index_ - 1].string() + "'");
        }
        if (file_index_ >= files_.size()) return std::nullopt;
        open_next_file();
        continue;
      }
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;

      nlohmann::json obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (obj.is_discarded()) {
        skip("malformed JSON");
        continue;
      }
      if (!obj.is_object()) {
        skip("line is not a JSON object");
        continue;
      }
      const auto text_it = obj.find("text");
      if (text_it == obj.end() || !text_it->is_string()) {
        skip("missing string field \"text\"");
        continue;
      }
      std::string id;
      if (const auto id_it = obj.find("id"); id_it != obj.end() && !id_it->is_null()) {
        id = json_to_meta_value(*id_it);
      }
      if (id.empty()) id = current_name_ + ":" + std::to_string(line_no_);
      if (!seen_ids_.insert(id).second) {
        skip("duplicate id '" + id + "'");
        continue;
      }
      std::map<std::string, std::string> meta;
      for (const auto& [key, value] : obj.items()) {
        if (key != "id" && key != "text" && key != "meta") meta[key] = json_to_meta_value(value);
      }
      if (const auto meta_it = obj.find("meta"); meta_it != obj.end()) {
        if (meta_it->is_object()) {
          for (const auto& [key, value] : meta_it->items()) meta[key] = json_to_meta_value(value);
        } else if (!meta_it->is_null()) {
          meta["meta"] = json_to_meta_value(*meta_it);
        }
      }
      Document doc = make_document(std::move(id), text_it->get<std::string>(), std::move(meta));
      stats_.add(doc);
      return doc;
    }
  }

  std::optional<Document> next_text() {
    if (file_index_ >= files_.size()) return std::nullopt;
    const auto& p = files_[file_index_++];
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read corpus file '" + p.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure in corpus file '" + p.string() + "'");
    Document doc = make_document(relative_id(p), std::move(text));
    stats_.add(doc);
    return doc;
  }

  std::filesystem::path root_;
  CorpusFormat format_;
  std::vector<std::filesystem::path> files_;
  std::size_t file_index_ = 0;
  std::ifstream current_;
  std::string current_name_;
  std::uint64_t line_no_ = 0;
  std::unordered_set<std::string> seen_ids_;
  CorpusStats stats_;
  std::uint64_t skipped_ = 0;
  std::vector<SkipRecord> skip_records_;
};

/// Convenience: materialize a whole corpus.
inline std::vector<Document> read_corpus(const std::filesystem::path& path,
                                         CorpusFormat format = CorpusFormat::jsonl) {
  CorpusReader reader(path, format);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

/// Writes JSONL into "<path>.partial" and renames it over path on finish().
/// A writer destroyed without finish() removes the partial file.
class JsonlWriter {
 public:
  explicit JsonlWriter(std::filesystem::path path)
      : path_(std::move(path)), partial_(path_.string() + ".partial") {
    out_.open(partial_, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoError("cannot write '" + path_.string() + "'");
  }
  JsonlWriter(const JsonlWriter&) = delete;
  JsonlWriter& operator=(const JsonlWriter&) = delete;

  ~JsonlWriter() {
    if (!finished_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(partial_, ec);
    }
  }

  void write_line(const nlohmann::ordered_json& obj) {
    out_ << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    if (!out_) throw IoError("write failure on '" + path_.string() + "'");
  }

  void finish() {
    out_.flush();
    out_.close();
    if (out_.fail()) throw IoError("write failure on '" + path_.string() + "'");
    std::error_code ec;
    std::filesystem::rename(partial_, path_, ec);
    if (ec) throw IoError("cannot finalize '" + path_.string() + "': " + ec.message());
    finished_ = true;
  }

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::filesystem::path partial_;
  std::ofstream out_;
  bool finished_ = false;
};

/// Per-document extra fields appended after id/text/meta (e.g. "similarity").
using Annotations = nlohmann::ordered_json;

/// Streaming corpus writer; output order is call order.
class CorpusWriter {
 public:
  explicit CorpusWriter(std::filesystem::path path) : out_(std::move(path)) {}

  void write(const Document& doc, const Annotations& annotations = {}) {
    nlohmann::ordered_json line;
    line["id"] = doc.id;
    line["text"] = doc.text;
    line["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.meta) line["meta"][k] = v;
    if (annotations.is_object()) {
      for (const auto& [k, v] : annotations.items()) line[k] = v;
    }
    out_.write_line(line);
    stats_.add(doc);
  }

  CorpusStats finish() {
    out_.finish();
    return stats_;
  }

  const CorpusStats& stats() const noexcept { return stats_; }

 private:
  JsonlWriter out_;
  CorpusStats stats_;
};

/// Writes docs (with optional per-doc annotations, aligned by index) in order.
template <class Range>
CorpusStats write_corpus(const Range& docs, const std::filesystem::path& path,
                         const std::vector<Annotations>* annotations = nullptr) {
  CorpusWriter writer(path);
  std::size_t i = 0;
  for (const Document& doc : docs) {
    writer.write(doc, annotations && i < annotations->size() ? (*annotations)[i] : Annotations{});
    ++i;
  }
  return writer.finish();
}

}  // namespace curate
