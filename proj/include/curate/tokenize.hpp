#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curate/detail/unicode_tables.hpp"

namespace curate {

namespace detail {

// Decodes one UTF-8 sequence starting at text[pos]. Invalid bytes decode as
// U+FFFD and consume one byte, so the scan always makes progress.
inline char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + len > text.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return 0xFFFD;
  }
  pos += len;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_word_codepoint(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  }
  const auto it = std::upper_bound(kWordRanges.begin(), kWordRanges.end(), cp,
                                   [](char32_t c, const CodepointRange& r) { return c < r.first; });
  return it != kWordRanges.begin() && cp <= std::prev(it)->last;
}

inline void append_lower(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + ('a' - 'A') : cp));
    return;
  }
  const auto it = std::lower_bound(kLowerMappings.begin(), kLowerMappings.end(), cp,
                                   [](const LowerMapping& m, char32_t c) { return m.from < c; });
  if (it != kLowerMappings.end() && it->from == cp) {
    out.append(it->to);
  } else {
    append_utf8(out, cp);
  }
}

// Calls on_token(begin, end) for every maximal run of word codepoints.
template <class F>
void for_each_token_span(std::string_view text, F&& on_token) {
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < text.size()) {
    const std::size_t here = pos;
    const bool word = is_word_codepoint(decode_utf8(text, pos));
    if (word && start == std::string_view::npos) {
      start = here;
    } else if (!word && start != std::string_view::npos) {
      on_token(start, here);
      start = std::string_view::npos;
    }
  }
  if (start != std::string_view::npos) on_token(start, text.size());
}

}  // namespace detail

/// Lowercase version of a single token (full Unicode lowercase mapping).
inline std::string to_lower(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  std::size_t pos = 0;
  while (pos < token.size()) detail::append_lower(out, detail::decode_utf8(token, pos));
  return out;
}

/// Canonical tokenizer: maximal runs of Unicode letters/digits, lowercased.
/// Everything else (punctuation, whitespace, marks, symbols) separates tokens.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  detail::for_each_token_span(text, [&](std::size_t b, std::size_t e) {
    tokens.push_back(to_lower(text.substr(b, e - b)));
  });
  return tokens;
}

/// Same as tokenize(text).size() without materializing tokens.
inline std::size_t count_tokens(std::string_view text) {
  std::size_t n = 0;
  detail::for_each_token_span(text, [&](std::size_t, std::size_t) { ++n; });
  return n;
}

}  // namespace curate
