#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

namespace tecvis {

struct TokenizedText {
  std::vector<std::string> tokens;  // case preserved
  int exclamation_count = 0;
};

namespace detail {

inline bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

// Falls back to the input when ICU rejects it (invalid UTF-8).
inline std::string nfc(std::string_view text) {
  if (is_ascii(text)) return std::string(text);
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(text);
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString dst = norm->normalize(src, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  dst.toUTF8String(out);
  return out;
}

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u) != 0;
}

// Non-ASCII bytes count as word material so UTF-8 words survive stripping.
inline bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

inline bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

}  // namespace detail

/// Splits tweet text into scoring tokens.
///
/// Whitespace-delimited pieces are processed as follows: URLs (http/https)
/// and @-mentions are dropped; pieces with no letters or digits are kept
/// verbatim as emoticon candidates; everything else loses its leading and
/// trailing ASCII punctuation, which also removes a hashtag's '#'. Every '!'
/// in the text is counted before any stripping happens.
inline TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  const std::string normalized = detail::nfc(text);
  out.exclamation_count =
      static_cast<int>(std::count(normalized.begin(), normalized.end(), '!'));

  std::string_view rest = normalized;
  while (!rest.empty()) {
    std::size_t start = 0;
    while (start < rest.size() && detail::is_space(rest[start])) ++start;
    std::size_t end = start;
    while (end < rest.size() && !detail::is_space(rest[end])) ++end;
    std::string_view piece = rest.substr(start, end - start);
    rest.remove_prefix(end);
    if (piece.empty()) continue;

    if (detail::starts_with_ci(piece, "http://") || detail::starts_with_ci(piece, "https://") ||
        piece.front() == '@') {
      continue;
    }
    if (std::none_of(piece.begin(), piece.end(), detail::is_word_char)) {
      out.tokens.emplace_back(piece);
      continue;
    }
    std::size_t b = 0, e = piece.size();
    while (b < e && detail::is_ascii_punct(piece[b])) ++b;
    while (e > b && detail::is_ascii_punct(piece[e - 1])) --e;
    if (b < e) out.tokens.emplace_back(piece.substr(b, e - b));
  }
  return out;
}

/// True iff the token has at least two letters and all of them are uppercase.
inline bool is_allcaps(std::string_view token) {
  int letters = 0;
  for (char c : token) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u)) {
      if (!std::isupper(u)) return false;
      ++letters;
    }
  }
  return letters >= 2;
}

inline std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace tecvis
