#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"
#include "tecvis/lexicon_io.hpp"
#include "tecvis/textprep.hpp"

namespace tecvis {

/// Per-emotion association scores in canonical order. A nonzero vector sums
/// to one.
struct EmotionVector {
  std::array<double, kEmotionCount> scores{};

  double operator[](Emotion e) const { return scores[index_of(e)]; }
  double& operator[](Emotion e) { return scores[index_of(e)]; }

  bool is_zero() const {
    for (double s : scores)
      if (s != 0.0) return false;
    return true;
  }

  friend bool operator==(const EmotionVector&, const EmotionVector&) = default;
};

inline constexpr double kContributionThreshold = 0.1;

// Sums closer than this are a tie.
inline constexpr double kCategoryTieEpsilon = 1e-12;

/// Word to emotion-set associations, one bit per emotion. Keys are lowercase.
struct EmotionLexicon {
  std::unordered_map<std::string, std::uint8_t> associations;
  std::size_t skipped_sentiment_rows = 0;

  std::uint8_t lookup(const std::string& lower) const {
    auto it = associations.find(lower);
    return it == associations.end() ? 0 : it->second;
  }
};

/// Parses `token<TAB>emotion<TAB>flag` rows. Rows naming the lexicon's
/// positive/negative sentiment columns are skipped and counted; only flag=1
/// rows create associations.
inline EmotionLexicon parse_emotion_lexicon(const std::vector<std::string>& lines) {
  EmotionLexicon lex;
  std::size_t lineno = 0;
  for (const auto& raw : lines) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_tabs(line);
    if (fields.size() == 1) {
      fields.clear();
      std::istringstream ss{std::string(line)};
      for (std::string f; ss >> f;) fields.push_back(f);
    }
    auto where = "line " + std::to_string(lineno);
    if (fields.size() != 3) throw Error(ErrorCode::MalformedLexicon, where + ": expected 3 columns");

    std::string token = to_lower_ascii(detail::trim(fields[0]));
    std::string_view name = detail::trim(fields[1]);
    std::string_view flag = detail::trim(fields[2]);
    if (token.empty()) throw Error(ErrorCode::MalformedLexicon, where + ": empty token");
    if (flag != "0" && flag != "1") {
      throw Error(ErrorCode::MalformedLexicon, where + ": flag must be 0 or 1");
    }
    if (name == "positive" || name == "negative") {
      ++lex.skipped_sentiment_rows;
      continue;
    }
    auto emotion = parse_emotion(name);
    if (!emotion) {
      throw Error(ErrorCode::MalformedLexicon, where + ": unknown emotion '" + std::string(name) + "'");
    }
    if (flag == "1") lex.associations[token] |= static_cast<std::uint8_t>(1u << index_of(*emotion));
  }
  return lex;
}

inline EmotionLexicon load_emotion_lexicon(const std::string& path) {
  return parse_emotion_lexicon(detail::read_lines(path));
}

/// Each component is that emotion's hit count divided by the total hits
/// across all eight emotions.
inline EmotionVector score_emotions(const TokenizedText& tt, const EmotionLexicon& lex) {
  std::array<long, kEmotionCount> counts{};
  long total = 0;
  for (const auto& tok : tt.tokens) {
    std::uint8_t bits = lex.lookup(to_lower_ascii(tok));
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
      if (bits & (1u << i)) {
        ++counts[i];
        ++total;
      }
    }
  }
  EmotionVector ev;
  if (total == 0) return ev;
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    ev.scores[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return ev;
}

/// The category whose emotions carry the larger summed score. Equal nonzero
/// sums defer to sentiment polarity (neutral yields none).
inline FeelingCategory assign_category(const EmotionVector& ev, Polarity polarity) {
  double pos = 0.0, neg = 0.0;
  for (Emotion e : kAllEmotions) {
    if (is_positive_feeling(e)) pos += ev[e];
    else neg += ev[e];
  }
  if (pos == 0.0 && neg == 0.0) return FeelingCategory::None;
  if (std::abs(pos - neg) > kCategoryTieEpsilon) {
    return pos > neg ? FeelingCategory::Positive : FeelingCategory::Negative;
  }
  switch (polarity) {
    case Polarity::Positive: return FeelingCategory::Positive;
    case Polarity::Negative: return FeelingCategory::Negative;
    case Polarity::Neutral: return FeelingCategory::None;
  }
  return FeelingCategory::None;
}

using EmotionScore = std::pair<Emotion, double>;

/// Emotions of the tweet's own category whose score is strictly above the
/// threshold, in canonical order.
inline std::vector<EmotionScore> effective_emotions(const EmotionVector& ev, FeelingCategory cat,
                                                    double threshold = kContributionThreshold) {
  std::vector<EmotionScore> out;
  for (Emotion e : kAllEmotions) {
    if (in_category(e, cat) && ev[e] > threshold) out.emplace_back(e, ev[e]);
  }
  return out;
}

}  // namespace tecvis
