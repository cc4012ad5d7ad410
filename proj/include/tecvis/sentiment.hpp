#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"
#include "tecvis/lexicon_io.hpp"
#include "tecvis/textprep.hpp"

namespace tecvis {

/// Tunables of the valence rules. Defaults follow the rule-based valence
/// reasoner the pipeline emulates.
struct SentimentConfig {
  double caps_increment = 0.733;
  double booster_increment = 0.293;
  double negation_scalar = -0.74;
  double exclamation_increment = 0.292;
  int exclamation_cap = 4;
  double normalization_alpha = 15.0;
  double polarity_threshold = 0.05;
  int booster_window = 2;
  int negation_window = 3;
};

inline constexpr double kMaxValence = 4.0;

/// Token valences plus booster increments and negators. Keys are lowercase.
struct SentimentLexicon {
  std::unordered_map<std::string, double> valence;
  std::unordered_map<std::string, double> boosters;
  std::unordered_set<std::string> negators;
  std::vector<std::string> warnings;

  const double* find_valence(const std::string& lower) const {
    auto it = valence.find(lower);
    return it == valence.end() ? nullptr : &it->second;
  }
  const double* find_booster(const std::string& lower) const {
    auto it = boosters.find(lower);
    return it == boosters.end() ? nullptr : &it->second;
  }
  bool is_negator(const std::string& lower) const { return negators.count(lower) != 0; }
};

struct PolarityResult {
  double compound = 0.0;
  Polarity polarity = Polarity::Neutral;
  double confidence = 0.0;
};

namespace detail {

inline bool parse_real(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace detail

/// Parses the sentiment lexicon TSV. Lines are `token<TAB>valence` until a
/// `#boosters` marker (`token<TAB>increment`, increment optional) or a
/// `#negators` marker (one token per line); `#valence` switches back. Other
/// lines starting with '#' and blank lines are ignored. A repeated token
/// keeps its last value and leaves a warning.
inline SentimentLexicon parse_sentiment_lexicon(const std::vector<std::string>& lines,
                                                const SentimentConfig& cfg = {}) {
  enum class Section { Valence, Boosters, Negators };
  SentimentLexicon lex;
  Section section = Section::Valence;
  std::size_t lineno = 0;
  for (const auto& raw : lines) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == "#boosters") section = Section::Boosters;
      else if (line == "#negators") section = Section::Negators;
      else if (line == "#valence") section = Section::Valence;
      continue;
    }
    auto fields = detail::split_tabs(line);
    std::string token = to_lower_ascii(detail::trim(fields[0]));
    auto where = "line " + std::to_string(lineno);
    if (token.empty()) throw Error(ErrorCode::MalformedLexicon, where + ": empty token");

    switch (section) {
      case Section::Valence: {
        double v = 0;
        if (fields.size() < 2 || !detail::parse_real(fields[1], v)) {
          throw Error(ErrorCode::MalformedLexicon, where + ": non-numeric valence for '" + token + "'");
        }
        if (std::abs(v) > kMaxValence) {
          throw Error(ErrorCode::MalformedLexicon, where + ": valence out of [-4, 4] for '" + token + "'");
        }
        if (lex.valence.count(token)) lex.warnings.push_back(where + ": duplicate token '" + token + "'");
        lex.valence[token] = v;
        break;
      }
      case Section::Boosters: {
        double inc = cfg.booster_increment;
        if (fields.size() >= 2 && !detail::trim(fields[1]).empty() &&
            !detail::parse_real(fields[1], inc)) {
          throw Error(ErrorCode::MalformedLexicon, where + ": non-numeric booster increment for '" + token + "'");
        }
        if (lex.boosters.count(token)) lex.warnings.push_back(where + ": duplicate booster '" + token + "'");
        lex.boosters[token] = inc;
        break;
      }
      case Section::Negators:
        if (!lex.negators.insert(token).second) {
          lex.warnings.push_back(where + ": duplicate negator '" + token + "'");
        }
        break;
    }
  }
  return lex;
}

inline SentimentLexicon load_sentiment_lexicon(const std::string& path, const SentimentConfig& cfg = {}) {
  return parse_sentiment_lexicon(detail::read_lines(path), cfg);
}

namespace detail {

inline double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

inline bool has_letter(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace detail

/// Sums per-token valences after emphasis, boosting and negation, then
/// amplifies the total by the (capped) exclamation count.
///
/// Caps emphasis applies only when the text mixes shouted and non-shouted
/// words: at least one token is all-caps and at least one other lettered
/// token is not.
inline double raw_valence(const TokenizedText& tt, const SentimentLexicon& lex,
                          const SentimentConfig& cfg = {}) {
  std::vector<std::string> lower;
  lower.reserve(tt.tokens.size());
  int lettered = 0, shouted = 0;
  for (const auto& tok : tt.tokens) {
    lower.push_back(to_lower_ascii(tok));
    if (detail::has_letter(tok)) ++lettered;
    if (is_allcaps(tok)) ++shouted;
  }
  const bool mixed_case = shouted > 0 && shouted < lettered;

  double sum = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lex.find_booster(lower[i])) continue;
    const double* base = lex.find_valence(lower[i]);
    if (!base || *base == 0.0) continue;
    double v = *base;
    const double dir = detail::sign(v);

    if (mixed_case && is_allcaps(tt.tokens[i])) v += dir * cfg.caps_increment;

    for (int j = 1; j <= cfg.booster_window && static_cast<std::size_t>(j) <= i; ++j) {
      if (const double* inc = lex.find_booster(lower[i - j])) v += dir * *inc;
    }
    for (int j = 1; j <= cfg.negation_window && static_cast<std::size_t>(j) <= i; ++j) {
      if (lex.is_negator(lower[i - j])) {
        v *= cfg.negation_scalar;
        break;
      }
    }
    sum += v;
  }

  const int bangs = std::min(tt.exclamation_count, cfg.exclamation_cap);
  sum += detail::sign(sum) * cfg.exclamation_increment * bangs;
  return sum;
}

/// Maps an unbounded valence sum into (-1, 1): x / sqrt(x^2 + alpha).
inline double normalize_valence(double x, double alpha = 15.0) {
  if (x == 0.0) return 0.0;
  return x / std::sqrt(x * x + alpha);
}

inline PolarityResult classify_polarity(double compound, double threshold = 0.05) {
  PolarityResult r;
  r.compound = compound;
  r.confidence = std::abs(compound);
  if (compound >= threshold) r.polarity = Polarity::Positive;
  else if (compound <= -threshold) r.polarity = Polarity::Negative;
  else r.polarity = Polarity::Neutral;
  return r;
}

inline PolarityResult score_sentiment(const TokenizedText& tt, const SentimentLexicon& lex,
                                      const SentimentConfig& cfg = {}) {
  double compound = normalize_valence(raw_valence(tt, lex, cfg), cfg.normalization_alpha);
  return classify_polarity(compound, cfg.polarity_threshold);
}

}  // namespace tecvis
