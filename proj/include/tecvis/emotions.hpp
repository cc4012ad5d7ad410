#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace tecvis {

/// The eight basic emotions, in the canonical order used by every vector,
/// table and payload in the engine.
enum class Emotion : std::size_t {
  Anger = 0,
  Fear,
  Anticipation,
  Trust,
  Surprise,
  Sadness,
  Joy,
  Disgust,
};

inline constexpr std::size_t kEmotionCount = 8;

inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::Anger,    Emotion::Fear,    Emotion::Anticipation, Emotion::Trust,
    Emotion::Surprise, Emotion::Sadness, Emotion::Joy,          Emotion::Disgust,
};

inline constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "anger", "fear", "anticipation", "trust", "surprise", "sadness", "joy", "disgust",
};

constexpr std::size_t index_of(Emotion e) { return static_cast<std::size_t>(e); }

constexpr std::string_view emotion_name(Emotion e) { return kEmotionNames[index_of(e)]; }

constexpr std::optional<Emotion> parse_emotion(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kEmotionNames[i] == name) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

enum class Polarity { Negative, Neutral, Positive };

constexpr std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
    case Polarity::Positive: return "positive";
  }
  return "neutral";
}

constexpr std::optional<Polarity> parse_polarity(std::string_view s) {
  if (s == "negative") return Polarity::Negative;
  if (s == "neutral") return Polarity::Neutral;
  if (s == "positive") return Polarity::Positive;
  return std::nullopt;
}

/// Feelings category a tweet is attributed to.
enum class FeelingCategory { Positive, Negative, None };

constexpr std::string_view category_name(FeelingCategory c) {
  switch (c) {
    case FeelingCategory::Positive: return "positive";
    case FeelingCategory::Negative: return "negative";
    case FeelingCategory::None: return "none";
  }
  return "none";
}

constexpr std::optional<FeelingCategory> parse_category(std::string_view s) {
  if (s == "positive") return FeelingCategory::Positive;
  if (s == "negative") return FeelingCategory::Negative;
  if (s == "none") return FeelingCategory::None;
  return std::nullopt;
}

// anticipation, trust, surprise, joy
constexpr bool is_positive_feeling(Emotion e) {
  return e == Emotion::Anticipation || e == Emotion::Trust || e == Emotion::Surprise ||
         e == Emotion::Joy;
}

// anger, fear, sadness, disgust
constexpr bool is_negative_feeling(Emotion e) { return !is_positive_feeling(e); }

constexpr bool in_category(Emotion e, FeelingCategory c) {
  switch (c) {
    case FeelingCategory::Positive: return is_positive_feeling(e);
    case FeelingCategory::Negative: return is_negative_feeling(e);
    case FeelingCategory::None: return false;
  }
  return false;
}

}  // namespace tecvis
