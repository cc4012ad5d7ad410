#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tecvis/emotion.hpp"
#include "test_util.hpp"

namespace tecvis {
namespace {

EmotionLexicon lex_of(std::initializer_list<std::string> lines) {
  return parse_emotion_lexicon(std::vector<std::string>(lines));
}

bool has(const EmotionLexicon& lex, const std::string& word, Emotion e) {
  return (lex.lookup(word) >> index_of(e)) & 1u;
}

EmotionVector vec(std::initializer_list<std::pair<Emotion, double>> parts) {
  EmotionVector v;
  for (auto [e, s] : parts) v[e] = s;
  return v;
}

TEST(EmotionLexicon, FlagOneRowsOnly) {
  auto lex = lex_of({"dark\tsadness\t1", "dark\tfear\t1", "dark\tjoy\t0"});
  EXPECT_TRUE(has(lex, "dark", Emotion::Sadness));
  EXPECT_TRUE(has(lex, "dark", Emotion::Fear));
  EXPECT_FALSE(has(lex, "dark", Emotion::Joy));
  EXPECT_EQ(lex.lookup("absent"), 0);
}

TEST(EmotionLexicon, SentimentRowsSkipped) {
  auto lex = lex_of({"dark\tpositive\t1", "dark\tnegative\t0"});
  EXPECT_EQ(lex.skipped_sentiment_rows, 2u);
  EXPECT_EQ(lex.lookup("dark"), 0);
}

TEST(EmotionLexicon, Errors) {
  for (auto bad : {"dark\tbliss\t1", "dark\tjoy\t2", "dark\tjoy"}) {
    try {
      lex_of({bad});
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedLexicon);
    }
  }
  EXPECT_THROW(load_emotion_lexicon("/nonexistent.tsv"), Error);
}

TEST(EmotionLexicon, BundledDemo) {
  auto lex = load_emotion_lexicon(testing::data_path("emotion_lexicon.tsv"));
  EXPECT_GT(lex.associations.size(), 150u);
  for (Emotion e : kAllEmotions) {
    bool any = std::any_of(lex.associations.begin(), lex.associations.end(),
                           [&](const auto& kv) { return (kv.second >> index_of(e)) & 1u; });
    EXPECT_TRUE(any) << emotion_name(e);
  }
}

TEST(ScoreEmotions, Examples) {
  auto lex = lex_of({"dark\tsadness\t1", "dark\tfear\t1", "happy\tjoy\t1"});
  auto v = score_emotions({{"dark", "DARK", "happy"}, 0}, lex);
  EXPECT_DOUBLE_EQ(v[Emotion::Sadness], 0.4);
  EXPECT_DOUBLE_EQ(v[Emotion::Fear], 0.4);
  EXPECT_DOUBLE_EQ(v[Emotion::Joy], 0.2);
  EXPECT_EQ(v[Emotion::Anger], 0.0);

  EXPECT_TRUE(score_emotions({{"nothing", "here"}, 0}, lex).is_zero());

  auto single = score_emotions({{"dark"}, 0}, lex_of({"dark\tsadness\t1"}));
  EXPECT_EQ(single[Emotion::Sadness], 1.0);
}

TEST(ScoreEmotions, NormalizedAndOrderFree) {
  auto lex = load_emotion_lexicon(testing::data_path("emotion_lexicon.tsv"));
  std::vector<std::string> words = {"happy", "virus", "trust", "wow", "angry", "gross", "hope", "sad", "meh"};
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> toks;
    for (int k = 0, n = static_cast<int>(rng() % 8); k < n; ++k) toks.push_back(words[rng() % words.size()]);
    auto v = score_emotions({toks, 0}, lex);
    double sum = std::accumulate(v.scores.begin(), v.scores.end(), 0.0);
    if (!v.is_zero()) EXPECT_NEAR(sum, 1.0, 1e-9);
    for (double s : v.scores) EXPECT_TRUE(s >= 0.0 && s <= 1.0);
    std::shuffle(toks.begin(), toks.end(), rng);
    EXPECT_EQ(score_emotions({toks, 0}, lex), v);
  }
}

TEST(AssignCategory, Examples) {
  using enum Emotion;
  EXPECT_EQ(assign_category(vec({{Joy, .2}, {Sadness, .4}, {Fear, .4}}), Polarity::Positive),
            FeelingCategory::Negative);
  EXPECT_EQ(assign_category(vec({{Joy, .5}, {Anger, .5}}), Polarity::Positive), FeelingCategory::Positive);
  EXPECT_EQ(assign_category(vec({{Joy, .5}, {Anger, .5}}), Polarity::Negative), FeelingCategory::Negative);
  EXPECT_EQ(assign_category(vec({{Joy, .5}, {Anger, .5}}), Polarity::Neutral), FeelingCategory::None);
  for (auto p : {Polarity::Negative, Polarity::Neutral, Polarity::Positive}) {
    EXPECT_EQ(assign_category(EmotionVector{}, p), FeelingCategory::None);
  }
}

TEST(AssignCategory, ScaleInvariantOverCounts) {
  // Same count proportions scored from token lists of different lengths.
  auto lex = lex_of({"a\tjoy\t1", "b\tanger\t1", "c\ttrust\t1"});
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> toks;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 6); k < n; ++k) toks.push_back(std::string(1, "abc"[rng() % 3]));
    auto scaled = toks;
    for (int rep = 0; rep < 2 + static_cast<int>(rng() % 4); ++rep) scaled.insert(scaled.end(), toks.begin(), toks.end());
    for (auto p : {Polarity::Negative, Polarity::Neutral, Polarity::Positive}) {
      EXPECT_EQ(assign_category(score_emotions({toks, 0}, lex), p),
                assign_category(score_emotions({scaled, 0}, lex), p));
    }
  }
}

TEST(EffectiveEmotions, CategoryAndStrictThreshold) {
  using enum Emotion;
  auto eff = effective_emotions(vec({{Joy, .5}, {Trust, .08}, {Anger, .3}}), FeelingCategory::Positive);
  ASSERT_EQ(eff.size(), 1u);
  EXPECT_EQ(eff[0].first, Joy);
  EXPECT_EQ(eff[0].second, .5);

  EXPECT_TRUE(effective_emotions(vec({{Joy, 0.1}}), FeelingCategory::Positive).empty());
  EXPECT_TRUE(effective_emotions(vec({{Joy, .9}}), FeelingCategory::None).empty());
}

TEST(EffectiveEmotions, SubsetOfCategory) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(0, 1);
  for (int i = 0; i < 1000; ++i) {
    EmotionVector v;
    for (double& s : v.scores) s = d(rng) < 0.4 ? 0.0 : d(rng);
    for (auto cat : {FeelingCategory::Positive, FeelingCategory::Negative, FeelingCategory::None}) {
      for (auto [e, s] : effective_emotions(v, cat)) {
        EXPECT_TRUE(in_category(e, cat));
        EXPECT_GT(s, kContributionThreshold);
      }
    }
  }
}

}  // namespace
}  // namespace tecvis
