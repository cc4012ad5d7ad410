#include <gtest/gtest.h>

#include <random>

#include "naive_reference.hpp"
#include "tecvis/aggregate.hpp"
#include "tecvis/pipeline.hpp"
#include "tecvis/synth.hpp"
#include "test_util.hpp"

namespace tecvis {
namespace {

Timestamp at(const char* iso) { return *parse_iso8601(iso); }

AnalyzedTweet tweet(std::string id, std::string state, const char* when, Polarity p = Polarity::Neutral,
                    std::initializer_list<std::pair<Emotion, double>> emotions = {}) {
  AnalyzedTweet t;
  t.id = std::move(id);
  t.state = std::move(state);
  t.lang = "en";
  t.created_at = at(when);
  t.polarity = p;
  t.compound = p == Polarity::Positive ? 0.5 : (p == Polarity::Negative ? -0.5 : 0.0);
  t.confidence = std::abs(t.compound);
  for (auto [e, s] : emotions) t.emotions[e] = s;
  t.category = assign_category(t.emotions, t.polarity);
  return t;
}

const std::vector<AnalyzedTweet>& synthetic_store() {
  static const std::vector<AnalyzedTweet> store = [] {
    Analyzer analyzer(load_sentiment_lexicon(testing::data_path("sentiment_lexicon.tsv")),
                      load_emotion_lexicon(testing::data_path("emotion_lexicon.tsv")));
    std::vector<AnalyzedTweet> out;
    for (const auto& raw : synthesize_corpus(5000, 42)) out.push_back(analyzer.analyze(raw));
    return out;
  }();
  return store;
}

TEST(BucketTimestamp, Examples) {
  auto ts = at("2021-01-15T12:00:00Z");
  EXPECT_EQ(bucket_timestamp(ts, Granularity::Month), (GroupKey{KeyAxis::Month, "2021-01"}));
  EXPECT_EQ(bucket_timestamp(ts, Granularity::Day), (GroupKey{KeyAxis::Day, "2021-01-15"}));
  EXPECT_EQ(bucket_timestamp(ts, Granularity::Week), (GroupKey{KeyAxis::Week, "2021-W02"}));
  // ISO week-year boundaries
  EXPECT_EQ(bucket_timestamp(at("2021-01-03T23:59:59Z"), Granularity::Week).value, "2020-W53");
  EXPECT_EQ(bucket_timestamp(at("2021-01-04T00:00:00Z"), Granularity::Week).value, "2021-W01");
  EXPECT_EQ(bucket_timestamp(at("2019-12-30T00:00:00Z"), Granularity::Week).value, "2020-W01");
}

TEST(BucketTimestamp, MatchesStrftime) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    Timestamp ts{std::chrono::seconds{static_cast<std::int64_t>(rng() % 4102444800ull)}};
    EXPECT_EQ(bucket_timestamp(ts, Granularity::Week).value, testing::strftime_utc(ts, "%G-W%V"));
    EXPECT_EQ(bucket_timestamp(ts, Granularity::Day).value, testing::strftime_utc(ts, "%Y-%m-%d"));
    EXPECT_TRUE(is_valid_key(bucket_timestamp(ts, Granularity::Week)));
  }
}

TEST(GroupKeys, Validation) {
  EXPECT_TRUE(is_valid_key({KeyAxis::State, "CA"}));
  EXPECT_FALSE(is_valid_key({KeyAxis::State, "ca"}));
  EXPECT_TRUE(is_valid_key({KeyAxis::Month, "2021-05"}));
  EXPECT_FALSE(is_valid_key({KeyAxis::Month, "2021-13"}));
  EXPECT_FALSE(is_valid_key({KeyAxis::Day, "2021-02-30"}));
  EXPECT_FALSE(is_valid_key({KeyAxis::Week, "2021-W54"}));
}

TEST(ApplyFilters, Clauses) {
  std::vector<AnalyzedTweet> ts = {
      tweet("1", "CA", "2021-01-01T00:00:00Z"), tweet("2", "CA", "2021-02-01T00:00:00Z"),
      tweet("3", "CA", "2021-03-01T00:00:00Z"), tweet("4", "NY", "2021-01-01T00:00:00Z"),
      tweet("5", "NY", "2021-02-01T00:00:00Z")};
  EXPECT_EQ(apply_filters(ts, {}), ts);

  FilterSpec ca;
  ca.states = std::set<std::string>{"CA"};
  EXPECT_EQ(apply_filters(ts, ca).size(), 3u);

  FilterSpec window;
  window.time_from = at("2021-02-01T00:00:00Z");
  window.time_to = at("2021-03-01T00:00:00Z");
  auto in_window = apply_filters(ts, window);
  ASSERT_EQ(in_window.size(), 2u);
  EXPECT_EQ(in_window[0].id, "2");

  FilterSpec jan;
  jan.restrict_to = GroupKey{KeyAxis::Month, "2021-01"};
  EXPECT_EQ(apply_filters(ts, jan).size(), 2u);
}

TEST(ApplyFilters, InclusiveScoreRange) {
  std::vector<AnalyzedTweet> ts = {tweet("a", "CA", "2021-01-01T00:00:00Z", Polarity::Neutral, {{Emotion::Joy, .2}}),
                                   tweet("b", "CA", "2021-01-01T00:00:00Z", Polarity::Neutral, {{Emotion::Joy, .3}}),
                                   tweet("c", "CA", "2021-01-01T00:00:00Z", Polarity::Neutral, {{Emotion::Joy, .5}})};
  FilterSpec f;
  f.emotion = Emotion::Joy;
  f.score_range = ScoreRange{0.3, 1.0};
  auto kept = apply_filters(ts, f);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].id, "b");
  EXPECT_EQ(kept[1].id, "c");
}

TEST(ApplyFilters, InvalidSpecs) {
  FilterSpec no_emotion;
  no_emotion.score_range = ScoreRange{0.1, 0.2};
  EXPECT_THROW(no_emotion.validate(), Error);
  FilterSpec inverted;
  inverted.emotion = Emotion::Joy;
  inverted.score_range = ScoreRange{0.9, 0.1};
  EXPECT_THROW(inverted.validate(), Error);
}

TEST(ApplyFilters, MonotoneInScoreRange) {
  const auto& store = synthetic_store();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0, 1);
  for (int i = 0; i < 50; ++i) {
    double a = d(rng), b = d(rng);
    FilterSpec narrow;
    narrow.emotion = kAllEmotions[rng() % 8];
    narrow.score_range = ScoreRange{std::min(a, b), std::max(a, b)};
    FilterSpec wide = narrow;
    wide.score_range = ScoreRange{narrow.score_range->lo * d(rng), narrow.score_range->hi + (1 - narrow.score_range->hi) * d(rng)};
    auto small = apply_filters(store, narrow);
    auto big = apply_filters(store, wide);
    EXPECT_LE(small.size(), big.size());
    std::set<std::string> big_ids;
    for (const auto& t : big) big_ids.insert(t.id);
    for (const auto& t : small) EXPECT_TRUE(big_ids.count(t.id));
  }
}

TEST(Aggregate, EmotionMeansUseEffectiveContributions) {
  std::vector<AnalyzedTweet> ts = {
      tweet("1", "CA", "2021-01-01T00:00:00Z", Polarity::Positive, {{Emotion::Joy, .4}, {Emotion::Trust, .6}}),
      tweet("2", "CA", "2021-01-02T00:00:00Z", Polarity::Positive, {{Emotion::Joy, .6}, {Emotion::Anger, .4}}),
  };
  auto rows = aggregate(ts, GroupAxis::State);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows[0][Emotion::Joy].mean, 0.5);
  EXPECT_EQ(rows[0][Emotion::Joy].contributing_count, 2u);
  // anger of tweet 2 is outside its positive category
  EXPECT_EQ(rows[0][Emotion::Anger].contributing_count, 0u);
  EXPECT_EQ(rows[0][Emotion::Anger].mean, 0.0);
}

TEST(Aggregate, WrongCategoryDoesNotContribute) {
  std::vector<AnalyzedTweet> ts = {tweet("1", "CA", "2021-01-01T00:00:00Z", Polarity::Negative,
                                         {{Emotion::Joy, .5}, {Emotion::Sadness, .5}})};
  ASSERT_EQ(ts[0].category, FeelingCategory::Negative);
  auto rows = aggregate(ts, GroupAxis::State);
  EXPECT_EQ(rows[0][Emotion::Joy].mean, 0.0);
  EXPECT_EQ(rows[0][Emotion::Joy].contributing_count, 0u);
  EXPECT_EQ(rows[0][Emotion::Sadness].contributing_count, 1u);
}

TEST(Aggregate, PolarityCountsAndOrdering) {
  std::vector<AnalyzedTweet> ts = {tweet("1", "NY", "2021-03-01T00:00:00Z", Polarity::Negative),
                                   tweet("2", "NY", "2021-01-01T00:00:00Z", Polarity::Negative),
                                   tweet("3", "NY", "2021-02-01T00:00:00Z", Polarity::Neutral),
                                   tweet("4", "NY", "2021-01-05T00:00:00Z", Polarity::Positive),
                                   tweet("5", "AK", "2021-02-01T00:00:00Z", Polarity::Positive)};
  auto states = aggregate(ts, GroupAxis::State);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(states[0].key.value, "AK");
  EXPECT_EQ(states[1].tweet_count, 4u);
  EXPECT_EQ(states[1].polarity_counts, (PolarityCounts{2, 1, 1}));

  auto months = aggregate(ts, GroupAxis::Time, Granularity::Month);
  ASSERT_EQ(months.size(), 3u);
  EXPECT_EQ(months[0].key, (GroupKey{KeyAxis::Month, "2021-01"}));
  EXPECT_EQ(months[2].key.value, "2021-03");
  EXPECT_THROW(aggregate(ts, GroupAxis::Time), Error);
  EXPECT_TRUE(aggregate(std::vector<AnalyzedTweet>{}, GroupAxis::State).empty());
}

TEST(Aggregate, MatchesNaiveReference) {
  const auto& store = synthetic_store();
  for (auto [axis, gran, name] : {std::tuple{GroupAxis::State, std::optional<Granularity>{}, "state"},
                                  std::tuple{GroupAxis::Time, std::optional{Granularity::Day}, "day"},
                                  std::tuple{GroupAxis::Time, std::optional{Granularity::Week}, "week"},
                                  std::tuple{GroupAxis::Time, std::optional{Granularity::Month}, "month"}}) {
    auto rows = aggregate(store, axis, gran);
    auto expected = testing::naive_group(store, name);
    ASSERT_EQ(rows.size(), expected.size()) << name;
    auto it = expected.begin();
    for (const auto& row : rows) {
      ASSERT_EQ(row.key.value, it->first);
      EXPECT_EQ(row.tweet_count, it->second.count);
      EXPECT_EQ(row.polarity_counts, (PolarityCounts{it->second.neg, it->second.neu, it->second.pos}));
      for (std::size_t i = 0; i < kEmotionCount; ++i) {
        EXPECT_EQ(row.emotion_means[i].contributing_count, it->second.n[i]);
        double mean = it->second.n[i] ? it->second.sum[i] / static_cast<double>(it->second.n[i]) : 0.0;
        EXPECT_NEAR(row.emotion_means[i].mean, mean, 1e-9);
        if (row.emotion_means[i].contributing_count > 0) {
          EXPECT_GT(row.emotion_means[i].mean, 0.1);
          EXPECT_LE(row.emotion_means[i].mean, 1.0);
        }
      }
      ++it;
    }
  }
}

TEST(Aggregate, Deterministic) {
  const auto& store = synthetic_store();
  EXPECT_EQ(aggregate(store, GroupAxis::Time, Granularity::Week), aggregate(store, GroupAxis::Time, Granularity::Week));
}

TEST(DrillDown, StateToMonthAndBack) {
  const auto& store = synthetic_store();
  auto states = aggregate(store, GroupAxis::State);
  for (const auto& s : states) {
    auto months = drill_down(store, s.key, GroupAxis::Time, Granularity::Month);
    std::size_t sum = 0;
    for (const auto& m : months) sum += m.tweet_count;
    EXPECT_EQ(sum, s.tweet_count) << s.key.value;
  }
  auto ca_months = drill_down(store, {KeyAxis::State, "CA"}, GroupAxis::Time, Granularity::Month);
  FilterSpec only_ca;
  only_ca.states = std::set<std::string>{"CA"};
  EXPECT_EQ(ca_months, aggregate(apply_filters(store, only_ca), GroupAxis::Time, Granularity::Month));

  for (const auto& m : aggregate(store, GroupAxis::Time, Granularity::Month)) {
    auto per_state = drill_down(store, m.key, GroupAxis::State, std::nullopt);
    std::size_t sum = 0;
    for (const auto& s : per_state) sum += s.tweet_count;
    EXPECT_EQ(sum, m.tweet_count) << m.key.value;
  }
  FilterSpec jan;
  jan.time_from = at("2021-01-01T00:00:00Z");
  jan.time_to = at("2021-02-01T00:00:00Z");
  EXPECT_EQ(drill_down(store, {KeyAxis::Month, "2021-01"}, GroupAxis::State, std::nullopt),
            aggregate(apply_filters(store, jan), GroupAxis::State));
}

TEST(DrillDown, Errors) {
  const auto& store = synthetic_store();
  try {
    drill_down(store, {KeyAxis::Month, "2019-01"}, GroupAxis::State, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGroup);
  }
  try {
    drill_down(store, {KeyAxis::State, "CA"}, GroupAxis::State, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AxisMismatch);
  }
}

}  // namespace
}  // namespace tecvis
