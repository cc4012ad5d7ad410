#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <map>
#include <optional>
#include <ranges>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tecvis/corpus.hpp"
#include "tecvis/emotion.hpp"
#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"
#include "tecvis/states.hpp"
#include "tecvis/timeutil.hpp"

namespace tecvis {

enum class KeyAxis { State, Day, Week, Month };
enum class Granularity { Day, Week, Month };
enum class GroupAxis { State, Time };

constexpr std::string_view key_axis_name(KeyAxis a) {
  switch (a) {
    case KeyAxis::State: return "state";
    case KeyAxis::Day: return "day";
    case KeyAxis::Week: return "week";
    case KeyAxis::Month: return "month";
  }
  return "state";
}

constexpr std::optional<KeyAxis> parse_key_axis(std::string_view s) {
  if (s == "state") return KeyAxis::State;
  if (s == "day") return KeyAxis::Day;
  if (s == "week") return KeyAxis::Week;
  if (s == "month") return KeyAxis::Month;
  return std::nullopt;
}

constexpr std::optional<Granularity> parse_granularity(std::string_view s) {
  if (s == "day") return Granularity::Day;
  if (s == "week") return Granularity::Week;
  if (s == "month") return Granularity::Month;
  return std::nullopt;
}

constexpr KeyAxis key_axis_for(Granularity g) {
  switch (g) {
    case Granularity::Day: return KeyAxis::Day;
    case Granularity::Week: return KeyAxis::Week;
    case Granularity::Month: return KeyAxis::Month;
  }
  return KeyAxis::Day;
}

constexpr std::optional<GroupAxis> parse_group_axis(std::string_view s) {
  if (s == "state") return GroupAxis::State;
  if (s == "time") return GroupAxis::Time;
  return std::nullopt;
}

constexpr GroupAxis group_axis_of(KeyAxis a) { return a == KeyAxis::State ? GroupAxis::State : GroupAxis::Time; }

/// A comparison unit: a state code, or a day ("YYYY-MM-DD"), ISO week
/// ("YYYY-Www") or month ("YYYY-MM") bucket.
struct GroupKey {
  KeyAxis axis = KeyAxis::State;
  std::string value;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

namespace detail {

inline bool digits_at(std::string_view s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return false;
  for (std::size_t i = pos; i < pos + n; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace detail

/// True when `value` is well formed for the key's axis.
inline bool is_valid_key(const GroupKey& key) {
  const std::string_view v = key.value;
  switch (key.axis) {
    case KeyAxis::State: return is_valid_state(v);
    case KeyAxis::Day: {
      if (v.size() != 10 || v[4] != '-' || v[7] != '-') return false;
      if (!detail::digits_at(v, 0, 4) || !detail::digits_at(v, 5, 2) || !detail::digits_at(v, 8, 2)) return false;
      return parse_iso8601(std::string(v) + "T00:00:00Z").has_value();
    }
    case KeyAxis::Week: {
      if (v.size() != 8 || v[4] != '-' || v[5] != 'W') return false;
      if (!detail::digits_at(v, 0, 4) || !detail::digits_at(v, 6, 2)) return false;
      int w = (v[6] - '0') * 10 + (v[7] - '0');
      return w >= 1 && w <= 53;
    }
    case KeyAxis::Month: {
      if (v.size() != 7 || v[4] != '-') return false;
      if (!detail::digits_at(v, 0, 4) || !detail::digits_at(v, 5, 2)) return false;
      int m = (v[5] - '0') * 10 + (v[6] - '0');
      return m >= 1 && m <= 12;
    }
  }
  return false;
}

/// Buckets a UTC instant at the given granularity.
inline GroupKey bucket_timestamp(Timestamp ts, Granularity g) {
  switch (g) {
    case Granularity::Day: return {KeyAxis::Day, format_date(ts)};
    case Granularity::Week: return {KeyAxis::Week, format_iso_week(ts)};
    case Granularity::Month: return {KeyAxis::Month, format_month(ts)};
  }
  return {KeyAxis::Day, format_date(ts)};
}

inline GroupKey group_key_for(const AnalyzedTweet& t, KeyAxis axis) {
  switch (axis) {
    case KeyAxis::State: return {KeyAxis::State, t.state};
    case KeyAxis::Day: return bucket_timestamp(t.created_at, Granularity::Day);
    case KeyAxis::Week: return bucket_timestamp(t.created_at, Granularity::Week);
    case KeyAxis::Month: return bucket_timestamp(t.created_at, Granularity::Month);
  }
  return {KeyAxis::State, t.state};
}

// ---------------------------------------------------------------------------
// Filters
// ---------------------------------------------------------------------------

struct ScoreRange {
  double lo = 0.0;
  double hi = 1.0;
  friend bool operator==(const ScoreRange&, const ScoreRange&) = default;
};

/// Active filter clauses; absent clauses match everything. The time window
/// is [time_from, time_to) and the score range is inclusive at both ends.
struct FilterSpec {
  std::optional<std::set<std::string>> states;
  std::optional<Timestamp> time_from;
  std::optional<Timestamp> time_to;
  std::optional<Emotion> emotion;
  std::optional<ScoreRange> score_range;
  std::optional<GroupKey> restrict_to;

  /// Throws BadQuery when the clauses are inconsistent.
  void validate() const {
    if (score_range) {
      if (!emotion) throw Error(ErrorCode::BadQuery, "score range requires an emotion");
      if (!(score_range->lo >= 0.0 && score_range->hi <= 1.0)) {
        throw Error(ErrorCode::BadQuery, "score range must lie within [0, 1]");
      }
      if (!(score_range->lo <= score_range->hi)) throw Error(ErrorCode::BadQuery, "score range has min > max");
    }
    if (states) {
      for (const auto& s : *states)
        if (!is_valid_state(s)) throw Error(ErrorCode::BadQuery, "unknown state '" + s + "'");
    }
    if (restrict_to && !is_valid_key(*restrict_to)) {
      throw Error(ErrorCode::BadQuery, "malformed restrict key '" + restrict_to->value + "'");
    }
  }

  bool matches(const AnalyzedTweet& t) const {
    if (states && !states->count(t.state)) return false;
    if (time_from && t.created_at < *time_from) return false;
    if (time_to && !(t.created_at < *time_to)) return false;
    if (emotion && score_range) {
      double s = t.emotions[*emotion];
      if (s < score_range->lo || s > score_range->hi) return false;
    }
    if (restrict_to && group_key_for(t, restrict_to->axis).value != restrict_to->value) return false;
    return true;
  }
};

template <typename R>
concept TweetRange =
    std::ranges::input_range<R> && std::convertible_to<std::ranges::range_reference_t<R>, const AnalyzedTweet&>;

/// Lazy view of the tweets passing `f`. `f` must outlive the view.
template <TweetRange R>
auto filtered(R&& tweets, const FilterSpec& f) {
  return std::forward<R>(tweets) | std::views::filter([&f](const AnalyzedTweet& t) { return f.matches(t); });
}

template <TweetRange R>
std::vector<AnalyzedTweet> apply_filters(R&& tweets, const FilterSpec& f) {
  f.validate();
  std::vector<AnalyzedTweet> out;
  for (const AnalyzedTweet& t : tweets)
    if (f.matches(t)) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

struct EmotionMean {
  double mean = 0.0;
  std::size_t contributing_count = 0;
  friend bool operator==(const EmotionMean&, const EmotionMean&) = default;
};

struct PolarityCounts {
  std::size_t negative = 0;
  std::size_t neutral = 0;
  std::size_t positive = 0;
  std::size_t total() const { return negative + neutral + positive; }
  friend bool operator==(const PolarityCounts&, const PolarityCounts&) = default;
};

/// One dot-plot row.
struct GroupAggregate {
  GroupKey key;
  std::size_t tweet_count = 0;
  PolarityCounts polarity_counts;
  std::array<EmotionMean, kEmotionCount> emotion_means{};

  const EmotionMean& operator[](Emotion e) const { return emotion_means[index_of(e)]; }
  friend bool operator==(const GroupAggregate&, const GroupAggregate&) = default;
};

namespace detail {

struct GroupAccumulator {
  std::size_t tweets = 0;
  PolarityCounts polarity;
  std::array<double, kEmotionCount> sums{};
  std::array<std::size_t, kEmotionCount> counts{};

  void add(const AnalyzedTweet& t) {
    ++tweets;
    switch (t.polarity) {
      case Polarity::Negative: ++polarity.negative; break;
      case Polarity::Neutral: ++polarity.neutral; break;
      case Polarity::Positive: ++polarity.positive; break;
    }
    for (auto [e, score] : effective_emotions(t.emotions, t.category)) {
      sums[index_of(e)] += score;
      ++counts[index_of(e)];
    }
  }

  GroupAggregate finish(GroupKey key) const {
    GroupAggregate g;
    g.key = std::move(key);
    g.tweet_count = tweets;
    g.polarity_counts = polarity;
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
      if (counts[i] > 0) g.emotion_means[i] = {sums[i] / static_cast<double>(counts[i]), counts[i]};
    }
    return g;
  }
};

inline KeyAxis resolve_key_axis(GroupAxis axis, std::optional<Granularity> granularity) {
  if (axis == GroupAxis::State) return KeyAxis::State;
  if (!granularity) throw Error(ErrorCode::BadQuery, "time axis requires a granularity");
  return key_axis_for(*granularity);
}

}  // namespace detail

/// Groups tweets by state or time bucket. Each emotion mean runs over the
/// tweets for which that emotion is effective (own category, above the
/// contribution threshold). Rows come out sorted by key, which is
/// alphabetical for states and chronological for time buckets; empty groups
/// are omitted.
template <TweetRange R>
std::vector<GroupAggregate> aggregate(R&& tweets, GroupAxis axis,
                                      std::optional<Granularity> granularity = std::nullopt) {
  const KeyAxis key_axis = detail::resolve_key_axis(axis, granularity);
  std::map<std::string, detail::GroupAccumulator> groups;
  for (const AnalyzedTweet& t : tweets) groups[group_key_for(t, key_axis).value].add(t);

  std::vector<GroupAggregate> out;
  out.reserve(groups.size());
  for (const auto& [value, acc] : groups) out.push_back(acc.finish({key_axis, value}));
  return out;
}

/// Pivots from one selected group onto the other axis, keeping any other
/// active filters.
template <TweetRange R>
std::vector<GroupAggregate> drill_down(R&& store, const GroupKey& selected, GroupAxis target_axis,
                                       std::optional<Granularity> granularity, FilterSpec f = {}) {
  if (group_axis_of(selected.axis) == target_axis) {
    throw Error(ErrorCode::AxisMismatch, "drill-down target axis must differ from the selected key's axis");
  }
  if (!is_valid_key(selected)) throw Error(ErrorCode::BadQuery, "malformed key '" + selected.value + "'");
  bool present = std::ranges::any_of(
      store, [&](const AnalyzedTweet& t) { return group_key_for(t, selected.axis).value == selected.value; });
  if (!present) throw Error(ErrorCode::UnknownGroup, "no tweets in group '" + selected.value + "'");

  f.restrict_to = selected;
  f.validate();
  return aggregate(filtered(store, f), target_axis, granularity);
}

}  // namespace tecvis
