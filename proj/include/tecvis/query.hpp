#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tecvis/aggregate.hpp"
#include "tecvis/error.hpp"
#include "tecvis/sentiment.hpp"

namespace tecvis {

/// Raw `name=value` parameters, as they arrive from a URL query string or
/// from CLI flags. Both front ends funnel through the parsers below.
using QueryParams = std::map<std::string, std::string>;

struct AggregateQuery {
  GroupAxis axis = GroupAxis::State;
  std::optional<Granularity> granularity;
  FilterSpec filter;

  KeyAxis key_axis() const { return detail::resolve_key_axis(axis, granularity); }
};

struct CompareQuery {
  AggregateQuery base;
  GroupKey a;
  GroupKey b;
};

struct TweetsQuery {
  GroupKey key;
  std::size_t limit = 50;
  std::size_t offset = 0;
};

inline constexpr std::size_t kMaxTweetsPageSize = 500;

namespace detail {

inline const std::string* param(const QueryParams& p, const char* name) {
  auto it = p.find(name);
  return it == p.end() ? nullptr : &it->second;
}

[[noreturn]] inline void bad_query(const std::string& message) { throw Error(ErrorCode::BadQuery, message); }

inline double parse_unit_real(const std::string& raw, const char* name) {
  double v = 0;
  if (!parse_real(raw, v)) bad_query(std::string("'") + name + "' is not a number");
  if (v < 0.0 || v > 1.0) bad_query(std::string("'") + name + "' must lie within [0, 1]");
  return v;
}

inline std::size_t parse_count(const std::string& raw, const char* name) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (raw.empty() || ec != std::errc{} || ptr != raw.data() + raw.size()) {
    bad_query(std::string("'") + name + "' must be a non-negative integer");
  }
  return v;
}

// Accepts a full ISO-8601 instant or a bare date (midnight UTC).
inline Timestamp parse_bound(const std::string& raw, const char* name) {
  auto ts = parse_iso8601(raw);
  if (!ts && raw.size() == 10) ts = parse_iso8601(raw + "T00:00:00Z");
  if (!ts) bad_query(std::string("'") + name + "' is not an ISO-8601 timestamp");
  return *ts;
}

inline std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    auto piece = trim(s.substr(pos, comma - pos));
    if (!piece.empty()) out.emplace_back(piece);
    pos = comma + 1;
  }
  return out;
}

/// Validates a group key against the expected axis; a key that is well
/// formed for another axis is reported as an axis mismatch.
inline GroupKey parse_key_for_axis(const std::string& value, KeyAxis axis, const char* name) {
  GroupKey key{axis, value};
  if (axis == KeyAxis::State) {
    if (auto up = normalize_state(value)) key.value = *up;
  }
  if (is_valid_key(key)) return key;
  for (KeyAxis other : {KeyAxis::State, KeyAxis::Day, KeyAxis::Week, KeyAxis::Month}) {
    if (other != axis && is_valid_key({other, value})) {
      throw Error(ErrorCode::AxisMismatch, std::string("'") + name + "' is a " +
                                               std::string(key_axis_name(other)) + " key, expected " +
                                               std::string(key_axis_name(axis)));
    }
  }
  bad_query(std::string("'") + name + "' is not a valid " + std::string(key_axis_name(axis)) + " key");
}

}  // namespace detail

inline AggregateQuery parse_aggregate_query(const QueryParams& p) {
  using namespace detail;
  AggregateQuery q;

  if (auto* axis = param(p, "axis")) {
    auto parsed = parse_group_axis(*axis);
    if (!parsed) bad_query("axis must be 'state' or 'time'");
    q.axis = *parsed;
  }
  if (auto* g = param(p, "granularity"); g && !g->empty()) {
    auto parsed = parse_granularity(*g);
    if (!parsed) bad_query("granularity must be 'day', 'week' or 'month'");
    q.granularity = *parsed;
  }
  if (q.axis == GroupAxis::Time && !q.granularity) bad_query("time axis requires a granularity");
  if (q.axis == GroupAxis::State) q.granularity.reset();

  FilterSpec& f = q.filter;
  if (auto* states = param(p, "states"); states && !states->empty()) {
    std::set<std::string> set;
    for (const auto& s : split_commas(*states)) {
      auto code = normalize_state(s);
      if (!code) bad_query("unknown state '" + s + "'");
      set.insert(*code);
    }
    f.states = std::move(set);
  }
  if (auto* from = param(p, "from"); from && !from->empty()) f.time_from = parse_bound(*from, "from");
  if (auto* to = param(p, "to"); to && !to->empty()) f.time_to = parse_bound(*to, "to");

  if (auto* e = param(p, "emotion"); e && !e->empty()) {
    auto parsed = parse_emotion(*e);
    if (!parsed) bad_query("unknown emotion '" + *e + "'");
    f.emotion = *parsed;
  }
  const std::string* min = param(p, "min");
  const std::string* max = param(p, "max");
  if ((min && !min->empty()) || (max && !max->empty())) {
    if (!f.emotion) bad_query("min/max require an emotion");
    ScoreRange r;
    if (min && !min->empty()) r.lo = parse_unit_real(*min, "min");
    if (max && !max->empty()) r.hi = parse_unit_real(*max, "max");
    if (r.lo > r.hi) bad_query("min must not exceed max");
    f.score_range = r;
  }

  const std::string* raxis = param(p, "restrict_axis");
  const std::string* rvalue = param(p, "restrict_value");
  bool has_raxis = raxis && !raxis->empty();
  bool has_rvalue = rvalue && !rvalue->empty();
  if (has_raxis != has_rvalue) bad_query("restrict_axis and restrict_value go together");
  if (has_raxis) {
    auto ka = parse_key_axis(*raxis);
    if (!ka) bad_query("restrict_axis must be state, day, week or month");
    f.restrict_to = parse_key_for_axis(*rvalue, *ka, "restrict_value");
  }

  f.validate();
  return q;
}

inline CompareQuery parse_compare_query(const QueryParams& p) {
  CompareQuery q{parse_aggregate_query(p), {}, {}};
  const std::string* a = detail::param(p, "a");
  const std::string* b = detail::param(p, "b");
  if (!a || a->empty() || !b || b->empty()) detail::bad_query("both 'a' and 'b' are required");
  const KeyAxis axis = q.base.key_axis();
  q.a = detail::parse_key_for_axis(*a, axis, "a");
  q.b = detail::parse_key_for_axis(*b, axis, "b");
  if (q.a == q.b) throw Error(ErrorCode::SameGroup, "'a' and 'b' name the same group");
  return q;
}

/// `axis` is state/time (time needs `granularity`) or directly day/week/month.
inline TweetsQuery parse_tweets_query(const QueryParams& p) {
  using namespace detail;
  TweetsQuery q;
  const std::string* axis = param(p, "axis");
  if (!axis || axis->empty()) bad_query("'axis' is required");
  KeyAxis key_axis;
  if (auto direct = parse_key_axis(*axis)) {
    key_axis = *direct;
  } else if (*axis == "time") {
    const std::string* g = param(p, "granularity");
    auto parsed = g ? parse_granularity(*g) : std::nullopt;
    if (!parsed) bad_query("time axis requires granularity day, week or month");
    key_axis = key_axis_for(*parsed);
  } else {
    bad_query("unknown axis '" + *axis + "'");
  }
  const std::string* value = param(p, "value");
  if (!value || value->empty()) bad_query("'value' is required");
  q.key = parse_key_for_axis(*value, key_axis, "value");

  if (auto* limit = param(p, "limit")) q.limit = parse_count(*limit, "limit");
  if (q.limit > kMaxTweetsPageSize) bad_query("limit must be at most 500");
  if (auto* offset = param(p, "offset")) q.offset = parse_count(*offset, "offset");
  return q;
}

}  // namespace tecvis
