#pragma once

#include <charconv>
#include <string>
#include <vector>

#include "tecvis/aggregate.hpp"
#include "tecvis/compare.hpp"
#include "tecvis/corpus.hpp"

namespace tecvis {

inline constexpr const char* kVersion = "0.1.0";

// Canonical JSON: object keys sorted (nlohmann's default std::map storage),
// doubles in shortest round-trip form, one trailing newline. The CLI and the
// HTTP server both emit bodies through canonical_dump.
inline std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

inline Json group_key_to_json(const GroupKey& k) {
  return Json{{"axis", std::string(key_axis_name(k.axis))}, {"value", k.value}};
}

inline Json group_aggregate_to_json(const GroupAggregate& g) {
  Json means = Json::object();
  for (Emotion e : kAllEmotions) {
    means[std::string(emotion_name(e))] = Json{{"mean", g[e].mean}, {"contributing_count", g[e].contributing_count}};
  }
  return Json{{"key", group_key_to_json(g.key)},
              {"tweet_count", g.tweet_count},
              {"polarity_counts",
               {{"negative", g.polarity_counts.negative},
                {"neutral", g.polarity_counts.neutral},
                {"positive", g.polarity_counts.positive}}},
              {"emotion_means", std::move(means)}};
}

inline Json aggregates_to_json(const std::vector<GroupAggregate>& rows) {
  Json arr = Json::array();
  for (const auto& g : rows) arr.push_back(group_aggregate_to_json(g));
  return arr;
}

inline Json comparison_to_json(const ComparisonResult& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    rows.push_back(Json{{"emotion", std::string(emotion_name(r.emotion))},
                        {"score_a", r.score_a},
                        {"score_b", r.score_b},
                        {"delta", r.delta},
                        {"higher_side", std::string(side_name(r.higher_side))}});
  }
  return Json{{"key_a", group_key_to_json(c.key_a)}, {"key_b", group_key_to_json(c.key_b)}, {"rows", std::move(rows)}};
}

/// Shortest decimal that round-trips to the same double.
inline std::string format_real(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// key, tweet_count, neg, neu, pos, then `<emotion>_mean,<emotion>_n` per
/// emotion in canonical order.
inline std::string aggregates_to_csv(const std::vector<GroupAggregate>& rows) {
  std::string out = "key,tweet_count,neg,neu,pos";
  for (Emotion e : kAllEmotions) {
    out += ',' + std::string(emotion_name(e)) + "_mean," + std::string(emotion_name(e)) + "_n";
  }
  out += '\n';
  for (const auto& g : rows) {
    out += g.key.value + ',' + std::to_string(g.tweet_count) + ',' + std::to_string(g.polarity_counts.negative) +
           ',' + std::to_string(g.polarity_counts.neutral) + ',' + std::to_string(g.polarity_counts.positive);
    for (Emotion e : kAllEmotions) {
      out += ',' + format_real(g[e].mean) + ',' + std::to_string(g[e].contributing_count);
    }
    out += '\n';
  }
  return out;
}

inline std::string comparison_to_csv(const ComparisonResult& c) {
  std::string out = "emotion,score_a,score_b,delta,higher_side\n";
  for (const auto& r : c.rows) {
    out += std::string(emotion_name(r.emotion)) + ',' + format_real(r.score_a) + ',' + format_real(r.score_b) + ',' +
           format_real(r.delta) + ',' + std::string(side_name(r.higher_side)) + '\n';
  }
  return out;
}

inline Json meta_payload(const StoreMeta& meta) {
  Json j = store_meta_to_json(meta);
  j["emotions"] = Json::array();
  for (auto name : kEmotionNames) j["emotions"].push_back(std::string(name));
  Json positive = Json::array(), negative = Json::array();
  for (Emotion e : kAllEmotions) {
    (is_positive_feeling(e) ? positive : negative).push_back(std::string(emotion_name(e)));
  }
  j["feeling_categories"] = Json{{"positive", positive}, {"negative", negative}};
  j["polarity_colors"] = Json{{"negative", "#d62728"}, {"neutral", "#1f77b4"}, {"positive", "#2ca02c"}};
  j["version"] = kVersion;
  return j;
}

}  // namespace tecvis
