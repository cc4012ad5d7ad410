#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tecvis/emotion.hpp"
#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"
#include "tecvis/states.hpp"
#include "tecvis/timeutil.hpp"

namespace tecvis {

using Json = nlohmann::json;

/// One input record. An empty `state` means the tweet carried no resolved
/// geolocation.
struct RawTweet {
  std::string id;
  std::string text;
  Timestamp created_at{};
  std::string state;
  std::string lang;

  friend bool operator==(const RawTweet&, const RawTweet&) = default;
};

struct AnalyzedTweet : RawTweet {
  double compound = 0.0;
  Polarity polarity = Polarity::Neutral;
  double confidence = 0.0;
  EmotionVector emotions;
  FeelingCategory category = FeelingCategory::None;

  friend bool operator==(const AnalyzedTweet&, const AnalyzedTweet&) = default;
};

struct StoreMeta {
  std::size_t tweet_count = 0;
  std::size_t rejected_count = 0;
  std::optional<Timestamp> date_min;
  std::optional<Timestamp> date_max;
  std::set<std::string> states_present;

  friend bool operator==(const StoreMeta&, const StoreMeta&) = default;
};

enum class RejectReason { NonEnglish, NoGeolocation, InvalidState };

constexpr std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::NonEnglish: return "NonEnglish";
    case RejectReason::NoGeolocation: return "NoGeolocation";
    case RejectReason::InvalidState: return "InvalidState";
  }
  return "Unknown";
}

namespace detail {

inline std::string required_string(const Json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw Error(ErrorCode::MalformedRecord, std::string("missing field '") + field + "'");
  if (!it->is_string()) throw Error(ErrorCode::MalformedRecord, std::string("field '") + field + "' is not a string");
  return it->get<std::string>();
}

inline double required_number(const Json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::MalformedRecord, std::string("missing numeric field '") + field + "'");
  }
  return it->get<double>();
}

inline Json parse_object(std::string_view line) {
  Json obj = Json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw Error(ErrorCode::MalformedRecord, "record is not a JSON object");
  }
  return obj;
}

inline Timestamp parse_timestamp_field(const std::string& value) {
  auto ts = parse_iso8601(value);
  if (!ts) throw Error(ErrorCode::BadTimestamp, "bad timestamp '" + value + "'");
  return *ts;
}

}  // namespace detail

/// Parses one input JSONL line. `id` may be a JSON string or integer. A
/// missing, null or empty `state` is accepted as "no geolocation" and left
/// for validate_tweet to reject.
inline RawTweet parse_raw_tweet(std::string_view line) {
  Json obj = detail::parse_object(line);
  RawTweet t;

  auto id = obj.find("id");
  if (id == obj.end()) throw Error(ErrorCode::MalformedRecord, "missing field 'id'");
  if (id->is_string()) t.id = id->get<std::string>();
  else if (id->is_number_integer()) t.id = id->dump();
  else throw Error(ErrorCode::MalformedRecord, "field 'id' must be a string or integer");
  if (t.id.empty()) throw Error(ErrorCode::MalformedRecord, "empty id");

  t.text = detail::required_string(obj, "text");
  t.created_at = detail::parse_timestamp_field(detail::required_string(obj, "created_at"));
  t.lang = detail::required_string(obj, "lang");

  auto st = obj.find("state");
  if (st != obj.end() && !st->is_null()) {
    if (!st->is_string()) throw Error(ErrorCode::MalformedRecord, "field 'state' is not a string");
    auto raw = st->get<std::string>();
    if (!raw.empty()) {
      auto code = normalize_state(raw);
      if (!code) throw Error(ErrorCode::BadState, "unknown state '" + raw + "'");
      t.state = *code;
    }
  }
  return t;
}

inline Json raw_tweet_to_json(const RawTweet& t) {
  return Json{{"id", t.id},
              {"text", t.text},
              {"created_at", format_iso8601(t.created_at)},
              {"state", t.state},
              {"lang", t.lang}};
}

/// Only English tweets with one of the 51 state codes pass. The language
/// check looks at the primary subtag, case-insensitively.
inline std::optional<RejectReason> validate_tweet(const RawTweet& t) {
  std::string primary = t.lang.substr(0, t.lang.find_first_of("-_"));
  if (to_lower_ascii(primary) != "en") return RejectReason::NonEnglish;
  if (t.state.empty()) return RejectReason::NoGeolocation;
  if (!is_valid_state(t.state)) return RejectReason::InvalidState;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Store records
// ---------------------------------------------------------------------------

inline Json analyzed_tweet_to_json(const AnalyzedTweet& t) {
  Json emotions = Json::object();
  for (Emotion e : kAllEmotions) emotions[std::string(emotion_name(e))] = t.emotions[e];
  Json j = raw_tweet_to_json(t);
  j["compound"] = t.compound;
  j["polarity"] = std::string(polarity_name(t.polarity));
  j["confidence"] = t.confidence;
  j["emotions"] = std::move(emotions);
  j["category"] = std::string(category_name(t.category));
  return j;
}

/// One store line: keys sorted, floats in shortest round-trip form.
inline std::string serialize_analyzed_tweet(const AnalyzedTweet& t) {
  return analyzed_tweet_to_json(t).dump();
}

inline AnalyzedTweet parse_analyzed_tweet(std::string_view line) {
  Json obj = detail::parse_object(line);
  AnalyzedTweet t;
  t.id = detail::required_string(obj, "id");
  if (t.id.empty()) throw Error(ErrorCode::MalformedRecord, "empty id");
  t.text = detail::required_string(obj, "text");
  t.created_at = detail::parse_timestamp_field(detail::required_string(obj, "created_at"));
  t.state = detail::required_string(obj, "state");
  if (!is_valid_state(t.state)) throw Error(ErrorCode::BadState, "unknown state '" + t.state + "'");
  t.lang = detail::required_string(obj, "lang");
  t.compound = detail::required_number(obj, "compound");
  t.confidence = detail::required_number(obj, "confidence");

  auto pol = parse_polarity(detail::required_string(obj, "polarity"));
  if (!pol) throw Error(ErrorCode::MalformedRecord, "bad polarity");
  t.polarity = *pol;
  auto cat = parse_category(detail::required_string(obj, "category"));
  if (!cat) throw Error(ErrorCode::MalformedRecord, "bad category");
  t.category = *cat;

  auto em = obj.find("emotions");
  if (em == obj.end() || !em->is_object()) throw Error(ErrorCode::MalformedRecord, "missing emotions object");
  for (Emotion e : kAllEmotions) {
    double v = detail::required_number(*em, std::string(emotion_name(e)).c_str());
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::MalformedRecord, "emotion score outside [0, 1]");
    t.emotions[e] = v;
  }
  if (!(t.compound >= -1.0 && t.compound <= 1.0)) {
    throw Error(ErrorCode::MalformedRecord, "compound outside [-1, 1]");
  }
  return t;
}

// ---------------------------------------------------------------------------
// Store files
// ---------------------------------------------------------------------------

inline std::string meta_path_for(const std::string& store_path) { return store_path + ".meta.json"; }

inline StoreMeta compute_meta(const std::vector<AnalyzedTweet>& records, std::size_t rejected = 0) {
  StoreMeta meta;
  meta.tweet_count = records.size();
  meta.rejected_count = rejected;
  for (const auto& t : records) {
    if (!meta.date_min || t.created_at < *meta.date_min) meta.date_min = t.created_at;
    if (!meta.date_max || t.created_at > *meta.date_max) meta.date_max = t.created_at;
    meta.states_present.insert(t.state);
  }
  return meta;
}

inline Json store_meta_to_json(const StoreMeta& meta) {
  Json j;
  j["tweet_count"] = meta.tweet_count;
  j["rejected_count"] = meta.rejected_count;
  j["date_min"] = meta.date_min ? Json(format_iso8601(*meta.date_min)) : Json(nullptr);
  j["date_max"] = meta.date_max ? Json(format_iso8601(*meta.date_max)) : Json(nullptr);
  j["states_present"] = Json::array();
  for (const auto& s : meta.states_present) j["states_present"].push_back(s);
  return j;
}

inline StoreMeta store_meta_from_json(const Json& j) {
  try {
    StoreMeta meta;
    meta.tweet_count = j.at("tweet_count").get<std::size_t>();
    meta.rejected_count = j.at("rejected_count").get<std::size_t>();
    if (!j.at("date_min").is_null()) meta.date_min = detail::parse_timestamp_field(j.at("date_min").get<std::string>());
    if (!j.at("date_max").is_null()) meta.date_max = detail::parse_timestamp_field(j.at("date_max").get<std::string>());
    for (const auto& s : j.at("states_present")) meta.states_present.insert(s.get<std::string>());
    return meta;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, std::string("bad store meta: ") + e.what());
  }
}

namespace detail {

inline void write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write failed on " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot rename " + tmp + ": " + ec.message());
}

}  // namespace detail

/// Writes one record per line plus the `<path>.meta.json` sidecar. Record
/// order is preserved, so identical input yields identical bytes.
inline StoreMeta write_store(const std::vector<AnalyzedTweet>& records, const std::string& path,
                             std::size_t rejected_count = 0) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(records.size());
  for (const auto& t : records) {
    if (!seen.insert(t.id).second) throw Error(ErrorCode::DuplicateId, "duplicate id '" + t.id + "'");
  }
  std::string body;
  body.reserve(records.size() * 320);
  for (const auto& t : records) {
    body += serialize_analyzed_tweet(t);
    body += '\n';
  }
  StoreMeta meta = compute_meta(records, rejected_count);
  detail::write_file(path, body);
  detail::write_file(meta_path_for(path), store_meta_to_json(meta).dump(2) + "\n");
  return meta;
}

/// An immutable, fully loaded store.
struct Snapshot {
  std::vector<AnalyzedTweet> tweets;
  StoreMeta meta;
};

inline Snapshot read_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open store " + path);
  Snapshot snap;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      snap.tweets.push_back(parse_analyzed_tweet(line));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!seen.insert(snap.tweets.back().id).second) {
      throw Error(ErrorCode::DuplicateId, path + ":" + std::to_string(lineno) + ": duplicate id");
    }
  }
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read error on " + path);

  std::size_t rejected = 0;
  std::ifstream meta_in(meta_path_for(path));
  if (meta_in) {
    Json j = Json::parse(meta_in, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::MalformedRecord, "bad store meta JSON");
    rejected = store_meta_from_json(j).rejected_count;
  }
  // Counts are always recomputed from the records themselves.
  snap.meta = compute_meta(snap.tweets, rejected);
  return snap;
}

}  // namespace tecvis
