#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "httplib.h"
#include "tecvis/aggregate.hpp"
#include "tecvis/compare.hpp"
#include "tecvis/corpus.hpp"
#include "tecvis/query.hpp"
#include "tecvis/serialize.hpp"

namespace tecvis {

struct ApiResponse {
  int status = 200;
  std::string body;
};

constexpr int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadQuery:
    case ErrorCode::SameGroup:
    case ErrorCode::AxisMismatch: return 400;
    case ErrorCode::UnknownGroup: return 404;
    case ErrorCode::StoreNotLoaded: return 503;
    default: return 500;
  }
}

inline ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, canonical_dump(Json{{"status", status}, {"code", std::string(code)}, {"message", message}})};
}

/// Request handlers over one immutable snapshot. Every handler is a pure
/// function of (snapshot, query) and safe to call from many threads.
class Api {
 public:
  explicit Api(std::shared_ptr<const Snapshot> snapshot) : snapshot_(std::move(snapshot)) {
    if (!snapshot_) return;
    const auto& tweets = snapshot_->tweets;
    chronological_.resize(tweets.size());
    std::iota(chronological_.begin(), chronological_.end(), std::size_t{0});
    std::sort(chronological_.begin(), chronological_.end(), [&](std::size_t l, std::size_t r) {
      if (tweets[l].created_at != tweets[r].created_at) return tweets[l].created_at < tweets[r].created_at;
      return tweets[l].id < tweets[r].id;
    });
  }

  ApiResponse meta() const {
    return guarded([&] { return ApiResponse{200, canonical_dump(meta_payload(snapshot_->meta))}; });
  }

  ApiResponse aggregate(const QueryParams& params) const {
    return guarded([&] {
      AggregateQuery q = parse_aggregate_query(params);
      return ApiResponse{200, canonical_dump(aggregates_to_json(run(q)))};
    });
  }

  ApiResponse compare(const QueryParams& params) const {
    return guarded([&] {
      CompareQuery q = parse_compare_query(params);
      return ApiResponse{200, canonical_dump(comparison_to_json(run(q)))};
    });
  }

  ApiResponse tweets(const QueryParams& params) const {
    return guarded([&] {
      TweetsQuery q = parse_tweets_query(params);
      const auto& all = snapshot_->tweets;
      std::size_t total = 0;
      Json page = Json::array();
      for (std::size_t idx : chronological_) {
        if (group_key_for(all[idx], q.key.axis).value != q.key.value) continue;
        if (total >= q.offset && total - q.offset < q.limit) page.push_back(analyzed_tweet_to_json(all[idx]));
        ++total;
      }
      if (total == 0) throw Error(ErrorCode::UnknownGroup, "no tweets in group '" + q.key.value + "'");
      Json body{{"key", group_key_to_json(q.key)},
                {"limit", q.limit},
                {"offset", q.offset},
                {"total", total},
                {"tweets", std::move(page)}};
      return ApiResponse{200, canonical_dump(body)};
    });
  }

  std::vector<GroupAggregate> run(const AggregateQuery& q) const {
    return tecvis::aggregate(filtered(snapshot_->tweets, q.filter), q.axis, q.granularity);
  }

  ComparisonResult run(const CompareQuery& q) const {
    auto rows = run(q.base);
    auto find = [&](const GroupKey& key) -> const GroupAggregate& {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const GroupAggregate& g) { return g.key == key; });
      if (it == rows.end()) throw Error(ErrorCode::UnknownGroup, "no tweets in group '" + key.value + "'");
      return *it;
    };
    return compare_groups(find(q.a), find(q.b));
  }

 private:
  template <typename F>
  ApiResponse guarded(F&& handler) const {
    if (!snapshot_) return error_response(503, "StoreNotLoaded", "no store is loaded");
    try {
      return handler();
    } catch (const Error& e) {
      return error_response(http_status_for(e.code()), error_code_name(e.code()), e.what());
    } catch (const std::exception& e) {
      return error_response(500, "Internal", e.what());
    }
  }

  std::shared_ptr<const Snapshot> snapshot_;
  std::vector<std::size_t> chronological_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
};

/// Registers the four GET endpoints on `server`. `api` must outlive it.
inline void mount_routes(httplib::Server& server, const Api& api, const std::string& cors_origin) {
  auto params_of = [](const httplib::Request& req) {
    QueryParams p;
    for (const auto& [k, v] : req.params) p[k] = v;  // last value wins for repeats
    return p;
  };
  auto reply = [cors_origin](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    if (!cors_origin.empty()) res.set_header("Access-Control-Allow-Origin", cors_origin);
    res.set_content(r.body, "application/json");
  };
  server.Get("/api/meta", [&api, reply](const httplib::Request&, httplib::Response& res) { reply(res, api.meta()); });
  server.Get("/api/aggregate", [&api, reply, params_of](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.aggregate(params_of(req)));
  });
  server.Get("/api/compare", [&api, reply, params_of](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.compare(params_of(req)));
  });
  server.Get("/api/tweets", [&api, reply, params_of](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.tweets(params_of(req)));
  });
  server.Options(R"(/api/.*)", [cors_origin](const httplib::Request&, httplib::Response& res) {
    if (!cors_origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    }
    res.status = 204;
  });
}

}  // namespace tecvis
