#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tecvis/corpus.hpp"
#include "tecvis/pipeline.hpp"
#include "tecvis/query.hpp"
#include "tecvis/serialize.hpp"
#include "tecvis/server.hpp"
#include "tecvis/synth.hpp"

namespace tecvis::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

constexpr int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoFailure: return kIo;
    case ErrorCode::BadQuery:
    case ErrorCode::SameGroup:
    case ErrorCode::AxisMismatch: return kUsage;
    default: return kData;
  }
}

struct FilterFlags {
  std::string axis = "state";
  std::string granularity;
  std::string states;
  std::string from;
  std::string to;
  std::string emotion;
  std::optional<std::string> min;
  std::optional<std::string> max;
  std::string restrict_axis;
  std::string restrict_value;

  void attach(CLI::App* cmd) {
    cmd->add_option("--axis", axis, "state or time")->capture_default_str();
    cmd->add_option("--granularity", granularity, "day, week or month (time axis)");
    cmd->add_option("--states", states, "comma-separated state codes");
    cmd->add_option("--from", from, "inclusive lower time bound (ISO-8601)");
    cmd->add_option("--to", to, "exclusive upper time bound (ISO-8601)");
    cmd->add_option("--emotion", emotion, "emotion for the score range filter");
    cmd->add_option("--min", min, "score range lower bound, inclusive");
    cmd->add_option("--max", max, "score range upper bound, inclusive");
    cmd->add_option("--restrict-axis", restrict_axis, "drill-down context axis: state, day, week, month");
    cmd->add_option("--restrict-value", restrict_value, "drill-down context key");
  }

  /// Same parameter names the HTTP API takes.
  QueryParams params() const {
    QueryParams p{{"axis", axis}};
    auto put = [&p](const char* name, const std::string& v) {
      if (!v.empty()) p[name] = v;
    };
    put("granularity", granularity);
    put("states", states);
    put("from", from);
    put("to", to);
    put("emotion", emotion);
    if (min) p["min"] = *min;
    if (max) p["max"] = *max;
    put("restrict_axis", restrict_axis);
    put("restrict_value", restrict_value);
    return p;
  }
};

struct Options {
  // ingest
  std::string input, sentiment_lexicon, emotion_lexicon, output;
  SentimentConfig sentiment;
  // aggregate / compare / serve
  std::string store;
  std::string format = "csv";
  FilterFlags filters;
  std::string a, b;
  // synth
  std::size_t n = 0;
  std::uint64_t seed = 42;
  // serve
  ServeOptions serve;
};

namespace detail {

inline int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.input);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open input " + o.input);
  Analyzer analyzer(load_sentiment_lexicon(o.sentiment_lexicon, o.sentiment), load_emotion_lexicon(o.emotion_lexicon),
                    o.sentiment);
  for (const auto& w : analyzer.sentiment_lexicon().warnings) err << "warning: sentiment lexicon " << w << "\n";
  IngestResult result = ingest(in, analyzer);
  StoreMeta meta = write_store(result.records, o.output, result.rejected);
  err << "kept " << meta.tweet_count << ", rejected " << meta.rejected_count;
  for (const auto& [reason, count] : result.reject_reasons) err << " [" << reason << ": " << count << "]";
  err << "\n";
  out << store_meta_to_json(meta).dump(2) << "\n";
  return kOk;
}

inline int cmd_aggregate(const Options& o, std::ostream& out) {
  AggregateQuery q = parse_aggregate_query(o.filters.params());
  auto snapshot = std::make_shared<const Snapshot>(read_store(o.store));
  auto rows = Api(snapshot).run(q);
  if (o.format == "json") out << canonical_dump(aggregates_to_json(rows));
  else out << aggregates_to_csv(rows);
  return kOk;
}

inline int cmd_compare(const Options& o, std::ostream& out) {
  QueryParams p = o.filters.params();
  p["a"] = o.a;
  p["b"] = o.b;
  CompareQuery q = parse_compare_query(p);
  auto snapshot = std::make_shared<const Snapshot>(read_store(o.store));
  ComparisonResult result = Api(snapshot).run(q);
  if (o.format == "json") out << canonical_dump(comparison_to_json(result));
  else out << comparison_to_csv(result);
  return kOk;
}

inline int cmd_synth(const Options& o, std::ostream& out) {
  std::string body;
  for (const auto& t : synthesize_corpus(o.n, o.seed)) body += raw_tweet_to_json(t).dump() + "\n";
  tecvis::detail::write_file(o.output, body);
  out << o.n << "\n";
  return kOk;
}

inline int cmd_serve(const Options& o, std::ostream& err) {
  auto snapshot = std::make_shared<const Snapshot>(read_store(o.store));
  Api api(snapshot);
  httplib::Server server;
  mount_routes(server, api, o.serve.cors_origin);
  err << "serving " << snapshot->meta.tweet_count << " tweets on http://" << o.serve.host << ":" << o.serve.port
      << "\n";
  if (!server.listen(o.serve.host, o.serve.port)) {
    throw Error(ErrorCode::IoFailure, "cannot listen on " + o.serve.host + ":" + std::to_string(o.serve.port));
  }
  return kOk;
}

}  // namespace detail

/// Runs `tecvis <verb> ...`; `args` excludes the program name. Data goes to
/// `out`, logs and errors to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tweet emotion comparison engine", "tecvis"};
  app.set_config("--config", "", "TOML file with default flag values; flags on the command line win");
  app.require_subcommand(1);
  Options o;

  auto* ingest_cmd = app.add_subcommand("ingest", "validate, tokenize and score raw tweets into a store");
  ingest_cmd->add_option("--input", o.input, "raw tweets, JSONL")->required();
  ingest_cmd->add_option("--sentiment-lexicon", o.sentiment_lexicon, "valence TSV")->required();
  ingest_cmd->add_option("--emotion-lexicon", o.emotion_lexicon, "word-emotion TSV")->required();
  ingest_cmd->add_option("--output", o.output, "store path (JSONL)")->required();
  ingest_cmd->add_option("--caps-increment", o.sentiment.caps_increment)->capture_default_str();
  ingest_cmd->add_option("--negation-scalar", o.sentiment.negation_scalar)->capture_default_str();
  ingest_cmd->add_option("--exclamation-increment", o.sentiment.exclamation_increment)->capture_default_str();
  ingest_cmd->add_option("--normalization-alpha", o.sentiment.normalization_alpha)->capture_default_str();
  ingest_cmd->add_option("--polarity-threshold", o.sentiment.polarity_threshold)->capture_default_str();

  auto* aggregate_cmd = app.add_subcommand("aggregate", "print per-group rows (dot plot and polarity bars)");
  aggregate_cmd->add_option("--store", o.store)->required();
  aggregate_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  o.filters.attach(aggregate_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "print the tornado table for two groups");
  compare_cmd->add_option("--store", o.store)->required();
  compare_cmd->add_option("--a", o.a, "first group key")->required();
  compare_cmd->add_option("--b", o.b, "second group key")->required();
  compare_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  o.filters.attach(compare_cmd);

  auto* synth_cmd = app.add_subcommand("synth", "write a deterministic synthetic raw corpus");
  synth_cmd->add_option("--n", o.n, "number of tweets")->required();
  synth_cmd->add_option("--seed", o.seed)->capture_default_str();
  synth_cmd->add_option("--output", o.output)->required();

  auto* serve_cmd = app.add_subcommand("serve", "serve a store over HTTP");
  serve_cmd->add_option("--store", o.store)->required();
  serve_cmd->add_option("--port", o.serve.port)->capture_default_str();
  serve_cmd->add_option("--host", o.serve.host)->capture_default_str();
  serve_cmd->add_option("--cors-origin", o.serve.cors_origin)->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (ingest_cmd->parsed()) return detail::cmd_ingest(o, out, err);
    if (aggregate_cmd->parsed()) return detail::cmd_aggregate(o, out);
    if (compare_cmd->parsed()) return detail::cmd_compare(o, out);
    if (synth_cmd->parsed()) return detail::cmd_synth(o, out);
    if (serve_cmd->parsed()) return detail::cmd_serve(o, err);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace tecvis::cli
