#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "tecvis/corpus.hpp"
#include "tecvis/emotion.hpp"
#include "tecvis/sentiment.hpp"
#include "tecvis/textprep.hpp"

namespace tecvis {

/// Bundles both lexica and runs tokenize -> sentiment -> emotions ->
/// category for a single tweet.
class Analyzer {
 public:
  Analyzer(SentimentLexicon sentiment, EmotionLexicon emotion, SentimentConfig cfg = {})
      : sentiment_(std::move(sentiment)), emotion_(std::move(emotion)), cfg_(cfg) {}

  AnalyzedTweet analyze(const RawTweet& raw) const {
    AnalyzedTweet out;
    static_cast<RawTweet&>(out) = raw;
    TokenizedText tt = tokenize(raw.text);
    PolarityResult pr = score_sentiment(tt, sentiment_, cfg_);
    out.compound = pr.compound;
    out.polarity = pr.polarity;
    out.confidence = pr.confidence;
    out.emotions = score_emotions(tt, emotion_);
    out.category = assign_category(out.emotions, out.polarity);
    return out;
  }

  const SentimentLexicon& sentiment_lexicon() const { return sentiment_; }
  const EmotionLexicon& emotion_lexicon() const { return emotion_; }

 private:
  SentimentLexicon sentiment_;
  EmotionLexicon emotion_;
  SentimentConfig cfg_;
};

struct IngestResult {
  std::vector<AnalyzedTweet> records;
  std::size_t rejected = 0;
  std::map<std::string, std::size_t> reject_reasons;
};

/// Reads raw JSONL, keeping input order. Unparseable lines and records that
/// fail validation are counted as rejects. Duplicate ids are left in place
/// for write_store to refuse.
inline IngestResult ingest(std::istream& in, const Analyzer& analyzer) {
  IngestResult result;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    RawTweet raw;
    try {
      raw = parse_raw_tweet(line);
    } catch (const Error& e) {
      ++result.rejected;
      ++result.reject_reasons[std::string(error_code_name(e.code()))];
      continue;
    }
    if (auto reason = validate_tweet(raw)) {
      ++result.rejected;
      ++result.reject_reasons[std::string(reject_reason_name(*reason))];
      continue;
    }
    result.records.push_back(analyzer.analyze(raw));
  }
  return result;
}

}  // namespace tecvis
