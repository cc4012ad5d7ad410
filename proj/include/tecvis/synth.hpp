#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tecvis/corpus.hpp"
#include "tecvis/states.hpp"

namespace tecvis {

namespace detail {

// Rough 2020 census populations (100k), same order as kStateCodes.
inline constexpr std::array<int, 51> kStateWeights = {
    7,   50,  30,  72,  395, 58,  36,  7,   10,  216, 107, 14,  32,  18,  128, 68,  29,
    45,  46,  70,  62,  14,  100, 57,  62,  30,  11,  105, 8,   20,  14,  93,  21,  31,
    202, 118, 40,  42,  130, 11,  51,  9,   69,  291, 33,  86,  6,   77,  59,  18,  6,
};

// Each phrase leans toward one emotion or is neutral; several carry
// negators, boosters or emoticons so every valence rule gets exercised.
inline constexpr std::array<std::string_view, 70> kPhrasePool = {
    // joy
    "so happy to see my family again",
    "what a beautiful day, feeling blessed",
    "finally hugged my friend, pure joy",
    "grateful and thankful for the nurses",
    "celebrate the good news tonight",
    "we laugh and smile again :)",
    "great success for the whole team",
    "this reunion was wonderful <3",
    // anticipation
    "waiting for my vaccine appointment tomorrow",
    "eager and ready for the reopening",
    "hope the schedule opens soon",
    "countdown to vacation, so excited",
    "the future looks hopeful",
    "can't wait for the second shot",
    "expect progress by summer",
    "a real opportunity to plan ahead",
    // trust
    "trust the doctors and the science",
    "nurses are heroes, we are strong together",
    "the vaccine is safe and effective",
    "thank you for the support and care",
    "honest guidance from our scientist friends",
    "feeling confident and protected",
    "the community will help each other",
    "reliable and helpful staff at the clinic",
    // surprise
    "wow, did not expect that",
    "omg what a surprise",
    "sudden news, totally unexpected",
    "unbelievable, stunned right now",
    "whoa, astonishing numbers today",
    "shocked by the sudden lockdown",
    "surprised how fast the line moved",
    "suddenly everything changed",
    // fear
    "scared of the new variant spreading",
    "really worried about my parents",
    "the virus is dangerous, stay safe",
    "panic at the hospital again",
    "anxious about the outbreak",
    "terrified of getting sick",
    "the crisis is a real threat",
    "nervous and uncertain about symptoms",
    // sadness
    "so sad about the death toll",
    "lonely in quarantine, miss everyone",
    "grief and tears at the funeral",
    "lost my job, depressed and tired",
    "heartbroken, my uncle died",
    "the isolation is depressing :(",
    "exhausted and hopeless this week",
    "another cancelled trip, unhappy",
    // anger
    "angry at the selfish idiots",
    "furious about the unfair mandates",
    "stop the lies, this is ridiculous",
    "outraged by corrupt officials",
    "so frustrated with the mandate fight",
    "hate this, total rage",
    "annoyed by people yelling at staff",
    "blame the greedy liar",
    // disgust
    "disgusting maskless crowd at the store",
    "gross, people are so rude",
    "nasty and toxic behavior",
    "the crowded bar was filthy",
    "vile and shameful response",
    "pathetic, what a garbage plan",
    // neutral / mixed
    "got the shot at the pharmacy",
    "reading the latest numbers",
    "the clinic opens at nine",
    "new guidance about masks today",
    "not bad, not great",
    "no problems with the appointment",
    "not happy about the lockdown",
    "never felt so safe, thank you",
};

inline constexpr std::array<std::string_view, 8> kHashtags = {
    "#covid", "#COVID19", "#vaccine", "#lockdown", "#pandemic", "#StaySafe", "#WearAMask", "#Covid_19",
};

inline constexpr std::array<std::string_view, 6> kEmoticons = {":)", ":(", ":D", "<3", ":/", ";)"};

class SynthRng {
 public:
  explicit SynthRng(std::uint64_t seed) : engine_(seed) {}

  // Modulo mapping of the raw engine keeps output identical across standard
  // libraries, unlike std::uniform_int_distribution.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

inline std::string uppercase_one_word(std::string phrase, SynthRng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> words;
  std::size_t i = 0;
  while (i < phrase.size()) {
    while (i < phrase.size() && !std::isalpha(static_cast<unsigned char>(phrase[i]))) ++i;
    std::size_t b = i;
    while (i < phrase.size() && std::isalpha(static_cast<unsigned char>(phrase[i]))) ++i;
    if (i - b >= 3) words.emplace_back(b, i);
  }
  if (words.empty()) return phrase;
  auto [b, e] = words[rng.below(words.size())];
  for (std::size_t k = b; k < e; ++k) {
    phrase[k] = static_cast<char>(std::toupper(static_cast<unsigned char>(phrase[k])));
  }
  return phrase;
}

}  // namespace detail

inline constexpr std::int64_t kSynthWindowStart = 1609459200;  // 2021-01-01T00:00:00Z
inline constexpr std::int64_t kSynthWindowEnd = 1622505600;    // 2021-06-01T00:00:00Z

/// Deterministic synthetic corpus for a given (n, seed): English tweets with
/// valid state codes and timestamps spread over January through May 2021.
inline std::vector<RawTweet> synthesize_corpus(std::size_t n, std::uint64_t seed) {
  detail::SynthRng rng(seed);
  std::vector<int> cumulative;
  int total = 0;
  for (int w : detail::kStateWeights) cumulative.push_back(total += w);

  std::vector<RawTweet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RawTweet t;
    t.id = "syn-" + std::to_string(seed) + "-" + std::to_string(i);
    t.lang = "en";

    auto draw = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
    auto state_it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
    t.state = std::string(kStateCodes[static_cast<std::size_t>(state_it - cumulative.begin())]);

    auto span = static_cast<std::uint64_t>(kSynthWindowEnd - kSynthWindowStart);
    t.created_at = Timestamp{std::chrono::seconds{kSynthWindowStart + static_cast<std::int64_t>(rng.below(span))}};

    std::string text;
    if (rng.chance(0.2)) text += "@user" + std::to_string(rng.below(1000)) + " ";
    std::size_t phrases = 1 + rng.below(2);
    for (std::size_t p = 0; p < phrases; ++p) {
      std::string phrase(detail::kPhrasePool[rng.below(detail::kPhrasePool.size())]);
      if (rng.chance(0.08)) phrase = detail::uppercase_one_word(std::move(phrase), rng);
      if (p > 0) text += ' ';
      text += phrase;
    }
    std::uint64_t bangs = rng.chance(0.3) ? 1 + rng.below(5) : 0;
    text.append(bangs, '!');
    if (rng.chance(0.1)) text += std::string(" ") + std::string(detail::kEmoticons[rng.below(detail::kEmoticons.size())]);
    if (rng.chance(0.5)) text += std::string(" ") + std::string(detail::kHashtags[rng.below(detail::kHashtags.size())]);
    if (rng.chance(0.2)) text += " https://t.co/" + std::to_string(100000 + rng.below(900000));
    t.text = std::move(text);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace tecvis
