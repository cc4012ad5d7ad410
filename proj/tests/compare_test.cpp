#include <gtest/gtest.h>

#include <random>

#include "tecvis/compare.hpp"

namespace tecvis {
namespace {

GroupAggregate group(std::string state, std::initializer_list<std::pair<Emotion, double>> means) {
  GroupAggregate g;
  g.key = {KeyAxis::State, std::move(state)};
  for (auto [e, m] : means) g.emotion_means[index_of(e)] = {m, 1};
  return g;
}

GroupAggregate random_group(std::mt19937_64& rng, std::string state) {
  std::uniform_real_distribution<double> d(0, 1);
  GroupAggregate g;
  g.key = {KeyAxis::State, std::move(state)};
  for (auto& m : g.emotion_means) {
    double r = d(rng);
    // a third of rows: no contributors; some exact ties at 0.5
    if (r < 0.33) m = {0.0, 0};
    else if (r < 0.45) m = {0.5, 3};
    else m = {0.1 + 0.9 * d(rng), 1 + rng() % 20};
  }
  return g;
}

TEST(CompareGroups, Rows) {
  auto r = compare_groups(group("CA", {{Emotion::Joy, .6}, {Emotion::Fear, .3}}),
                          group("NY", {{Emotion::Joy, .4}, {Emotion::Fear, .3}}));
  EXPECT_EQ(r.key_a.value, "CA");
  const auto& joy = r.rows[index_of(Emotion::Joy)];
  EXPECT_EQ(joy.emotion, Emotion::Joy);
  EXPECT_NEAR(joy.delta, 0.2, 1e-15);
  EXPECT_EQ(joy.higher_side, Side::A);
  const auto& fear = r.rows[index_of(Emotion::Fear)];
  EXPECT_EQ(fear.delta, 0.0);
  EXPECT_EQ(fear.higher_side, Side::None);
  for (std::size_t i = 0; i < kEmotionCount; ++i) EXPECT_EQ(r.rows[i].emotion, kAllEmotions[i]);
}

TEST(CompareGroups, Errors) {
  auto ca = group("CA", {});
  try {
    compare_groups(ca, ca);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameGroup);
  }
  GroupAggregate month;
  month.key = {KeyAxis::Month, "2021-01"};
  try {
    compare_groups(ca, month);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AxisMismatch);
  }
}

TEST(CompareGroups, AntisymmetryAndBounds) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto a = random_group(rng, "CA");
    auto b = random_group(rng, "NY");
    auto ab = compare_groups(a, b);
    auto ba = compare_groups(b, a);
    for (std::size_t k = 0; k < kEmotionCount; ++k) {
      EXPECT_EQ(ab.rows[k].delta, ba.rows[k].delta);
      EXPECT_EQ(ab.rows[k].higher_side, mirrored(ba.rows[k].higher_side));
      EXPECT_LE(ab.rows[k].delta, std::max(ab.rows[k].score_a, ab.rows[k].score_b));
      EXPECT_LE(std::max(ab.rows[k].score_a, ab.rows[k].score_b), 1.0);
    }
    auto copy = a;
    copy.key.value = "TX";
    for (const auto& row : compare_groups(a, copy).rows) {
      EXPECT_EQ(row.delta, 0.0);
      EXPECT_EQ(row.higher_side, Side::None);
    }
  }
}

}  // namespace
}  // namespace tecvis
