#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "tecvis/aggregate.hpp"
#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"

namespace tecvis {

enum class Side { A, B, None };

constexpr std::string_view side_name(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::B: return "B";
    case Side::None: return "none";
  }
  return "none";
}

constexpr Side mirrored(Side s) {
  return s == Side::A ? Side::B : (s == Side::B ? Side::A : Side::None);
}

struct TornadoRow {
  Emotion emotion = Emotion::Anger;
  double score_a = 0.0;
  double score_b = 0.0;
  double delta = 0.0;
  Side higher_side = Side::None;  // where the darker difference segment goes

  friend bool operator==(const TornadoRow&, const TornadoRow&) = default;
};

struct ComparisonResult {
  GroupKey key_a;
  GroupKey key_b;
  std::array<TornadoRow, kEmotionCount> rows{};
};

/// Side-by-side emotion means of two groups on the same axis.
inline ComparisonResult compare_groups(const GroupAggregate& a, const GroupAggregate& b) {
  if (a.key.axis != b.key.axis) throw Error(ErrorCode::AxisMismatch, "groups are on different axes");
  if (a.key == b.key) throw Error(ErrorCode::SameGroup, "cannot compare a group with itself");

  ComparisonResult out{a.key, b.key, {}};
  for (Emotion e : kAllEmotions) {
    TornadoRow& row = out.rows[index_of(e)];
    row.emotion = e;
    row.score_a = a[e].mean;
    row.score_b = b[e].mean;
    row.delta = std::abs(row.score_a - row.score_b);
    row.higher_side = row.score_a > row.score_b ? Side::A : (row.score_b > row.score_a ? Side::B : Side::None);
  }
  return out;
}

}  // namespace tecvis
