#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace zipfkit {

/// A sample on a log-log plot: rank (or token count) against frequency.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Closed interval on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Rank boundaries of the three curve segments: upper = [1, upper_end],
/// middle = [upper_end + 1, middle_end], lower = [middle_end + 1, V].
struct SegmentBounds {
  std::uint64_t upper_end = 200;
  std::uint64_t middle_end = 2000;

  friend bool operator==(const SegmentBounds&, const SegmentBounds&) = default;
};

/// Throws DataError unless 1 <= upper_end < middle_end < vocabulary.
void validate_bounds(const SegmentBounds& bounds, std::size_t vocabulary);

enum class Segment { upper = 0, middle = 1, lower = 2 };

const char* to_string(Segment s);

}  // namespace zipfkit
