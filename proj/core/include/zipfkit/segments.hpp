#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zipfkit/frequency.hpp"
#include "zipfkit/powerlaw.hpp"
#include "zipfkit/types.hpp"

namespace zipfkit::fit {

inline constexpr std::uint64_t kDefaultUpperEnd = 200;
inline constexpr std::uint64_t kDefaultMiddleEnd = 2000;
inline constexpr std::uint64_t kMinDefaultVocabulary = 3000;
inline constexpr int kDefaultBinsPerDecade = 10;

/// (200, middle_end). Requires a vocabulary of at least 3000 types and
/// middle_end below it.
SegmentBounds default_bounds(std::size_t vocabulary, std::uint64_t middle_end = kDefaultMiddleEnd);
inline SegmentBounds default_bounds(const freq::RankFrequencyCurve& curve,
                                    std::uint64_t middle_end = kDefaultMiddleEnd) {
  return default_bounds(curve.vocabulary(), middle_end);
}

struct BoundsGrid {
  std::vector<std::uint64_t> upper;   // ascending
  std::vector<std::uint64_t> middle;  // ascending
};

/// Integer candidates log-spaced at `per_decade` over each range, plus the
/// range endpoints and the default bounds when they fall inside.
BoundsGrid make_bounds_grid(Interval upper_range = {50, 500}, Interval middle_range = {1000, 5000},
                            int per_decade = 20);

/// Total squared log residual of the three per-segment fits on the raw
/// points: plain fits for upper and middle, shifted fit for lower.
double segmentation_residual(std::span<const Point> curve, const SegmentBounds& bounds);

struct BoundsSearchResult {
  SegmentBounds bounds;
  double residual = 0.0;
};

/// Exhaustive search over the grid for the pair minimizing
/// segmentation_residual. Ties (relative 1e-9) go to the smaller bounds.
BoundsSearchResult search_bounds(std::span<const Point> curve, const BoundsGrid& grid);

struct SegmentFits {
  PowerLawFit upper;
  PowerLawFit middle;
  PowerLawFit lower;
  LogBinnedCurve lower_binned;

  const PowerLawFit& operator[](Segment s) const;
  /// e2 - e3; positive when the lower segment bends downward.
  double bend() const { return middle.b - lower.b; }
};

/// Upper and middle: fit_powerlaw_loglog on the raw points. Lower:
/// fit_shifted_powerlaw on the log-binned points. Domains are the rank
/// ranges [1, u], [u + 1, m], [m + 1, V].
SegmentFits fit_three_segments(std::span<const Point> curve, const SegmentBounds& bounds,
                               int bins_per_decade = kDefaultBinsPerDecade);
inline SegmentFits fit_three_segments(const freq::RankFrequencyCurve& curve,
                                      const SegmentBounds& bounds,
                                      int bins_per_decade = kDefaultBinsPerDecade) {
  const auto pts = curve.as_points();
  return fit_three_segments(pts, bounds, bins_per_decade);
}

}  // namespace zipfkit::fit
