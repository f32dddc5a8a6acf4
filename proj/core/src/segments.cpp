#include "zipfkit/segments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "zipfkit/error.hpp"

namespace zipfkit::fit {
namespace {

std::vector<std::uint64_t> log_candidates(Interval range, int per_decade,
                                          std::uint64_t anchor) {
  if (!(range.lo >= 1.0) || !(range.hi >= range.lo))
    throw ConfigError("candidate range must satisfy 1 <= lo <= hi");
  std::vector<std::uint64_t> out;
  const double l0 = std::log10(range.lo);
  const double l1 = std::log10(range.hi);
  const int steps = static_cast<int>(std::ceil((l1 - l0) * per_decade));
  for (int i = 0; i <= steps; ++i) {
    const double v = std::pow(10.0, l0 + (l1 - l0) * (steps == 0 ? 0.0 : static_cast<double>(i) / steps));
    out.push_back(static_cast<std::uint64_t>(std::llround(v)));
  }
  out.push_back(static_cast<std::uint64_t>(std::llround(range.lo)));
  out.push_back(static_cast<std::uint64_t>(std::llround(range.hi)));
  if (range.contains(static_cast<double>(anchor))) out.push_back(anchor);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::span<const Point> ranks(std::span<const Point> curve, std::uint64_t first, std::uint64_t last) {
  // curve[i] is rank i + 1
  return curve.subspan(first - 1, last - first + 1);
}

}  // namespace

SegmentBounds default_bounds(std::size_t vocabulary, std::uint64_t middle_end) {
  if (vocabulary < kMinDefaultVocabulary) {
    throw DataError("vocabulary of " + std::to_string(vocabulary) +
                    " types is below 3000; pass explicit segment bounds");
  }
  SegmentBounds b{kDefaultUpperEnd, middle_end};
  validate_bounds(b, vocabulary);
  return b;
}

BoundsGrid make_bounds_grid(Interval upper_range, Interval middle_range, int per_decade) {
  if (per_decade < 1) throw ConfigError("grid density must be >= 1 per decade");
  if (!(upper_range.hi < middle_range.lo))
    throw ConfigError("upper and middle candidate ranges must be disjoint and ordered");
  return {log_candidates(upper_range, per_decade, kDefaultUpperEnd),
          log_candidates(middle_range, per_decade, kDefaultMiddleEnd)};
}

double segmentation_residual(std::span<const Point> curve, const SegmentBounds& bounds) {
  validate_bounds(bounds, curve.size());
  const std::uint64_t v = curve.size();
  double total = fit_powerlaw_loglog(ranks(curve, 1, bounds.upper_end)).sse;
  total += fit_powerlaw_loglog(ranks(curve, bounds.upper_end + 1, bounds.middle_end)).sse;
  total += fit_shifted_powerlaw(ranks(curve, bounds.middle_end + 1, v)).sse;
  return total;
}

BoundsSearchResult search_bounds(std::span<const Point> curve, const BoundsGrid& grid) {
  if (grid.upper.empty() || grid.middle.empty()) throw ConfigError("empty bounds grid");
  const std::uint64_t v = curve.size();
  if (grid.middle.back() >= v) {
    throw DataError("curve has " + std::to_string(v) + " ranks; the bounds search needs more than " +
                    std::to_string(grid.middle.back()));
  }
  if (grid.upper.back() >= grid.middle.front())
    throw ConfigError("upper candidates must all lie below middle candidates");

  std::map<std::uint64_t, double> lower_sse;
  for (auto m : grid.middle) lower_sse[m] = fit_shifted_powerlaw(ranks(curve, m + 1, v)).sse;

  BoundsSearchResult best{{grid.upper.front(), grid.middle.front()},
                          std::numeric_limits<double>::infinity()};
  for (auto u : grid.upper) {
    const double upper = fit_powerlaw_loglog(ranks(curve, 1, u)).sse;
    for (auto m : grid.middle) {
      const double r = upper + fit_powerlaw_loglog(ranks(curve, u + 1, m)).sse + lower_sse[m];
      const double tol = 1e-9 * std::max(1.0, std::abs(best.residual));
      if (!std::isfinite(best.residual) || r < best.residual - tol) best = {{u, m}, r};
    }
  }
  return best;
}

const PowerLawFit& SegmentFits::operator[](Segment s) const {
  switch (s) {
    case Segment::upper:
      return upper;
    case Segment::middle:
      return middle;
    case Segment::lower:
      break;
  }
  return lower;
}

SegmentFits fit_three_segments(std::span<const Point> curve, const SegmentBounds& bounds,
                               int bins_per_decade) {
  validate_bounds(bounds, curve.size());
  const std::uint64_t v = curve.size();
  SegmentFits out;
  out.upper = fit_powerlaw_loglog(ranks(curve, 1, bounds.upper_end));
  out.upper.domain = {1.0, static_cast<double>(bounds.upper_end)};
  out.middle = fit_powerlaw_loglog(ranks(curve, bounds.upper_end + 1, bounds.middle_end));
  out.middle.domain = {static_cast<double>(bounds.upper_end + 1), static_cast<double>(bounds.middle_end)};
  const auto tail = ranks(curve, bounds.middle_end + 1, v);
  out.lower_binned = log_bin(tail, bins_per_decade);
  const auto binned = out.lower_binned.as_points();
  out.lower = fit_shifted_powerlaw(binned);
  out.lower.domain = {static_cast<double>(bounds.middle_end + 1), static_cast<double>(v)};
  return out;
}

}  // namespace zipfkit::fit
