#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zipfkit/types.hpp"

namespace zipfkit::fit {

/// y = a * (x + c)^b fitted by least squares in log space. Plain fits have
/// c = 0. adj_r2 is computed on log y with p = 1 (plain) or p = 2 (shifted)
/// predictors beyond the intercept.
struct PowerLawFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double r2 = 0.0;
  double adj_r2 = 0.0;
  double sse = 0.0;  // sum of squared log residuals
  std::size_t n_points = 0;
  Interval domain;
  std::vector<std::string> warnings;

  double operator()(double x) const;
};

/// OLS of log y on log x. Needs >= 3 points with positive coordinates and
/// at least two distinct x.
PowerLawFit fit_powerlaw_loglog(std::span<const Point> points);

/// OLS of log y on log(x + c) at a fixed offset; adj_r2 uses `predictors`.
PowerLawFit fit_powerlaw_at_offset(std::span<const Point> points, double c, int predictors = 1);

/// (-0.9 * min x, 1e6): the default search interval for the offset.
Interval default_offset_interval(std::span<const Point> points);

/// Minimizes the squared log residual over c: a coarse grid (c = 0 plus 64
/// log-spaced magnitudes per sign) followed by golden-section refinement
/// between the grid neighbours of the best node. Needs >= 4 points.
PowerLawFit fit_shifted_powerlaw(std::span<const Point> points,
                                 std::optional<Interval> c_search = std::nullopt);

struct LogBin {
  double lo_edge = 0.0;
  double hi_edge = 0.0;
  double center = 0.0;         // geometric mean of member x
  double mean = 0.0;           // arithmetic mean of member y
  std::size_t population = 0;
};

struct LogBinnedCurve {
  std::vector<LogBin> bins;
  std::vector<Point> as_points() const;
  std::size_t population() const;
};

/// Groups points (sorted by x) into bins with edges 10^(k / bins_per_decade).
/// Bins are half-open [lo, hi), except that a maximum x lying exactly on the
/// upper edge of the adjacent non-empty bin is folded into it (the last bin is
/// closed). Empty bins are dropped.
LogBinnedCurve log_bin(std::span<const Point> points, int bins_per_decade);

}  // namespace zipfkit::fit
