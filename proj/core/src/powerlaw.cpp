#include "zipfkit/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zipfkit/error.hpp"

namespace zipfkit::fit {
namespace {

constexpr int kGridPerSign = 64;
constexpr double kMinMagnitude = 1e-3;
constexpr double kDefaultUpperOffset = 1e6;

void check_points(std::span<const Point> points, std::size_t min_points) {
  if (points.size() < min_points)
    throw DataError("power-law fit needs at least " + std::to_string(min_points) + " points, got " +
                    std::to_string(points.size()));
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
      throw DataError("power-law fit needs positive, finite coordinates");
  }
}

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double sse = 0.0;
  double sst = 0.0;
};

std::vector<double> log_y(std::span<const Point> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = std::log(points[i].y);
  return out;
}

// Two-pass least squares of log y on log(x + c), accumulated in long double.
LineFit log_line(std::span<const Point> points, std::span<const double> ly, double c) {
  using ld = long double;
  const std::size_t n = points.size();
  std::vector<double> lx(n);
  ld mx = 0.0L;
  ld my = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(points[i].x + c);
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<ld>(n);
  my /= static_cast<ld>(n);
  ld sxx = 0.0L;
  ld sxy = 0.0L;
  ld syy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const ld dx = lx[i] - mx;
    const ld dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0L)) throw DataError("power-law fit needs at least two distinct x values");
  const ld slope = sxy / sxx;
  const ld intercept = my - slope * mx;
  ld sse = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const ld r = ly[i] - (intercept + slope * lx[i]);
    sse += r * r;
  }
  LineFit f;
  f.slope = static_cast<double>(slope);
  f.intercept = static_cast<double>(intercept);
  f.sse = static_cast<double>(sse);
  f.sst = static_cast<double>(syy);
  return f;
}

std::vector<double> offset_grid(const Interval& iv) {
  std::vector<double> grid;
  auto add_side = [&](double from, double to, double sign) {
    // log-spaced magnitudes in [from, to], from > 0
    if (!(to > 0.0)) return;
    from = std::min(from, to);
    const double lf = std::log(from);
    const double lt = std::log(to);
    for (int i = 0; i < kGridPerSign; ++i) {
      const double t = kGridPerSign == 1 ? 1.0 : static_cast<double>(i) / (kGridPerSign - 1);
      grid.push_back(sign * std::exp(lf + t * (lt - lf)));
    }
  };
  if (iv.lo <= 0.0 && iv.hi >= 0.0) {
    grid.push_back(0.0);
    add_side(kMinMagnitude, iv.hi, 1.0);
    add_side(kMinMagnitude, -iv.lo, -1.0);
  } else if (iv.lo > 0.0) {
    add_side(iv.lo, iv.hi, 1.0);
  } else {
    add_side(-iv.hi, -iv.lo, -1.0);
  }
  grid.push_back(iv.lo);
  grid.push_back(iv.hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double c) { return !iv.contains(c); }),
             grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PowerLawFit make_fit(std::span<const Point> points, const LineFit& line, double c,
                     int predictors) {
  PowerLawFit f;
  f.a = std::exp(line.intercept);
  f.b = line.slope;
  f.c = c;
  f.sse = line.sse;
  f.n_points = points.size();
  f.r2 = line.sst > 0.0 ? 1.0 - line.sse / line.sst : 1.0;
  const double n = static_cast<double>(points.size());
  f.adj_r2 = 1.0 - (1.0 - f.r2) * (n - 1.0) / (n - predictors - 1.0);
  auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                      [](const Point& p, const Point& q) { return p.x < q.x; });
  f.domain = {lo->x, hi->x};
  if (!std::isfinite(f.a)) f.warnings.push_back("prefactor overflows double precision");
  return f;
}

}  // namespace

double PowerLawFit::operator()(double x) const { return a * std::pow(x + c, b); }

PowerLawFit fit_powerlaw_at_offset(std::span<const Point> points, double c, int predictors) {
  check_points(points, static_cast<std::size_t>(predictors) + 2);
  for (const auto& p : points) {
    if (!(p.x + c > 0.0)) throw DataError("offset makes x + c non-positive");
  }
  return make_fit(points, log_line(points, log_y(points), c), c, predictors);
}

PowerLawFit fit_powerlaw_loglog(std::span<const Point> points) {
  return fit_powerlaw_at_offset(points, 0.0, 1);
}

Interval default_offset_interval(std::span<const Point> points) {
  if (points.empty()) throw DataError("no points");
  double min_x = points.front().x;
  for (const auto& p : points) min_x = std::min(min_x, p.x);
  return {-0.9 * min_x, kDefaultUpperOffset};
}

PowerLawFit fit_shifted_powerlaw(std::span<const Point> points, std::optional<Interval> c_search) {
  check_points(points, 4);
  const Interval iv = c_search ? *c_search : default_offset_interval(points);
  double min_x = points.front().x;
  for (const auto& p : points) min_x = std::min(min_x, p.x);
  if (!(iv.lo < iv.hi) || !(iv.lo > -min_x) || !std::isfinite(iv.hi))
    throw DataError("offset search interval must satisfy -min(x) < lo < hi");

  const std::vector<double> ly = log_y(points);
  auto sse_at = [&](double c) { return log_line(points, ly, c).sse; };
  const std::vector<double> grid = offset_grid(iv);
  std::vector<double> objective(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) objective[i] = sse_at(grid[i]);
  const std::size_t best =
      static_cast<std::size_t>(std::min_element(objective.begin(), objective.end()) - objective.begin());

  // Golden-section between the neighbours of the best grid node.
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[best + 1 < grid.size() ? best + 1 : best];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = hi - inv_phi * (hi - lo);
  double c2 = lo + inv_phi * (hi - lo);
  double f1 = sse_at(c1);
  double f2 = sse_at(c2);
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    if (f1 < f2) {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - inv_phi * (hi - lo);
      f1 = sse_at(c1);
    } else {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + inv_phi * (hi - lo);
      f2 = sse_at(c2);
    }
  }
  double c = 0.5 * (lo + hi);
  if (!(sse_at(c) < objective[best])) c = grid[best];

  PowerLawFit fit = make_fit(points, log_line(points, ly, c), c, 2);

  std::size_t local_minima = 0;
  for (std::size_t i = 0; i < objective.size(); ++i) {
    const double tol = 1e-12 * (1.0 + objective[i]);
    const bool left = i == 0 || objective[i] < objective[i - 1] - tol;
    const bool right = i + 1 == objective.size() || objective[i] < objective[i + 1] - tol;
    if (left && right) ++local_minima;
  }
  if (local_minima > 1) fit.warnings.push_back("objective is not unimodal over the offset grid");
  if (best == 0 || best + 1 == grid.size())
    fit.warnings.push_back("offset at the edge of its search interval");
  return fit;
}

std::vector<Point> LogBinnedCurve::as_points() const {
  std::vector<Point> out;
  out.reserve(bins.size());
  for (const auto& b : bins) out.push_back({b.center, b.mean});
  return out;
}

std::size_t LogBinnedCurve::population() const {
  std::size_t n = 0;
  for (const auto& b : bins) n += b.population;
  return n;
}

LogBinnedCurve log_bin(std::span<const Point> points, int bins_per_decade) {
  if (bins_per_decade < 1) throw ConfigError("bins_per_decade must be >= 1");
  const double per = bins_per_decade;
  auto edge = [per](long k) { return std::pow(10.0, static_cast<double>(k) / per); };
  auto bin_of = [&](double x) {
    auto k = static_cast<long>(std::floor(std::log10(x) * per));
    while (edge(k + 1) <= x) ++k;
    while (edge(k) > x) --k;
    return k;
  };

  LogBinnedCurve out;
  if (points.empty()) return out;
  double max_x = points.front().x;
  for (const auto& p : points) {
    if (!(p.x > 0.0)) throw DataError("log binning needs positive x");
    max_x = std::max(max_x, p.x);
  }
  const long max_bin = bin_of(max_x);
  const bool max_on_edge = std::abs(std::log10(max_x) * per - static_cast<double>(max_bin)) < 1e-9;
  bool has_lower = false;
  for (const auto& p : points) has_lower = has_lower || bin_of(p.x) == max_bin - 1;
  const bool close_last = max_on_edge && has_lower;

  long current = std::numeric_limits<long>::min();
  double sum_log_x = 0.0;
  double sum_y = 0.0;
  std::size_t n = 0;
  auto flush = [&] {
    if (n == 0) return;
    out.bins.push_back({edge(current), edge(current + 1), std::exp(sum_log_x / static_cast<double>(n)),
                        sum_y / static_cast<double>(n), n});
  };
  for (const auto& p : points) {
    long k = bin_of(p.x);
    if (close_last && k == max_bin) k = current;
    if (k != current) {
      if (k < current) throw DataError("log binning needs points sorted by x");
      flush();
      current = k;
      sum_log_x = 0.0;
      sum_y = 0.0;
      n = 0;
    }
    sum_log_x += std::log(p.x);
    sum_y += p.y;
    ++n;
  }
  flush();
  return out;
}

}  // namespace zipfkit::fit
