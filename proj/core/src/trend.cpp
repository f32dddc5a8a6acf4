#include "zipfkit/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zipfkit/error.hpp"
#include "zipfkit/powerlaw.hpp"

namespace zipfkit::fit {
namespace {

struct DecayFit {
  double amplitude = 0.0;  // signed
  double rate = 0.0;
  double sse = std::numeric_limits<double>::infinity();
};

DecayFit fit_decay(std::span<const TrendSample> samples, double e_inf) {
  DecayFit out;
  const double sign = samples.front().exponent > e_inf ? 1.0 : -1.0;
  std::vector<Point> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) {
    const double d = sign * (s.exponent - e_inf);
    if (!(d > 0.0)) return out;
    pts.push_back({s.sample_size, d});
  }
  const PowerLawFit f = fit_powerlaw_loglog(pts);
  out.amplitude = sign * f.a;
  out.rate = -f.b;
  double sse = 0.0;
  for (const auto& s : samples) {
    const double r = s.exponent - (e_inf + out.amplitude * std::pow(s.sample_size, -out.rate));
    sse += r * r;
  }
  out.sse = sse;
  return out;
}

double r2_adjusted(std::span<const TrendSample> samples, double sse, int predictors) {
  double mean = 0.0;
  for (const auto& s : samples) mean += s.exponent;
  mean /= static_cast<double>(samples.size());
  double sst = 0.0;
  for (const auto& s : samples) sst += (s.exponent - mean) * (s.exponent - mean);
  const double r2 = sst > 0.0 ? 1.0 - sse / sst : 1.0;
  const auto n = static_cast<double>(samples.size());
  return 1.0 - (1.0 - r2) * (n - 1.0) / (n - predictors - 1.0);
}

}  // namespace

const char* to_string(TrendMode mode) {
  return mode == TrendMode::limit ? "limit" : "difference-decay";
}

double limit_objective(std::span<const TrendSample> samples, double e_inf) {
  return fit_decay(samples, e_inf).sse;
}

ExponentTrend fit_exponent_trend(std::span<const TrendSample> samples, TrendMode mode) {
  if (samples.size() < 4) throw DataError("exponent trend needs at least 4 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].sample_size > 0.0) || !std::isfinite(samples[i].exponent))
      throw DataError("trend samples need positive sizes and finite exponents");
    if (i > 0 && !(samples[i].sample_size > samples[i - 1].sample_size))
      throw DataError("trend sample sizes must be strictly increasing");
  }

  ExponentTrend out;
  out.samples.assign(samples.begin(), samples.end());
  out.mode = mode;
  const double last = samples.back().exponent;
  const auto [lo_it, hi_it] = std::minmax_element(
      samples.begin(), samples.end(),
      [](const TrendSample& a, const TrendSample& b) { return a.exponent < b.exponent; });
  const double span = hi_it->exponent - lo_it->exponent;
  if (span == 0.0) {
    out.limit = last;
    out.adj_r2 = 1.0;
    out.warnings.push_back("constant exponent series; rate set to 0");
    return out;
  }

  if (mode == TrendMode::difference_decay) {
    out.limit = last;
    std::vector<Point> pts;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const double d = std::abs(samples[i].exponent - last);
      if (d > 0.0) pts.push_back({samples[i].sample_size, d});
    }
    if (pts.size() < 3) {
      out.warnings.push_back("fewer than 3 non-zero differences; decay not fitted");
      return out;
    }
    const PowerLawFit f = fit_powerlaw_loglog(pts);
    out.amplitude = f.a;
    out.rate = -f.b;
    out.adj_r2 = f.adj_r2;
    if (out.rate < 0.0) out.warnings.push_back("differences grow with sample size");
    return out;
  }

  // Limit mode: e_inf lies beyond the extreme the series approaches.
  const bool decreasing = samples.front().exponent > last;
  const double edge = decreasing ? lo_it->exponent : hi_it->exponent;
  const double dir = decreasing ? -1.0 : 1.0;
  constexpr int kGrid = 64;
  const double g0 = std::log(1e-6 * span);
  const double g1 = std::log(1e3 * span);
  std::vector<double> gaps(kGrid);
  std::vector<double> obj(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    gaps[i] = g0 + (g1 - g0) * i / (kGrid - 1);
    obj[i] = limit_objective(samples, edge + dir * std::exp(gaps[i]));
  }
  const auto best = static_cast<std::size_t>(std::min_element(obj.begin(), obj.end()) - obj.begin());
  auto f = [&](double log_gap) { return limit_objective(samples, edge + dir * std::exp(log_gap)); };
  double lo = gaps[best == 0 ? 0 : best - 1];
  double hi = gaps[best + 1 < gaps.size() ? best + 1 : best];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double log_gap = 0.5 * (lo + hi);
  if (!(f(log_gap) < obj[best])) log_gap = gaps[best];
  out.limit = edge + dir * std::exp(log_gap);
  const DecayFit d = fit_decay(samples, out.limit);
  out.amplitude = d.amplitude;
  out.rate = d.rate;
  out.adj_r2 = r2_adjusted(samples, d.sse, 2);
  if (best == 0 || best + 1 == gaps.size())
    out.warnings.push_back("limit at the edge of its search range");
  return out;
}

}  // namespace zipfkit::fit
