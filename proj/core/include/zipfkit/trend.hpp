#pragma once

#include <span>
#include <string>
#include <vector>

namespace zipfkit::fit {

enum class TrendMode {
  difference_decay,  // |e(n) - e(N_max)| = k n^-gamma
  limit,             // e(n) = e_inf + k n^-gamma
};

const char* to_string(TrendMode mode);

struct TrendSample {
  double sample_size = 0.0;  // tokens
  double exponent = 0.0;
};

struct ExponentTrend {
  std::vector<TrendSample> samples;
  TrendMode mode = TrendMode::limit;
  double limit = 0.0;      // e(N_max) for difference_decay, e_inf for limit
  double rate = 0.0;       // gamma
  double amplitude = 0.0;  // k (signed in limit mode)
  double adj_r2 = 0.0;
  std::vector<std::string> warnings;
};

/// Needs >= 4 samples with strictly increasing sizes. A series whose
/// exponents are all identical returns that value with rate 0 and a warning.
ExponentTrend fit_exponent_trend(std::span<const TrendSample> samples, TrendMode mode);

/// Linear-space squared residual of e_inf + k n^-gamma when (k, gamma) come
/// from the log-log fit of |e(n) - e_inf| at the given e_inf. Infinite when
/// some e(n) - e_inf has the wrong sign or is zero.
double limit_objective(std::span<const TrendSample> samples, double e_inf);

}  // namespace zipfkit::fit
