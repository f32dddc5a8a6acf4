#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zipfkit::stats {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;  // two-sided
  std::string method;
  std::vector<std::size_t> n;   // sample sizes
  std::vector<double> df;       // degrees of freedom, when meaningful
};

enum class WilcoxonMode { exact, normal_approx, automatic };

/// Largest pooled size handled by the exact null distribution.
inline constexpr std::size_t kMaxExactSize = 60;
/// automatic picks the exact distribution up to this pooled size.
inline constexpr std::size_t kAutoExactSize = 20;

/// Midranks (1-based) of `values`, ties sharing the average rank.
std::vector<double> midranks(std::span<const double> values);

/// Rank-sum test; statistic is the sum of x's midranks in the pooled sample.
/// Exact mode counts rank-sum assignments over all C(n+m, n) subsets
/// (conditional on ties); the normal approximation uses tie-corrected
/// variance and a 0.5 continuity correction.
TestResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y,
                             WilcoxonMode mode = WilcoxonMode::automatic);

/// Paired signed-rank test on x[i] - y[i]; zero differences are dropped.
/// Statistic is W+, the sum of ranks of positive differences.
TestResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                WilcoxonMode mode = WilcoxonMode::automatic);

/// One-way ANOVA: F = MSB / MSW with df (k - 1, N - k).
TestResult one_way_f_test(std::span<const std::vector<double>> groups);

/// Sample Pearson correlation. Needs equal lengths >= 3, non-constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson r with the two-sided p-value of t = r sqrt((n-2) / (1-r^2)),
/// df n - 2.
TestResult pearson_test(std::span<const double> x, std::span<const double> y);

}  // namespace zipfkit::stats
