#include "zipfkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "zipfkit/error.hpp"
#include "zipfkit/special.hpp"

namespace zipfkit::stats {
namespace {

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw DataError(std::string(what) + " contains a non-finite value");
}

// Sum over tie groups of t^3 - t.
double tie_term(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    term += t * t * t - t;
    i = j;
  }
  return term;
}

// Doubled midranks are integers, so the null distribution can be tabulated
// over integer sums.
std::vector<std::int64_t> doubled(std::span<const double> ranks) {
  std::vector<std::int64_t> out;
  out.reserve(ranks.size());
  for (double r : ranks) out.push_back(std::llround(2.0 * r));
  return out;
}

// Two-sided p from a count table of doubled rank sums:
// P(|S - center| >= |observed - center|), with center given as 4x its value.
double two_sided_from_counts(const std::vector<std::uint64_t>& counts, std::int64_t observed,
                             std::int64_t center_x2, double total) {
  const std::int64_t dev = std::abs(2 * observed - center_x2);
  std::uint64_t extreme = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    if (std::abs(2 * static_cast<std::int64_t>(s) - center_x2) >= dev) extreme += counts[s];
  }
  return std::min(1.0, static_cast<double>(extreme) / total);
}

bool use_exact(WilcoxonMode mode, std::size_t size) {
  switch (mode) {
    case WilcoxonMode::exact:
      if (size > kMaxExactSize)
        throw DataError("exact Wilcoxon supports at most " + std::to_string(kMaxExactSize) +
                        " observations, got " + std::to_string(size));
      return true;
    case WilcoxonMode::normal_approx:
      return false;
    case WilcoxonMode::automatic:
      return size <= kAutoExactSize;
  }
  return false;
}

double normal_two_sided(double deviation, double variance) {
  if (!(variance > 0.0)) return 1.0;
  const double z = std::max(0.0, std::abs(deviation) - 0.5) / std::sqrt(variance);
  return std::min(1.0, 2.0 * normal_sf(z));
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1 .. j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
    i = j;
  }
  return ranks;
}

TestResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y,
                             WilcoxonMode mode) {
  if (x.empty() || y.empty()) throw DataError("Wilcoxon rank-sum needs two non-empty samples");
  if (x.size() < 2 || y.size() < 2)
    throw DataError("Wilcoxon rank-sum needs at least 2 values per sample");
  require_finite(x, "x");
  require_finite(y, "y");

  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  const auto ranks = midranks(pooled);
  const std::size_t n = x.size();
  const std::size_t big_n = pooled.size();
  const double w = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n), 0.0);

  TestResult result;
  result.statistic = w;
  result.n = {x.size(), y.size()};

  if (use_exact(mode, big_n)) {
    const auto r2 = doubled(ranks);
    const std::int64_t max_sum = std::accumulate(r2.begin(), r2.end(), std::int64_t{0});
    // table[k][s]: subsets of size k with doubled rank sum s.
    std::vector<std::vector<std::uint64_t>> table(
        n + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_sum) + 1, 0));
    table[0][0] = 1;
    for (std::size_t item = 0; item < big_n; ++item) {
      const auto r = static_cast<std::size_t>(r2[item]);
      for (std::size_t k = std::min(item + 1, n); k >= 1; --k)
        for (std::size_t s = static_cast<std::size_t>(max_sum); s >= r; --s)
          table[k][s] += table[k - 1][s - r];
    }
    const std::int64_t observed = std::llround(2.0 * w);
    // Null center n (N + 1) / 2, in the doubled units doubled once more.
    const std::int64_t center_x2 = static_cast<std::int64_t>(2 * n * (big_n + 1));
    double total = 0.0;
    for (auto c : table[n]) total += static_cast<double>(c);
    result.p_value = two_sided_from_counts(table[n], observed, center_x2, total);
    result.method = "wilcoxon_rank_sum_exact";
  } else {
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(y.size());
    const double nn = static_cast<double>(big_n);
    const double mean = nd * (nn + 1.0) / 2.0;
    const double var = nd * md / 12.0 * ((nn + 1.0) - tie_term(pooled) / (nn * (nn - 1.0)));
    result.p_value = normal_two_sided(w - mean, var);
    result.method = "wilcoxon_rank_sum_normal";
  }
  return result;
}

TestResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                WilcoxonMode mode) {
  if (x.size() != y.size()) throw DataError("signed-rank test needs paired samples of equal length");
  if (x.empty()) throw DataError("signed-rank test needs non-empty samples");
  require_finite(x, "x");
  require_finite(y, "y");

  std::vector<double> abs_diff;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d == 0.0) continue;
    abs_diff.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }

  TestResult result;
  result.n = {x.size()};
  const std::size_t n = abs_diff.size();
  if (n == 0) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    result.method = "wilcoxon_signed_rank_exact";
    return result;
  }
  const auto ranks = midranks(abs_diff);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (positive[i]) w_plus += ranks[i];
  result.statistic = w_plus;

  if (use_exact(mode, n)) {
    const auto r2 = doubled(ranks);
    const std::int64_t max_sum = std::accumulate(r2.begin(), r2.end(), std::int64_t{0});
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_sum) + 1, 0);
    counts[0] = 1;
    for (auto r : r2)
      for (std::int64_t s = max_sum; s >= r; --s)
        counts[static_cast<std::size_t>(s)] += counts[static_cast<std::size_t>(s - r)];
    result.p_value = two_sided_from_counts(counts, std::llround(2.0 * w_plus), max_sum,
                                           std::ldexp(1.0, static_cast<int>(n)));
    result.method = "wilcoxon_signed_rank_exact";
  } else {
    const double nd = static_cast<double>(n);
    const double mean = nd * (nd + 1.0) / 4.0;
    const double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term(abs_diff) / 48.0;
    result.p_value = normal_two_sided(w_plus - mean, var);
    result.method = "wilcoxon_signed_rank_normal";
  }
  return result;
}

TestResult one_way_f_test(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw DataError("F-test needs at least 2 groups");
  double grand_sum = 0.0;
  std::size_t big_n = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw DataError("F-test needs at least 2 values per group");
    require_finite(g, "group");
    grand_sum += std::accumulate(g.begin(), g.end(), 0.0);
    big_n += g.size();
  }
  const double grand_mean = grand_sum / static_cast<double>(big_n);
  double ss_between = 0.0;
  double ss_within = 0.0;
  TestResult result;
  for (const auto& g : groups) {
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    ss_between += static_cast<double>(g.size()) * (mean - grand_mean) * (mean - grand_mean);
    for (double v : g) ss_within += (v - mean) * (v - mean);
    result.n.push_back(g.size());
  }
  const double k = static_cast<double>(groups.size());
  const double df1 = k - 1.0;
  const double df2 = static_cast<double>(big_n) - k;
  if (!(ss_within > 0.0)) throw DataError("F-test undefined: zero within-group variance");
  result.statistic = (ss_between / df1) / (ss_within / df2);
  result.p_value = f_distribution_sf(result.statistic, df1, df2);
  result.method = "one_way_anova";
  result.df = {df1, df2};
  return result;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DataError("Pearson correlation needs equal-length inputs");
  if (x.size() < 3) throw DataError("Pearson correlation needs at least 3 pairs");
  require_finite(x, "x");
  require_finite(y, "y");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DataError("Pearson correlation undefined for constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

TestResult pearson_test(std::span<const double> x, std::span<const double> y) {
  TestResult result;
  result.statistic = pearson(x, y);
  result.method = "pearson";
  result.n = {x.size()};
  const double df = static_cast<double>(x.size()) - 2.0;
  result.df = {df};
  const double one_minus = 1.0 - result.statistic * result.statistic;
  result.p_value = one_minus > 0.0 ? regularized_incomplete_beta(0.5 * df, 0.5, one_minus) : 0.0;
  return result;
}

}  // namespace zipfkit::stats
