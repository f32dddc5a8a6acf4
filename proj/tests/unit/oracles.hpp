#pragma once

// Independent reference computations for the unit tests. Written without
// reusing library code paths: brute force, closed forms, long double.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "zipfkit/types.hpp"

namespace oracle {

// Midranks by direct counting: rank = #less + (#equal + 1) / 2.
inline std::vector<double> midranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double less = 0, equal = 0;
    for (double w : v) {
      if (w < v[i]) ++less;
      if (w == v[i]) ++equal;
    }
    r[i] = less + (equal + 1.0) / 2.0;
  }
  return r;
}

// Two-sided exact rank-sum p as (extreme assignments, all assignments), by
// enumerating every subset of size |x| of the pooled ranks.
inline std::pair<std::uint64_t, std::uint64_t> rank_sum_enumeration(const std::vector<double>& x,
                                                                    const std::vector<double>& y) {
  std::vector<double> pooled = x;
  pooled.insert(pooled.end(), y.begin(), y.end());
  const auto ranks = midranks(pooled);
  const std::size_t n = x.size();
  const std::size_t total = pooled.size();
  double observed = 0;
  for (std::size_t i = 0; i < n; ++i) observed += ranks[i];
  const double center = static_cast<double>(n) * (total + 1) / 2.0;
  const double dev = std::abs(observed - center);
  std::uint64_t extreme = 0, all = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
    double s = 0;
    for (std::size_t i = 0; i < total; ++i)
      if (mask >> i & 1) s += ranks[i];
    ++all;
    if (std::abs(s - center) >= dev - 1e-9) ++extreme;
  }
  return {extreme, all};
}

// Signed-rank enumeration over all 2^n sign patterns of nonzero differences.
inline std::pair<std::uint64_t, std::uint64_t> signed_rank_enumeration(const std::vector<double>& d) {
  std::vector<double> nz;
  for (double v : d)
    if (v != 0) nz.push_back(v);
  std::vector<double> a;
  for (double v : nz) a.push_back(std::abs(v));
  const auto ranks = midranks(a);
  double observed = 0, total_rank = 0;
  for (std::size_t i = 0; i < nz.size(); ++i) {
    total_rank += ranks[i];
    if (nz[i] > 0) observed += ranks[i];
  }
  const double center = total_rank / 2.0;
  const double dev = std::abs(observed - center);
  std::uint64_t extreme = 0, all = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nz.size()); ++mask) {
    double s = 0;
    for (std::size_t i = 0; i < nz.size(); ++i)
      if (mask >> i & 1) s += ranks[i];
    ++all;
    if (std::abs(s - center) >= dev - 1e-9) ++extreme;
  }
  return {extreme, all};
}

struct Line {
  long double intercept = 0;
  long double slope = 0;
  long double sse = 0;
};

// Solves the 2x2 normal equations [n Σx; Σx Σx²][α β]' = [Σy Σxy]' in long
// double by Cramer's rule.
inline Line normal_equations(const std::vector<zipfkit::Point>& pts, long double c = 0) {
  long double n = pts.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    const long double lx = std::log(static_cast<long double>(p.x) + c);
    const long double ly = std::log(static_cast<long double>(p.y));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const long double det = n * sxx - sx * sx;
  Line out;
  out.slope = (n * sxy - sx * sy) / det;
  out.intercept = (sy * sxx - sx * sxy) / det;
  for (const auto& p : pts) {
    const long double r = std::log(static_cast<long double>(p.y)) -
                          (out.intercept + out.slope * std::log(static_cast<long double>(p.x) + c));
    out.sse += r * r;
  }
  return out;
}

// Pooled two-sample t statistic.
inline double pooled_t(const std::vector<double>& x, const std::vector<double>& y) {
  auto mean = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); };
  const double mx = mean(x), my = mean(y);
  double ss = 0;
  for (double v : x) ss += (v - mx) * (v - mx);
  for (double v : y) ss += (v - my) * (v - my);
  const double df = x.size() + y.size() - 2.0;
  const double sp2 = ss / df;
  return (mx - my) / std::sqrt(sp2 * (1.0 / x.size() + 1.0 / y.size()));
}

// Random typing: probability of one particular word of length L >= 1 among
// nonempty words, with m letters and space probability p. A word is a run
// of L letters ended by a space: q^L p with q = 1 - p, times (1/m)^L for
// the particular letters; conditioning on L >= 1 divides by q.
inline double typing_word_probability(int m, double p, int length) {
  const double q = 1.0 - p;
  return std::pow(q / m, length) * p / q;
}

}  // namespace oracle
