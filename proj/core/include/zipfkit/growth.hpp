#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/frequency.hpp"
#include "zipfkit/types.hpp"

namespace zipfkit::growth {

// Raw-ratio histogram: bins of width 0.1 starting at 1.0; the last bin
// collects everything >= 4.0.
inline constexpr double kHistogramStart = 1.0;
inline constexpr double kHistogramWidth = 0.1;
inline constexpr std::size_t kHistogramBins = 31;

double histogram_bin_start(std::size_t bin);

struct WordGrowth {
  std::string word;
  double raw_mean_ratio = 0.0;         // mean of f(n+1) / f(n)
  double normalized_mean_ratio = 0.0;  // mean of [f(n+1) / f(n)] / [c(n+1) / c(n)]
  int levels_present = 0;
  Segment segment = Segment::lower;    // from the largest level
};

struct SegmentSummary {
  Segment segment = Segment::upper;
  std::size_t words = 0;               // words with at least one ratio
  std::size_t single_level_words = 0;  // present only in the largest level
  double median_raw = 0.0;
  double mean_raw = 0.0;
  double median_normalized = 0.0;
  double mean_normalized = 0.0;
  std::array<std::uint64_t, kHistogramBins> histogram{};
};

struct GrowthReport {
  std::vector<std::size_t> level_sizes;
  SegmentBounds bounds;
  std::vector<WordGrowth> per_word;  // rank order of the largest level
  std::array<SegmentSummary, 3> segments;
};

/// Per-word frequency growth across the chain; summaries grouped by the
/// word's segment in the largest level. Words seen only in the largest level
/// have no ratio and are counted in single_level_words.
GrowthReport growth_rates(const ingest::SampleChain& chain, const SegmentBounds& bounds);

/// segment,ratio_bin,word_count
void write_histogram_csv(std::ostream& out, const GrowthReport& report);

struct HeapsFit {
  double k = 0.0;
  double beta = 0.0;
  double adj_r2 = 0.0;
  std::vector<std::string> warnings;
};

/// log V = log k + beta log n by least squares. Needs >= 3 points.
HeapsFit heaps_fit(const freq::HeapsCurve& curve);
/// Same, on (tokens, types) points that need not be integral.
HeapsFit heaps_fit(std::span<const Point> points);

/// k beta n^(beta - 1), clamped to [0, 1].
double new_word_rate(const HeapsFit& fit, double n);

}  // namespace zipfkit::growth
