#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/frequency.hpp"
#include "zipfkit/growth.hpp"
#include "zipfkit/segments.hpp"
#include "zipfkit/stats.hpp"
#include "zipfkit/trend.hpp"

namespace zipfkit::report {

const char* tool_version();

struct CorpusInfo {
  std::string path;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;
};

struct AnalysisOptions {
  ingest::LoadOptions load;
  std::optional<SegmentBounds> bounds;  // explicit bounds win over the rest
  std::uint64_t middle_end = fit::kDefaultMiddleEnd;
  bool search_bounds = false;
  int bins_per_decade = fit::kDefaultBinsPerDecade;
  int growth_levels = 0;  // 0 skips the growth summary
  int trend_levels = 0;   // 0 skips the prefix trend
};

/// GrowthReport without the per-word table.
struct GrowthSummary {
  std::vector<std::size_t> level_sizes;
  SegmentBounds bounds;
  std::array<growth::SegmentSummary, 3> segments;
};

GrowthSummary summarize(const growth::GrowthReport& report);

/// Trends of e1, e2 and e3 over increasing sample sizes: difference-decay
/// for e1 and e2, limit mode for e3.
struct TrendReport {
  std::array<fit::ExponentTrend, 3> exponents;
};

struct AnalysisReport {
  std::string tool_version;
  CorpusInfo corpus;
  bool shuffled = false;
  std::optional<std::uint64_t> seed;
  SegmentBounds bounds;
  std::string bounds_method;  // default | explicit | search
  std::optional<double> search_residual;
  int bins_per_decade = fit::kDefaultBinsPerDecade;
  fit::PowerLawFit upper;
  fit::PowerLawFit middle;
  fit::PowerLawFit lower;
  double bend = 0.0;  // e2 - e3
  growth::HeapsFit heaps;
  std::optional<GrowthSummary> growth;
  std::optional<TrendReport> trend;
};

struct Analysis {
  AnalysisReport report;
  freq::RankFrequencyCurve curve;
  freq::FrequencySpectrum spectrum;
  freq::HeapsCurve heaps_curve;
  fit::SegmentFits fits;
  std::optional<growth::GrowthReport> growth;
};

/// count -> rank -> bounds -> three-segment fits -> Heaps fit, plus the
/// optional growth summary and prefix trend. `stream` is used as given;
/// shuffling happens at load time.
Analysis analyze_stream(const ingest::TokenStream& stream, std::string path,
                        const AnalysisOptions& options);

/// Loads (and optionally shuffles) the corpus, then analyze_stream.
Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& options);

/// Resolves the bounds the analysis would use for `curve`, and how.
std::pair<SegmentBounds, std::string> resolve_bounds(const freq::RankFrequencyCurve& curve,
                                                     const AnalysisOptions& options,
                                                     std::optional<double>* residual = nullptr);

/// Needs >= 4 reports with strictly increasing token counts.
TrendReport trend_from_reports(std::span<const AnalysisReport> reports);

/// Analyzes the nested prefixes N / 2^(levels-1) * {1, 2, ..., 2^(levels-1)}
/// of `stream` and fits their exponent trends.
TrendReport trend_from_prefixes(const ingest::TokenStream& stream, int levels,
                                const AnalysisOptions& options);

/// Writes <stem>.rank_frequency.csv, .lower_binned.csv, .heaps.csv,
/// .fitted.csv, .table.csv (word,count), .spectrum.csv and, when present, .growth_histogram.csv.
/// Returns the paths written.
std::vector<std::filesystem::path> write_artifacts(const std::filesystem::path& dir,
                                                   const std::string& stem, const Analysis& analysis);

/// Fitted curves for overlay plots: segment,rank,fitted_frequency sampled at
/// `per_decade` log-spaced ranks across each segment's domain.
void write_fitted_csv(std::ostream& out, const fit::SegmentFits& fits, int per_decade = 20);

/// bin_lo,bin_hi,center,mean_frequency,population
void write_binned_csv(std::ostream& out, const fit::LogBinnedCurve& binned);

struct CorpusComparison {
  CorpusInfo a;
  CorpusInfo b;
  SegmentBounds bounds_a;
  SegmentBounds bounds_b;
  std::array<double, 3> ochiai{};
  std::array<fit::PowerLawFit, 3> fits_a;
  std::array<fit::PowerLawFit, 3> fits_b;
  std::array<double, 3> exponent_delta{};  // b minus a
  std::optional<stats::TestResult> exponent_test;
};

struct CompareOptions {
  AnalysisOptions analysis;
  /// Exponent lists for the optional Wilcoxon test.
  std::optional<std::pair<std::vector<double>, std::vector<double>>> exponent_lists;
  bool paired = false;  // signed-rank instead of rank-sum
  stats::WilcoxonMode mode = stats::WilcoxonMode::automatic;
};

CorpusComparison compare_corpora(const std::filesystem::path& a, const std::filesystem::path& b,
                                 const CompareOptions& options);
CorpusComparison compare_analyses(const Analysis& a, const Analysis& b, const CompareOptions& options);

}  // namespace zipfkit::report
