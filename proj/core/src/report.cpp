#include "zipfkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>
#include <ostream>

#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"

namespace zipfkit::report {

const char* tool_version() { return ZIPFKIT_VERSION; }

GrowthSummary summarize(const growth::GrowthReport& report) {
  return {report.level_sizes, report.bounds, report.segments};
}

std::pair<SegmentBounds, std::string> resolve_bounds(const freq::RankFrequencyCurve& curve,
                                                     const AnalysisOptions& options,
                                                     std::optional<double>* residual) {
  if (options.bounds) {
    validate_bounds(*options.bounds, curve.vocabulary());
    return {*options.bounds, "explicit"};
  }
  if (options.search_bounds) {
    const auto pts = curve.as_points();
    const auto found = fit::search_bounds(pts, fit::make_bounds_grid());
    if (residual) *residual = found.residual;
    return {found.bounds, "search"};
  }
  return {fit::default_bounds(curve, options.middle_end), "default"};
}

Analysis analyze_stream(const ingest::TokenStream& stream, std::string path,
                        const AnalysisOptions& options) {
  if (stream.empty()) throw DataError("corpus '" + path + "' contains no tokens");
  Analysis out;
  auto& r = out.report;
  r.tool_version = tool_version();
  r.corpus.path = std::move(path);
  r.shuffled = options.load.shuffle;
  if (options.load.shuffle) r.seed = options.load.seed;
  r.bins_per_decade = options.bins_per_decade;

  const auto table = freq::count(stream);
  out.curve = freq::rank(table);
  out.spectrum = freq::spectrum(table);
  r.corpus.tokens = table.total_tokens();
  r.corpus.types = table.vocabulary();

  std::tie(r.bounds, r.bounds_method) = resolve_bounds(out.curve, options, &r.search_residual);
  out.fits = fit::fit_three_segments(out.curve, r.bounds, options.bins_per_decade);
  r.upper = out.fits.upper;
  r.middle = out.fits.middle;
  r.lower = out.fits.lower;
  r.bend = out.fits.bend();

  const auto checkpoints = freq::log_checkpoints(stream.token_count());
  out.heaps_curve = freq::heaps_curve(stream.tokens(), checkpoints);
  r.heaps = growth::heaps_fit(out.heaps_curve);

  if (options.growth_levels > 0) {
    const auto chain = ingest::build_doubling_chain(stream, options.growth_levels);
    const auto largest = freq::rank(freq::count(chain.level(chain.levels() - 1)));
    const auto [gb, method] = resolve_bounds(largest, options);
    out.growth = growth::growth_rates(chain, gb);
    r.growth = summarize(*out.growth);
  }
  if (options.trend_levels > 0) r.trend = trend_from_prefixes(stream, options.trend_levels, options);
  return out;
}

Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& options) {
  return analyze_stream(ingest::load_corpus(path, options.load), path.string(), options);
}

namespace {

TrendReport fit_trends(const std::vector<std::array<double, 3>>& exponents,
                       const std::vector<double>& sizes) {
  TrendReport out;
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<fit::TrendSample> samples;
    for (std::size_t i = 0; i < sizes.size(); ++i) samples.push_back({sizes[i], exponents[i][s]});
    out.exponents[s] = fit::fit_exponent_trend(
        samples, s == 2 ? fit::TrendMode::limit : fit::TrendMode::difference_decay);
  }
  return out;
}

}  // namespace

TrendReport trend_from_reports(std::span<const AnalysisReport> reports) {
  if (reports.size() < 4) throw DataError("a trend needs at least 4 reports");
  std::vector<double> sizes;
  std::vector<std::array<double, 3>> exponents;
  for (const auto& r : reports) {
    const double n = static_cast<double>(r.corpus.tokens);
    if (!sizes.empty() && !(n > sizes.back()))
      throw DataError("trend reports must have strictly increasing token counts");
    sizes.push_back(n);
    exponents.push_back({r.upper.b, r.middle.b, r.lower.b});
  }
  return fit_trends(exponents, sizes);
}

TrendReport trend_from_prefixes(const ingest::TokenStream& stream, int levels,
                                const AnalysisOptions& options) {
  if (levels < 4) throw DataError("a prefix trend needs at least 4 levels");
  const auto chain = ingest::build_doubling_chain(stream, levels);
  std::vector<double> sizes;
  std::vector<std::array<double, 3>> exponents;
  for (std::size_t k = 0; k < chain.levels(); ++k) {
    const auto curve = freq::rank(freq::count(chain.level(k)));
    fit::SegmentFits fits;
    try {
      fits = fit::fit_three_segments(curve, resolve_bounds(curve, options).first, options.bins_per_decade);
    } catch (const DataError& e) {
      throw DataError("prefix of " + std::to_string(chain.sizes()[k]) + " tokens (" +
                      std::to_string(curve.vocabulary()) + " types): " + e.what());
    }
    sizes.push_back(static_cast<double>(chain.sizes()[k]));
    exponents.push_back({fits.upper.b, fits.middle.b, fits.lower.b});
  }
  return fit_trends(exponents, sizes);
}

void write_fitted_csv(std::ostream& out, const fit::SegmentFits& fits, int per_decade) {
  out << "segment,rank,fitted_frequency\n";
  for (Segment s : {Segment::upper, Segment::middle, Segment::lower}) {
    const auto& f = fits[s];
    const double lo = std::log10(f.domain.lo);
    const double hi = std::log10(f.domain.hi);
    const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) * per_decade)));
    for (int i = 0; i <= steps; ++i) {
      const double x = i == steps ? f.domain.hi : std::pow(10.0, lo + (hi - lo) * i / steps);
      out << to_string(s) << ',' << io::format_double(x) << ',' << io::format_double(f(x)) << '\n';
    }
  }
}

void write_binned_csv(std::ostream& out, const fit::LogBinnedCurve& binned) {
  out << "bin_lo,bin_hi,center,mean_frequency,population\n";
  for (const auto& b : binned.bins)
    out << io::format_double(b.lo_edge) << ',' << io::format_double(b.hi_edge) << ','
        << io::format_double(b.center) << ',' << io::format_double(b.mean) << ',' << b.population
        << '\n';
}

std::vector<std::filesystem::path> write_artifacts(const std::filesystem::path& dir,
                                                   const std::string& stem, const Analysis& analysis) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& suffix, const std::function<void(std::ostream&)>& writer) {
    const auto path = dir / (stem + suffix);
    io::write_atomic(path, writer);
    written.push_back(path);
  };
  emit(".rank_frequency.csv", [&](std::ostream& o) { freq::write_curve_csv(o, analysis.curve); });
  emit(".lower_binned.csv", [&](std::ostream& o) { write_binned_csv(o, analysis.fits.lower_binned); });
  emit(".heaps.csv", [&](std::ostream& o) { freq::write_heaps_csv(o, analysis.heaps_curve); });
  emit(".fitted.csv", [&](std::ostream& o) { write_fitted_csv(o, analysis.fits); });
  emit(".table.csv", [&](std::ostream& o) {
    o << "word,count\n";
    for (const auto& p : analysis.curve.points) o << p.word << ',' << p.frequency << '\n';
  });
  emit(".spectrum.csv", [&](std::ostream& o) { freq::write_spectrum_csv(o, analysis.spectrum); });
  if (analysis.growth)
    emit(".growth_histogram.csv",
         [&](std::ostream& o) { growth::write_histogram_csv(o, *analysis.growth); });
  return written;
}

CorpusComparison compare_analyses(const Analysis& a, const Analysis& b, const CompareOptions& options) {
  CorpusComparison out;
  out.a = a.report.corpus;
  out.b = b.report.corpus;
  out.bounds_a = a.report.bounds;
  out.bounds_b = b.report.bounds;
  const auto words_a = freq::segment_words(a.curve, out.bounds_a);
  const auto words_b = freq::segment_words(b.curve, out.bounds_b);
  for (Segment s : {Segment::upper, Segment::middle, Segment::lower}) {
    const auto i = static_cast<std::size_t>(s);
    out.ochiai[i] = freq::ochiai(words_a[s], words_b[s]);
    out.fits_a[i] = a.fits[s];
    out.fits_b[i] = b.fits[s];
    out.exponent_delta[i] = out.fits_b[i].b - out.fits_a[i].b;
  }
  if (options.exponent_lists) {
    const auto& [x, y] = *options.exponent_lists;
    out.exponent_test = options.paired ? stats::wilcoxon_signed_rank(x, y, options.mode)
                                       : stats::wilcoxon_rank_sum(x, y, options.mode);
  }
  return out;
}

CorpusComparison compare_corpora(const std::filesystem::path& a, const std::filesystem::path& b,
                                 const CompareOptions& options) {
  AnalysisOptions o = options.analysis;
  o.growth_levels = 0;
  o.trend_levels = 0;
  return compare_analyses(analyze_file(a, o), analyze_file(b, o), options);
}

}  // namespace zipfkit::report
