#include "zipfkit/growth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"
#include "zipfkit/powerlaw.hpp"

namespace zipfkit::growth {
namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::size_t histogram_bin(double ratio) {
  const double k = std::floor((ratio - kHistogramStart) / kHistogramWidth + 1e-9);
  if (k < 0.0) return 0;
  return std::min(static_cast<std::size_t>(k), kHistogramBins - 1);
}

}  // namespace

double histogram_bin_start(std::size_t bin) {
  return kHistogramStart + kHistogramWidth * static_cast<double>(bin);
}

GrowthReport growth_rates(const ingest::SampleChain& chain, const SegmentBounds& bounds) {
  const std::size_t levels = chain.levels();
  if (levels < 2) throw DataError("growth rates need a chain with at least 2 levels");
  const auto largest = chain.level(levels - 1);

  // counts[level][word id]
  std::unordered_map<std::string_view, std::size_t> ids;
  std::vector<std::string_view> words;
  std::vector<std::uint64_t> running;
  std::vector<std::vector<std::uint64_t>> counts;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t end = chain.sizes()[k];
    for (; pos < end; ++pos) {
      auto [it, inserted] = ids.try_emplace(largest[pos], words.size());
      if (inserted) {
        words.push_back(largest[pos]);
        running.push_back(0);
      }
      ++running[it->second];
    }
    counts.push_back(running);
  }

  freq::FrequencyTable::Map final_counts;
  for (std::size_t w = 0; w < words.size(); ++w) final_counts.emplace(words[w], running[w]);
  const auto curve = freq::rank(freq::FrequencyTable(std::move(final_counts)));
  validate_bounds(bounds, curve.vocabulary());

  GrowthReport report;
  report.level_sizes = chain.sizes();
  report.bounds = bounds;
  std::array<std::vector<double>, 3> raw_by_segment;
  std::array<std::vector<double>, 3> norm_by_segment;
  for (std::size_t s = 0; s < 3; ++s) report.segments[s].segment = static_cast<Segment>(s);

  for (const auto& point : curve.points) {
    const Segment seg = point.rank <= bounds.upper_end    ? Segment::upper
                        : point.rank <= bounds.middle_end ? Segment::middle
                                                          : Segment::lower;
    auto& summary = report.segments[static_cast<std::size_t>(seg)];
    const std::size_t id = ids.at(point.word);
    std::size_t first = 0;
    while (counts[first].size() <= id || counts[first][id] == 0) ++first;
    const int present = static_cast<int>(levels - first);
    if (present < 2) {
      ++summary.single_level_words;
      continue;
    }
    double raw_sum = 0.0;
    double norm_sum = 0.0;
    for (std::size_t k = first; k + 1 < levels; ++k) {
      const double ratio = static_cast<double>(counts[k + 1][id]) / static_cast<double>(counts[k][id]);
      const double size_ratio =
          static_cast<double>(chain.sizes()[k + 1]) / static_cast<double>(chain.sizes()[k]);
      raw_sum += ratio;
      norm_sum += ratio / size_ratio;
    }
    const auto n = static_cast<double>(present - 1);
    WordGrowth g{point.word, raw_sum / n, norm_sum / n, present, seg};
    ++summary.words;
    ++summary.histogram[histogram_bin(g.raw_mean_ratio)];
    raw_by_segment[static_cast<std::size_t>(seg)].push_back(g.raw_mean_ratio);
    norm_by_segment[static_cast<std::size_t>(seg)].push_back(g.normalized_mean_ratio);
    report.per_word.push_back(std::move(g));
  }
  for (std::size_t s = 0; s < 3; ++s) {
    auto& summary = report.segments[s];
    summary.median_raw = median(raw_by_segment[s]);
    summary.mean_raw = mean(raw_by_segment[s]);
    summary.median_normalized = median(norm_by_segment[s]);
    summary.mean_normalized = mean(norm_by_segment[s]);
  }
  return report;
}

void write_histogram_csv(std::ostream& out, const GrowthReport& report) {
  out << "segment,ratio_bin,word_count\n";
  for (const auto& s : report.segments) {
    for (std::size_t b = 0; b < kHistogramBins; ++b) {
      out << to_string(s.segment) << ',' << io::format_double(histogram_bin_start(b)) << ','
          << s.histogram[b] << '\n';
    }
  }
}

HeapsFit heaps_fit(const freq::HeapsCurve& curve) {
  const auto pts = curve.as_points();
  return heaps_fit(pts);
}

HeapsFit heaps_fit(std::span<const Point> pts) {
  if (pts.size() < 3) throw DataError("Heaps fit needs at least 3 points");
  const auto f = fit::fit_powerlaw_loglog(pts);
  HeapsFit out{f.a, f.b, f.adj_r2, {}};
  if (out.beta > 1.0) out.warnings.push_back("Heaps exponent exceeds 1");
  if (out.adj_r2 < 0.9) out.warnings.push_back("poor log-log fit (adjusted R^2 < 0.9)");
  return out;
}

double new_word_rate(const HeapsFit& fit, double n) {
  if (!(n >= 1.0)) throw DataError("token position must be >= 1");
  const double rate = fit.k * fit.beta * std::pow(n, fit.beta - 1.0);
  return std::clamp(rate, 0.0, 1.0);
}

}  // namespace zipfkit::growth
