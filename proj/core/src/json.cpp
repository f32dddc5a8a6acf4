#include "zipfkit/json.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "zipfkit/error.hpp"

using nlohmann::json;

namespace zipfkit {
namespace {

double finite(double v, const char* key) {
  if (!std::isfinite(v)) throw DataError(std::string("non-finite value in field '") + key + "'");
  return v;
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return field<T>(j, key);
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

// Fills a local object and moves it into the target only once complete.
class Builder {
 public:
  template <class T>
  Builder& add(const char* key, const T& v) {
    out_[key] = v;
    return *this;
  }
  Builder& num(const char* key, double v) {
    out_[key] = finite(v, key);
    return *this;
  }
  template <class T>
  Builder& opt(const char* key, const std::optional<T>& v) {
    put_optional(out_, key, v);
    return *this;
  }
  void into(json& j) { j = std::move(out_); }
  json take() { return std::move(out_); }

 private:
  json out_ = json::object();
};

Segment parse_segment(const std::string& s) {
  if (s == "upper") return Segment::upper;
  if (s == "middle") return Segment::middle;
  if (s == "lower") return Segment::lower;
  throw DataError("unknown segment '" + s + "'");
}

}  // namespace

void to_json(json& j, const SegmentBounds& v) {
  j = {{"upper_end", v.upper_end}, {"middle_end", v.middle_end}};
}
void from_json(const json& j, SegmentBounds& v) {
  v.upper_end = field<std::uint64_t>(j, "upper_end");
  v.middle_end = field<std::uint64_t>(j, "middle_end");
}

void to_json(json& j, const Interval& v) { Builder().num("lo", v.lo).num("hi", v.hi).into(j); }
void from_json(const json& j, Interval& v) {
  v.lo = field<double>(j, "lo");
  v.hi = field<double>(j, "hi");
}

namespace fit {

void to_json(json& j, const PowerLawFit& v) {
  Builder()
      .num("a", v.a)
      .num("b", v.b)
      .num("c", v.c)
      .num("r2", v.r2)
      .num("adj_r2", v.adj_r2)
      .num("sse", v.sse)
      .add("n_points", v.n_points)
      .add("domain", v.domain)
      .add("warnings", v.warnings)
      .into(j);
}
void from_json(const json& j, PowerLawFit& v) {
  v.a = field<double>(j, "a");
  v.b = field<double>(j, "b");
  v.c = field<double>(j, "c");
  v.r2 = field<double>(j, "r2");
  v.adj_r2 = field<double>(j, "adj_r2");
  v.sse = field<double>(j, "sse");
  v.n_points = field<std::size_t>(j, "n_points");
  v.domain = field<Interval>(j, "domain");
  v.warnings = field<std::vector<std::string>>(j, "warnings");
}

void to_json(json& j, const TrendSample& v) {
  Builder().num("sample_size", v.sample_size).num("exponent", v.exponent).into(j);
}
void from_json(const json& j, TrendSample& v) {
  v.sample_size = field<double>(j, "sample_size");
  v.exponent = field<double>(j, "exponent");
}

void to_json(json& j, const ExponentTrend& v) {
  Builder()
      .add("mode", to_string(v.mode))
      .add("samples", v.samples)
      .num("limit", v.limit)
      .num("rate", v.rate)
      .num("amplitude", v.amplitude)
      .num("adj_r2", v.adj_r2)
      .add("warnings", v.warnings)
      .into(j);
}
void from_json(const json& j, ExponentTrend& v) {
  const auto mode = field<std::string>(j, "mode");
  if (mode == to_string(TrendMode::limit))
    v.mode = TrendMode::limit;
  else if (mode == to_string(TrendMode::difference_decay))
    v.mode = TrendMode::difference_decay;
  else
    throw DataError("unknown trend mode '" + mode + "'");
  v.samples = field<std::vector<TrendSample>>(j, "samples");
  v.limit = field<double>(j, "limit");
  v.rate = field<double>(j, "rate");
  v.amplitude = field<double>(j, "amplitude");
  v.adj_r2 = field<double>(j, "adj_r2");
  v.warnings = field<std::vector<std::string>>(j, "warnings");
}

}  // namespace fit

namespace growth {

void to_json(json& j, const HeapsFit& v) {
  Builder().num("k", v.k).num("beta", v.beta).num("adj_r2", v.adj_r2).add("warnings", v.warnings).into(j);
}
void from_json(const json& j, HeapsFit& v) {
  v.k = field<double>(j, "k");
  v.beta = field<double>(j, "beta");
  v.adj_r2 = field<double>(j, "adj_r2");
  v.warnings = field<std::vector<std::string>>(j, "warnings");
}

void to_json(json& j, const SegmentSummary& v) {
  Builder()
      .add("segment", to_string(v.segment))
      .add("words", v.words)
      .add("single_level_words", v.single_level_words)
      .num("median_raw", v.median_raw)
      .num("mean_raw", v.mean_raw)
      .num("median_normalized", v.median_normalized)
      .num("mean_normalized", v.mean_normalized)
      .add("histogram_start", kHistogramStart)
      .add("histogram_width", kHistogramWidth)
      .add("histogram", v.histogram)
      .into(j);
}
void from_json(const json& j, SegmentSummary& v) {
  v.segment = parse_segment(field<std::string>(j, "segment"));
  v.words = field<std::size_t>(j, "words");
  v.single_level_words = field<std::size_t>(j, "single_level_words");
  v.median_raw = field<double>(j, "median_raw");
  v.mean_raw = field<double>(j, "mean_raw");
  v.median_normalized = field<double>(j, "median_normalized");
  v.mean_normalized = field<double>(j, "mean_normalized");
  const auto hist = field<std::vector<std::uint64_t>>(j, "histogram");
  if (hist.size() != kHistogramBins)
    throw DataError("histogram must have " + std::to_string(kHistogramBins) + " bins");
  std::copy(hist.begin(), hist.end(), v.histogram.begin());
}

}  // namespace growth

namespace stats {

void to_json(json& j, const TestResult& v) {
  for (double d : v.df) finite(d, "df");
  Builder b;
  b.num("statistic", v.statistic).num("p_value", v.p_value).add("method", v.method).add("n", v.n);
  if (!v.df.empty()) b.add("df", v.df);
  b.into(j);
}
void from_json(const json& j, TestResult& v) {
  v.statistic = field<double>(j, "statistic");
  v.p_value = field<double>(j, "p_value");
  v.method = field<std::string>(j, "method");
  v.n = field<std::vector<std::size_t>>(j, "n");
  v.df = optional_field<std::vector<double>>(j, "df").value_or(std::vector<double>{});
}

}  // namespace stats

namespace gen {

void to_json(json& j, const PipelineSettings& v) {
  j = {{"bounds", v.bounds}, {"bins_per_decade", v.bins_per_decade}};
}
void from_json(const json& j, PipelineSettings& v) {
  v.bounds = field<SegmentBounds>(j, "bounds");
  v.bins_per_decade = field<int>(j, "bins_per_decade");
}

void to_json(json& j, const ModelFit& v) {
  Builder b;
  b.add("model", v.model).add("tokens", v.tokens).add("types", v.types).add("flags", v.flags);
  b.opt("upper", v.upper).opt("middle", v.middle).opt("lower", v.lower);
  if (v.bend) b.num("bend", *v.bend);
  b.into(j);
}
void from_json(const json& j, ModelFit& v) {
  v.model = field<std::string>(j, "model");
  v.tokens = field<std::uint64_t>(j, "tokens");
  v.types = field<std::uint64_t>(j, "types");
  v.flags = field<std::vector<std::string>>(j, "flags");
  v.upper = optional_field<fit::PowerLawFit>(j, "upper");
  v.middle = optional_field<fit::PowerLawFit>(j, "middle");
  v.lower = optional_field<fit::PowerLawFit>(j, "lower");
  v.bend = optional_field<double>(j, "bend");
}

void to_json(json& j, const ModelComparison& v) {
  Builder().add("settings", v.settings).add("models", v.models).into(j);
}
void from_json(const json& j, ModelComparison& v) {
  v.settings = field<PipelineSettings>(j, "settings");
  v.models = field<std::vector<ModelFit>>(j, "models");
}

}  // namespace gen

namespace report {

void to_json(json& j, const CorpusInfo& v) {
  j = {{"path", v.path}, {"tokens", v.tokens}, {"types", v.types}};
}
void from_json(const json& j, CorpusInfo& v) {
  v.path = field<std::string>(j, "path");
  v.tokens = field<std::uint64_t>(j, "tokens");
  v.types = field<std::uint64_t>(j, "types");
}

void to_json(json& j, const GrowthSummary& v) {
  Builder().add("level_sizes", v.level_sizes).add("bounds", v.bounds).add("segments", v.segments).into(j);
}
void from_json(const json& j, GrowthSummary& v) {
  v.level_sizes = field<std::vector<std::size_t>>(j, "level_sizes");
  v.bounds = field<SegmentBounds>(j, "bounds");
  const auto segs = field<std::vector<growth::SegmentSummary>>(j, "segments");
  if (segs.size() != 3) throw DataError("growth summary needs 3 segments");
  std::copy(segs.begin(), segs.end(), v.segments.begin());
}

void to_json(json& j, const TrendReport& v) {
  Builder().add("e1", v.exponents[0]).add("e2", v.exponents[1]).add("e3", v.exponents[2]).into(j);
}
void from_json(const json& j, TrendReport& v) {
  v.exponents[0] = field<fit::ExponentTrend>(j, "e1");
  v.exponents[1] = field<fit::ExponentTrend>(j, "e2");
  v.exponents[2] = field<fit::ExponentTrend>(j, "e3");
}

void to_json(json& j, const AnalysisReport& v) {
  Builder b;
  b.add("tool_version", v.tool_version)
      .add("corpus", v.corpus)
      .add("shuffled", v.shuffled)
      .add("bounds", v.bounds)
      .add("bounds_method", v.bounds_method)
      .add("bins_per_decade", v.bins_per_decade)
      .add("fits", Builder().add("upper", v.upper).add("middle", v.middle).add("lower", v.lower).take())
      .num("bend", v.bend)
      .add("heaps", v.heaps)
      .opt("seed", v.seed)
      .opt("growth", v.growth)
      .opt("trend", v.trend);
  if (v.search_residual) b.num("search_residual", *v.search_residual);
  b.into(j);
}
void from_json(const json& j, AnalysisReport& v) {
  v.tool_version = field<std::string>(j, "tool_version");
  v.corpus = field<CorpusInfo>(j, "corpus");
  v.shuffled = field<bool>(j, "shuffled");
  v.seed = optional_field<std::uint64_t>(j, "seed");
  v.bounds = field<SegmentBounds>(j, "bounds");
  v.bounds_method = field<std::string>(j, "bounds_method");
  v.search_residual = optional_field<double>(j, "search_residual");
  v.bins_per_decade = field<int>(j, "bins_per_decade");
  const auto fits = field<json>(j, "fits");
  v.upper = field<fit::PowerLawFit>(fits, "upper");
  v.middle = field<fit::PowerLawFit>(fits, "middle");
  v.lower = field<fit::PowerLawFit>(fits, "lower");
  v.bend = field<double>(j, "bend");
  v.heaps = field<growth::HeapsFit>(j, "heaps");
  v.growth = optional_field<GrowthSummary>(j, "growth");
  v.trend = optional_field<TrendReport>(j, "trend");
}

namespace {

json segment_triple(const std::array<double, 3>& v, const char* key) {
  for (double x : v) finite(x, key);
  return Builder().add("upper", v[0]).add("middle", v[1]).add("lower", v[2]).take();
}
json fit_triple(const std::array<fit::PowerLawFit, 3>& v) {
  return Builder().add("upper", v[0]).add("middle", v[1]).add("lower", v[2]).take();
}
template <class T>
std::array<T, 3> read_triple(const json& j, const char* key) {
  const auto obj = field<json>(j, key);
  return {field<T>(obj, "upper"), field<T>(obj, "middle"), field<T>(obj, "lower")};
}

}  // namespace

void to_json(json& j, const CorpusComparison& v) {
  Builder()
      .add("a", v.a)
      .add("b", v.b)
      .add("bounds_a", v.bounds_a)
      .add("bounds_b", v.bounds_b)
      .add("ochiai", segment_triple(v.ochiai, "ochiai"))
      .add("fits_a", fit_triple(v.fits_a))
      .add("fits_b", fit_triple(v.fits_b))
      .add("exponent_delta", segment_triple(v.exponent_delta, "exponent_delta"))
      .opt("exponent_test", v.exponent_test)
      .into(j);
}
void from_json(const json& j, CorpusComparison& v) {
  v.a = field<CorpusInfo>(j, "a");
  v.b = field<CorpusInfo>(j, "b");
  v.bounds_a = field<SegmentBounds>(j, "bounds_a");
  v.bounds_b = field<SegmentBounds>(j, "bounds_b");
  v.ochiai = read_triple<double>(j, "ochiai");
  v.fits_a = read_triple<fit::PowerLawFit>(j, "fits_a");
  v.fits_b = read_triple<fit::PowerLawFit>(j, "fits_b");
  v.exponent_delta = read_triple<double>(j, "exponent_delta");
  v.exponent_test = optional_field<stats::TestResult>(j, "exponent_test");
}

json growth_to_json(const growth::GrowthReport& report) {
  json j = summarize(report);
  json words = json::array();
  for (const auto& w : report.per_word) {
    words.push_back(Builder()
                        .add("word", w.word)
                        .num("raw_mean_ratio", w.raw_mean_ratio)
                        .num("normalized_mean_ratio", w.normalized_mean_ratio)
                        .add("levels_present", w.levels_present)
                        .add("segment", to_string(w.segment))
                        .take());
  }
  j["per_word"] = std::move(words);
  return j;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(origin + ": invalid JSON: " + e.what());
  }
}

}  // namespace report
}  // namespace zipfkit
