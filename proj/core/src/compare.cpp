#include "zipfkit/compare.hpp"

#include <algorithm>

#include "zipfkit/error.hpp"
#include "zipfkit/frequency.hpp"
#include "zipfkit/segments.hpp"

namespace zipfkit::gen {
namespace {

std::vector<Point> slice(const std::vector<Point>& pts, std::uint64_t first, std::uint64_t last) {
  last = std::min<std::uint64_t>(last, pts.size());
  if (first > last) return {};
  return {pts.begin() + static_cast<std::ptrdiff_t>(first - 1), pts.begin() + static_cast<std::ptrdiff_t>(last)};
}

}  // namespace

ModelFit fit_model(std::string name, const ingest::TokenStream& stream,
                   const PipelineSettings& settings) {
  const auto& b = settings.bounds;
  if (!(b.upper_end >= 1 && b.upper_end < b.middle_end))
    throw ConfigError("segment bounds need 1 <= upper_end < middle_end");
  ModelFit out;
  out.model = std::move(name);
  out.tokens = stream.token_count();
  const auto curve = freq::rank(freq::count(stream));
  out.types = curve.vocabulary();
  const auto pts = curve.as_points();

  auto attempt = [&](const char* label, auto&& body) -> std::optional<fit::PowerLawFit> {
    try {
      return body();
    } catch (const DataError& e) {
      out.flags.push_back(std::string(label) + "_segment_unfit: " + e.what());
      return std::nullopt;
    }
  };

  out.upper = attempt("upper", [&] {
    auto f = fit::fit_powerlaw_loglog(slice(pts, 1, b.upper_end));
    f.domain = {1.0, static_cast<double>(std::min<std::uint64_t>(b.upper_end, out.types))};
    return f;
  });
  if (out.types < b.middle_end) out.flags.push_back("middle_segment_truncated");
  out.middle = attempt("middle", [&] {
    auto f = fit::fit_powerlaw_loglog(slice(pts, b.upper_end + 1, b.middle_end));
    f.domain = {static_cast<double>(b.upper_end + 1),
                static_cast<double>(std::min<std::uint64_t>(b.middle_end, out.types))};
    return f;
  });
  if (out.types <= b.middle_end) {
    out.flags.push_back("lower_segment_empty");
  } else {
    out.lower = attempt("lower", [&] {
      const auto binned = fit::log_bin(slice(pts, b.middle_end + 1, out.types), settings.bins_per_decade);
      auto f = fit::fit_shifted_powerlaw(binned.as_points());
      f.domain = {static_cast<double>(b.middle_end + 1), static_cast<double>(out.types)};
      return f;
    });
  }
  if (out.middle && out.lower)
    out.bend = out.middle->b - out.lower->b;
  else
    out.flags.push_back("bend_undefined");
  return out;
}

ModelComparison compare_models(const SimonConfig& simon, const TypingConfig& typing,
                               const DualConfig& dual, const PipelineSettings& settings) {
  if (simon.n_tokens != typing.n_tokens || simon.n_tokens != dual.n_tokens)
    throw ConfigError("compare needs the same n_tokens for every model");
  ModelComparison out;
  out.settings = settings;
  out.models.push_back(fit_model("simon", simon_generate(simon), settings));
  out.models.push_back(fit_model("typing", typing_generate(typing), settings));
  out.models.push_back(fit_model("dual", dual_generate(dual), settings));
  return out;
}

}  // namespace zipfkit::gen
