#pragma once

// JSON conversions for the report types. Every numeric field must be
// finite; serializing a non-finite value throws DataError. Parsing checks
// types and required keys and throws DataError on mismatch.

#include <nlohmann/json.hpp>

#include "zipfkit/compare.hpp"
#include "zipfkit/growth.hpp"
#include "zipfkit/powerlaw.hpp"
#include "zipfkit/report.hpp"
#include "zipfkit/stats.hpp"
#include "zipfkit/trend.hpp"
#include "zipfkit/types.hpp"

namespace zipfkit {
void to_json(nlohmann::json& j, const SegmentBounds& v);
void from_json(const nlohmann::json& j, SegmentBounds& v);
void to_json(nlohmann::json& j, const Interval& v);
void from_json(const nlohmann::json& j, Interval& v);
}  // namespace zipfkit

namespace zipfkit::fit {
void to_json(nlohmann::json& j, const PowerLawFit& v);
void from_json(const nlohmann::json& j, PowerLawFit& v);
void to_json(nlohmann::json& j, const TrendSample& v);
void from_json(const nlohmann::json& j, TrendSample& v);
void to_json(nlohmann::json& j, const ExponentTrend& v);
void from_json(const nlohmann::json& j, ExponentTrend& v);
}  // namespace zipfkit::fit

namespace zipfkit::growth {
void to_json(nlohmann::json& j, const HeapsFit& v);
void from_json(const nlohmann::json& j, HeapsFit& v);
void to_json(nlohmann::json& j, const SegmentSummary& v);
void from_json(const nlohmann::json& j, SegmentSummary& v);
}  // namespace zipfkit::growth

namespace zipfkit::stats {
void to_json(nlohmann::json& j, const TestResult& v);
void from_json(const nlohmann::json& j, TestResult& v);
}  // namespace zipfkit::stats

namespace zipfkit::gen {
void to_json(nlohmann::json& j, const PipelineSettings& v);
void from_json(const nlohmann::json& j, PipelineSettings& v);
void to_json(nlohmann::json& j, const ModelFit& v);
void from_json(const nlohmann::json& j, ModelFit& v);
void to_json(nlohmann::json& j, const ModelComparison& v);
void from_json(const nlohmann::json& j, ModelComparison& v);
}  // namespace zipfkit::gen

namespace zipfkit::report {
void to_json(nlohmann::json& j, const CorpusInfo& v);
void from_json(const nlohmann::json& j, CorpusInfo& v);
void to_json(nlohmann::json& j, const GrowthSummary& v);
void from_json(const nlohmann::json& j, GrowthSummary& v);
void to_json(nlohmann::json& j, const TrendReport& v);
void from_json(const nlohmann::json& j, TrendReport& v);
void to_json(nlohmann::json& j, const AnalysisReport& v);
void from_json(const nlohmann::json& j, AnalysisReport& v);
void to_json(nlohmann::json& j, const CorpusComparison& v);
void from_json(const nlohmann::json& j, CorpusComparison& v);

/// Growth output of the `growth` command: the summary plus per-word rows.
nlohmann::json growth_to_json(const growth::GrowthReport& report);

/// Parses JSON text, rethrowing parse failures as DataError.
nlohmann::json parse_json(const std::string& text, const std::string& origin);
}  // namespace zipfkit::report
