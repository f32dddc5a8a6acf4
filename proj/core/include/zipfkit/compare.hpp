#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/generators.hpp"
#include "zipfkit/powerlaw.hpp"
#include "zipfkit/types.hpp"

namespace zipfkit::gen {

struct PipelineSettings {
  SegmentBounds bounds{200, 3000};
  int bins_per_decade = 10;
};

struct ModelFit {
  std::string model;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;
  std::optional<fit::PowerLawFit> upper;
  std::optional<fit::PowerLawFit> middle;
  std::optional<fit::PowerLawFit> lower;
  std::optional<double> bend;  // e2 - e3, absent when either fit is missing
  std::vector<std::string> flags;
};

struct ModelComparison {
  PipelineSettings settings;
  std::vector<ModelFit> models;
};

/// Three-segment fits of one token stream. A vocabulary too small for a
/// segment leaves that fit empty and records a flag instead of failing.
ModelFit fit_model(std::string name, const ingest::TokenStream& stream,
                   const PipelineSettings& settings);

/// Generates one stream per model and fits each. All configs must share
/// n_tokens.
ModelComparison compare_models(const SimonConfig& simon, const TypingConfig& typing,
                               const DualConfig& dual, const PipelineSettings& settings = {});

}  // namespace zipfkit::gen
