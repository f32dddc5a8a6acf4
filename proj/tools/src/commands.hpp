#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "zipfkit/report.hpp"

namespace zipfkit::cli {

struct Context {
  std::string out_dir = ".";
};

// Analysis flags shared by analyze, growth, trend, compare and simulate.
struct AnalysisArgs {
  bool keep_punctuation = false;
  bool keep_case = false;
  std::uint64_t middle_end = fit::kDefaultMiddleEnd;
  std::vector<std::uint64_t> bounds;  // empty or {upper_end, middle_end}
  bool search_bounds = false;
  int bins_per_decade = fit::kDefaultBinsPerDecade;
  std::optional<std::uint64_t> shuffle_seed;
};

void add_analysis_flags(CLI::App* sub, AnalysisArgs& args, bool with_shuffle = true);
report::AnalysisOptions to_options(const AnalysisArgs& args);

std::filesystem::path output_path(const Context& ctx, const std::string& file);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);
void write_analysis(const Context& ctx, const std::string& stem, const report::Analysis& analysis);
stats::WilcoxonMode parse_mode(const std::string& mode);

// Prints a written path on stdout, one per line.
void announce(const std::filesystem::path& path);

void add_analyze(CLI::App& app, Context& ctx);
void add_growth(CLI::App& app, Context& ctx);
void add_trend(CLI::App& app, Context& ctx);
void add_compare(CLI::App& app, Context& ctx);
void add_simulate(CLI::App& app, Context& ctx);
void add_test(CLI::App& app, Context& ctx);

}  // namespace zipfkit::cli
