#include <iostream>
#include <mutex>

#include "commands.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"
#include "zipfkit/json.hpp"

namespace zipfkit::cli {

void add_analysis_flags(CLI::App* sub, AnalysisArgs& args, bool with_shuffle) {
  sub->add_flag("--keep-punctuation", args.keep_punctuation,
                "Keep leading and trailing punctuation on tokens");
  sub->add_flag("--keep-case", args.keep_case, "Disable case folding");
  sub->add_option("--middle-end", args.middle_end, "Last rank of the middle segment (upper end stays 200)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--bounds", args.bounds, "Explicit segment bounds: UPPER_END MIDDLE_END")
      ->expected(2);
  sub->add_flag("--search-bounds", args.search_bounds,
                "Pick bounds minimizing the total segment residual");
  sub->add_option("--bins-per-decade", args.bins_per_decade, "Log bins per decade for the lower segment")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  if (with_shuffle)
    sub->add_option("--shuffle-seed", args.shuffle_seed, "Shuffle sentences with this seed before counting");
}

report::AnalysisOptions to_options(const AnalysisArgs& args) {
  report::AnalysisOptions o;
  o.load.rules.strip_punctuation = !args.keep_punctuation;
  o.load.rules.fold_case = !args.keep_case;
  if (args.shuffle_seed) {
    o.load.shuffle = true;
    o.load.seed = *args.shuffle_seed;
  }
  if (!args.bounds.empty()) {
    if (args.search_bounds) throw ConfigError("--bounds and --search-bounds are mutually exclusive");
    o.bounds = SegmentBounds{args.bounds[0], args.bounds[1]};
  }
  o.middle_end = args.middle_end;
  o.search_bounds = args.search_bounds;
  o.bins_per_decade = args.bins_per_decade;
  return o;
}

std::filesystem::path output_path(const Context& ctx, const std::string& file) {
  return std::filesystem::path(ctx.out_dir) / file;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  io::write_atomic(path, [&](std::ostream& out) { out << value.dump(2) << '\n'; });
  announce(path);
}

void write_analysis(const Context& ctx, const std::string& stem, const report::Analysis& analysis) {
  const std::filesystem::path dir(ctx.out_dir);
  write_json(dir / (stem + ".report.json"), analysis.report);
  for (const auto& p : report::write_artifacts(dir, stem, analysis)) announce(p);
}

stats::WilcoxonMode parse_mode(const std::string& mode) {
  if (mode == "exact") return stats::WilcoxonMode::exact;
  if (mode == "normal") return stats::WilcoxonMode::normal_approx;
  if (mode == "auto") return stats::WilcoxonMode::automatic;
  throw ConfigError("unknown Wilcoxon mode '" + mode + "' (exact, normal, auto)");
}

void announce(const std::filesystem::path& path) {
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  std::cout << path.string() << '\n';
}

}  // namespace zipfkit::cli
