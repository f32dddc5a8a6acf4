#include <glob.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <memory>
#include <set>
#include <thread>

#include "columns.hpp"
#include "commands.hpp"
#include "zipfkit/compare.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"
#include "zipfkit/json.hpp"

namespace zipfkit::cli {
namespace {

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t g{};
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
  std::vector<std::string> out;
  if (rc == 0)
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  globfree(&g);
  if (rc != 0 && rc != GLOB_NOMATCH) throw DataError("cannot expand pattern '" + pattern + "'");
  return out;
}

struct AnalyzeArgs {
  AnalysisArgs analysis;
  std::vector<std::string> corpora;
  std::vector<std::string> globs;
  std::string stem;
  int growth_levels = 0;
  int trend_levels = 0;
  unsigned jobs = 0;
};

void run_analyze(const Context& ctx, const AnalyzeArgs& args) {
  std::vector<std::string> files = args.corpora;
  for (const auto& pattern : args.globs) {
    const auto matched = expand_glob(pattern);
    if (matched.empty()) throw DataError("pattern '" + pattern + "' matched no files");
    files.insert(files.end(), matched.begin(), matched.end());
  }
  if (files.empty()) throw ConfigError("analyze needs a corpus path or --glob");
  if (!args.stem.empty() && files.size() > 1) throw ConfigError("--stem applies to a single corpus");

  std::vector<std::string> stems;
  std::set<std::string> seen;
  for (const auto& f : files) {
    const std::string stem = args.stem.empty() ? std::filesystem::path(f).stem().string() : args.stem;
    if (!seen.insert(stem).second)
      throw ConfigError("two corpora share the output stem '" + stem + "'; rename one");
    stems.push_back(stem);
  }

  auto options = to_options(args.analysis);
  options.growth_levels = args.growth_levels;
  options.trend_levels = args.trend_levels;

  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      try {
        write_analysis(ctx, stems[i], report::analyze_file(files[i], options));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::exception_ptr first;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i]) continue;
    if (files.size() > 1) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        std::cerr << "zipfkit: " << files[i] << ": " << e.what() << '\n';
      }
    }
    if (!first) first = errors[i];
  }
  if (first) std::rethrow_exception(first);
}

struct GrowthArgs {
  AnalysisArgs analysis;
  std::string corpus;
  int levels = 6;
  std::optional<std::uint64_t> seed;
  bool no_shuffle = false;
  std::string stem;
};

void run_growth(const Context& ctx, const GrowthArgs& args) {
  if (!args.seed && !args.no_shuffle)
    throw ConfigError("growth shuffles sentences: pass --seed, or --no-shuffle to keep corpus order");
  if (args.seed && args.no_shuffle) throw ConfigError("--seed and --no-shuffle are mutually exclusive");
  auto options = to_options(args.analysis);
  options.load.shuffle = !args.no_shuffle;
  options.load.seed = args.seed.value_or(0);
  const auto stream = ingest::load_corpus(args.corpus, options.load);
  const auto chain = ingest::build_doubling_chain(stream, args.levels);
  const auto largest = freq::rank(freq::count(chain.level(chain.levels() - 1)));
  const auto bounds = report::resolve_bounds(largest, options).first;
  const auto result = growth::growth_rates(chain, bounds);

  const std::string stem = args.stem.empty() ? std::filesystem::path(args.corpus).stem().string() : args.stem;
  auto doc = report::growth_to_json(result);
  doc["corpus"] = args.corpus;
  doc["shuffled"] = options.load.shuffle;
  if (args.seed) doc["seed"] = *args.seed;
  doc["tool_version"] = report::tool_version();
  write_json(output_path(ctx, stem + ".growth.json"), doc);

  const auto hist = output_path(ctx, stem + ".growth_histogram.csv");
  io::write_atomic(hist, [&](std::ostream& o) { growth::write_histogram_csv(o, result); });
  announce(hist);
  const auto words = output_path(ctx, stem + ".growth_words.csv");
  io::write_atomic(words, [&](std::ostream& o) {
    o << "word,segment,levels_present,raw_mean_ratio,normalized_mean_ratio\n";
    for (const auto& w : result.per_word)
      o << w.word << ',' << to_string(w.segment) << ',' << w.levels_present << ','
        << io::format_double(w.raw_mean_ratio) << ',' << io::format_double(w.normalized_mean_ratio)
        << '\n';
  });
  announce(words);
}

struct TrendArgs {
  AnalysisArgs analysis;
  std::vector<std::string> reports;
  std::string prefixes;
  int levels = 6;
  std::string name = "trend";
};

void run_trend(const Context& ctx, const TrendArgs& args) {
  report::TrendReport trend;
  nlohmann::json doc;
  if (!args.prefixes.empty()) {
    if (!args.reports.empty()) throw ConfigError("give report files or --prefixes, not both");
    const auto options = to_options(args.analysis);
    const auto stream = ingest::load_corpus(args.prefixes, options.load);
    trend = report::trend_from_prefixes(stream, args.levels, options);
    doc["source"] = {{"prefixes_of", args.prefixes}, {"levels", args.levels}};
  } else {
    std::vector<report::AnalysisReport> reports;
    for (const auto& path : args.reports) {
      const auto j = report::parse_json(io::read_file(path), path);
      try {
        reports.push_back(j.get<report::AnalysisReport>());
      } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
      }
    }
    trend = report::trend_from_reports(reports);
    doc["source"] = {{"reports", args.reports}};
  }
  doc["trend"] = trend;
  doc["tool_version"] = report::tool_version();
  write_json(output_path(ctx, args.name + ".trend.json"), doc);
}

struct CompareArgs {
  AnalysisArgs analysis;
  std::vector<std::string> corpora;
  std::string exponents_a;
  std::string exponents_b;
  std::optional<std::string> column;
  bool paired = false;
  std::string mode = "auto";
  bool models = false;
  std::uint64_t tokens = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string name = "compare";
};

void run_compare(const Context& ctx, const CompareArgs& args) {
  if (args.models) {
    if (!args.corpora.empty()) throw ConfigError("--models takes no corpus paths");
    if (!args.seed) throw ConfigError("--models needs an explicit --seed");
    gen::SimonConfig simon;
    gen::TypingConfig typing;
    gen::DualConfig dual;
    simon.n_tokens = typing.n_tokens = dual.n_tokens = args.tokens;
    simon.seed = typing.seed = dual.seed = *args.seed;
    gen::PipelineSettings settings;
    settings.bounds = args.analysis.bounds.empty()
                          ? SegmentBounds{fit::kDefaultUpperEnd, 3000}
                          : SegmentBounds{args.analysis.bounds[0], args.analysis.bounds[1]};
    settings.bins_per_decade = args.analysis.bins_per_decade;
    nlohmann::json doc = gen::compare_models(simon, typing, dual, settings);
    doc["seed"] = *args.seed;
    doc["tool_version"] = report::tool_version();
    write_json(output_path(ctx, args.name + ".models.json"), doc);
    return;
  }
  if (args.corpora.size() != 2) throw ConfigError("compare needs exactly two corpus paths");
  report::CompareOptions options;
  options.analysis = to_options(args.analysis);
  options.paired = args.paired;
  options.mode = parse_mode(args.mode);
  if (args.exponents_a.empty() != args.exponents_b.empty())
    throw ConfigError("--exponents-a and --exponents-b go together");
  if (!args.exponents_a.empty())
    options.exponent_lists = std::make_pair(read_numeric_column(args.exponents_a, args.column),
                                            read_numeric_column(args.exponents_b, args.column));
  nlohmann::json doc = report::compare_corpora(args.corpora[0], args.corpora[1], options);
  doc["tool_version"] = report::tool_version();
  write_json(output_path(ctx, args.name + ".json"), doc);
}

}  // namespace

void add_analyze(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<AnalyzeArgs>();
  auto* sub = app.add_subcommand("analyze", "Fit the three-segment rank-frequency model to corpora");
  sub->add_option("corpora", args->corpora, "Corpus text files");
  sub->add_option("--glob", args->globs, "Shell pattern of corpus files (repeatable)");
  sub->add_option("--stem", args->stem, "Output file stem (single corpus)");
  sub->add_option("--growth-levels", args->growth_levels, "Add a growth summary over this many doubling levels")
      ->check(CLI::Range(2, 62));
  sub->add_option("--trend-levels", args->trend_levels, "Add exponent trends over this many nested prefixes")
      ->check(CLI::Range(4, 62));
  sub->add_option("--jobs", args->jobs, "Concurrent corpora in batch mode (default: all cores)");
  add_analysis_flags(sub, args->analysis);
  sub->callback([&ctx, args] { run_analyze(ctx, *args); });
}

void add_growth(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<GrowthArgs>();
  auto* sub = app.add_subcommand("growth", "Per-word frequency growth over a doubling sample chain");
  sub->add_option("corpus", args->corpus, "Corpus text file")->required();
  sub->add_option("--levels", args->levels, "Doubling chain levels")->capture_default_str()->check(CLI::Range(2, 62));
  sub->add_option("--seed", args->seed, "Sentence shuffle seed");
  sub->add_flag("--no-shuffle", args->no_shuffle, "Keep the corpus order");
  sub->add_option("--stem", args->stem, "Output file stem");
  add_analysis_flags(sub, args->analysis, false);
  sub->callback([&ctx, args] { run_growth(ctx, *args); });
}

void add_trend(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<TrendArgs>();
  auto* sub = app.add_subcommand("trend", "Exponent trends over increasing sample sizes");
  sub->add_option("reports", args->reports, "Analysis report JSON files, smallest corpus first");
  sub->add_option("--prefixes", args->prefixes, "Analyze nested prefixes of this corpus instead");
  sub->add_option("--levels", args->levels, "Prefix levels for --prefixes")->capture_default_str()->check(CLI::Range(4, 62));
  sub->add_option("--name", args->name, "Output file stem")->capture_default_str();
  add_analysis_flags(sub, args->analysis);
  sub->callback([&ctx, args] { run_trend(ctx, *args); });
}

void add_compare(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<CompareArgs>();
  auto* sub = app.add_subcommand("compare", "Compare two corpora, or the three generator models");
  sub->add_option("corpora", args->corpora, "Two corpus text files");
  sub->add_option("--exponents-a", args->exponents_a, "Exponent list for the rank test (first group)");
  sub->add_option("--exponents-b", args->exponents_b, "Exponent list for the rank test (second group)");
  sub->add_option("--column", args->column, "Column name or index in the exponent files");
  sub->add_flag("--paired", args->paired, "Signed-rank test on paired lists instead of rank-sum");
  sub->add_option("--mode", args->mode, "Wilcoxon p-value: exact, normal or auto")->capture_default_str();
  sub->add_flag("--models", args->models, "Compare Simon, random-typing and dual models");
  sub->add_option("--tokens", args->tokens, "Tokens per model (--models)")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", args->seed, "Generator seed (--models)");
  sub->add_option("--name", args->name, "Output file stem")->capture_default_str();
  add_analysis_flags(sub, args->analysis);
  sub->callback([&ctx, args] { run_compare(ctx, *args); });
}

}  // namespace zipfkit::cli
