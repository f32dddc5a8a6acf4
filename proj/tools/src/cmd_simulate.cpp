#include <memory>

#include "commands.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/generators.hpp"

namespace zipfkit::cli {
namespace {

struct SimulateArgs {
  std::string model;
  std::uint64_t tokens = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool analyze = false;
  AnalysisArgs analysis;
  gen::SimonConfig simon;
  gen::TypingConfig typing;
  gen::DualConfig dual;
  double high_exponent = 1.0;
  std::string high_table;
  std::string reuse = "uniform";
};

ingest::TokenStream generate(SimulateArgs& args) {
  const std::uint64_t seed = *args.seed;
  if (args.model == "simon") {
    args.simon.n_tokens = args.tokens;
    args.simon.seed = seed;
    return gen::simon_generate(args.simon);
  }
  if (args.model == "typing") {
    args.typing.n_tokens = args.tokens;
    args.typing.seed = seed;
    return gen::typing_generate(args.typing);
  }
  args.dual.n_tokens = args.tokens;
  args.dual.seed = seed;
  if (args.reuse == "uniform")
    args.dual.reuse = gen::LowReuse::uniform;
  else if (args.reuse == "preferential")
    args.dual.reuse = gen::LowReuse::preferential;
  else
    throw ConfigError("--reuse must be uniform or preferential, got '" + args.reuse + "'");
  if (!args.high_table.empty())
    args.dual.high_dist = gen::load_empirical_table(args.high_table);
  else
    args.dual.high_dist = gen::ZipfHigh{args.high_exponent};
  return gen::dual_generate(args.dual);
}

void run_simulate(const Context& ctx, SimulateArgs& args) {
  if (!args.seed) throw ConfigError("simulate needs an explicit --seed");
  const std::string stem = args.model + "_seed" + std::to_string(*args.seed);
  const std::filesystem::path out = args.out.empty() ? output_path(ctx, stem + ".tokens") : std::filesystem::path(args.out);
  const auto stream = generate(args);
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  ingest::write_token_file(out, stream);
  announce(out);
  if (!args.analyze) return;
  auto options = to_options(args.analysis);
  auto analysis = report::analyze_stream(stream, out.string(), options);
  analysis.report.seed = *args.seed;
  write_analysis(ctx, stem, analysis);
}

}  // namespace

void add_simulate(CLI::App& app, Context& ctx) {
  auto args = std::make_shared<SimulateArgs>();
  // Generated vocabularies are analyzed with the middle segment running to
  // rank 3000, the size of the dual model's high-frequency pool.
  args->analysis.middle_end = 3000;
  auto* sub = app.add_subcommand("simulate", "Generate a token stream from a text model");
  sub->add_option("model", args->model, "simon, typing or dual")
      ->required()
      ->check(CLI::IsMember({"simon", "typing", "dual"}));
  sub->add_option("--tokens", args->tokens, "Tokens to generate")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", args->seed, "Generator seed (required)");
  sub->add_option("--out", args->out, "Token file (one token per line)");
  sub->add_flag("--analyze", args->analyze, "Run the analysis pipeline on the generated stream");
  sub->add_option("--alpha", args->simon.alpha, "Simon: new-word probability")->capture_default_str();
  sub->add_option("--alphabet-size", args->typing.alphabet_size, "Typing: letters")->capture_default_str();
  sub->add_option("--space-prob", args->typing.space_prob, "Typing: space probability")->capture_default_str();
  sub->add_option("--n-high", args->dual.n_high, "Dual: high-frequency pool size")->capture_default_str();
  sub->add_option("--p-high", args->dual.p_high, "Dual: total high-pool probability")->capture_default_str();
  sub->add_option("--high-exponent", args->high_exponent, "Dual: Zipf exponent of the high pool")->capture_default_str();
  sub->add_option("--high-table", args->high_table, "Dual: word,count table for the high pool");
  sub->add_option("--heaps-k", args->dual.heaps_k, "Dual: Heaps coefficient")->capture_default_str();
  sub->add_option("--heaps-beta", args->dual.heaps_beta, "Dual: Heaps exponent")->capture_default_str();
  sub->add_option("--reuse", args->reuse, "Dual: low-pool reuse, uniform or preferential")->capture_default_str();
  add_analysis_flags(sub, args->analysis, false);
  sub->callback([&ctx, args] { run_simulate(ctx, *args); });
}

}  // namespace zipfkit::cli
