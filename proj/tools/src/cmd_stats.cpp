#include <iostream>
#include <memory>

#include "columns.hpp"
#include "commands.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/json.hpp"
#include "zipfkit/stats.hpp"

namespace zipfkit::cli {
namespace {

struct TestArgs {
  std::string method;
  std::vector<std::string> files;
  std::optional<std::string> column;
  std::string mode = "auto";
  std::string out;
};

void need_files(const TestArgs& args, std::size_t n) {
  if (args.files.size() != n)
    throw ConfigError(args.method + " takes " + std::to_string(n) + " data files, got " +
                      std::to_string(args.files.size()));
}

void run_test(const TestArgs& args) {
  std::vector<std::vector<double>> data;
  stats::TestResult result;
  auto load = [&] {
    for (const auto& f : args.files) data.push_back(read_numeric_column(f, args.column));
  };
  if (args.method == "wilcoxon" || args.method == "signed-rank") {
    need_files(args, 2);
    load();
    const auto mode = parse_mode(args.mode);
    result = args.method == "wilcoxon" ? stats::wilcoxon_rank_sum(data[0], data[1], mode)
                                       : stats::wilcoxon_signed_rank(data[0], data[1], mode);
  } else if (args.method == "anova") {
    if (args.files.size() < 2) throw ConfigError("anova takes one data file per group, at least 2");
    load();
    result = stats::one_way_f_test(data);
  } else {
    need_files(args, 2);
    load();
    result = stats::pearson_test(data[0], data[1]);
  }
  const nlohmann::json doc = result;
  if (args.out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    write_json(args.out, doc);
}

}  // namespace

void add_test(CLI::App& app, Context&) {
  auto args = std::make_shared<TestArgs>();
  auto* sub = app.add_subcommand("test", "Statistical tests on numeric columns");
  sub->add_option("method", args->method, "wilcoxon, signed-rank, anova or pearson")
      ->required()
      ->check(CLI::IsMember({"wilcoxon", "signed-rank", "anova", "pearson"}));
  sub->add_option("files", args->files, "Data files, one sample or group each")->required();
  sub->add_option("--column", args->column, "Column name or index");
  sub->add_option("--mode", args->mode, "Wilcoxon p-value: exact, normal or auto")->capture_default_str();
  sub->add_option("--out", args->out, "Write the result here instead of stdout");
  sub->callback([args] { run_test(*args); });
}

}  // namespace zipfkit::cli
