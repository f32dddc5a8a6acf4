#include <cstring>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "config_file.hpp"
#include "zipfkit/error.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

const char* const kSubcommands[] = {"analyze", "simulate", "compare", "growth", "trend", "test"};

std::string active_subcommand(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    for (const char* name : kSubcommands)
      if (std::strcmp(argv[i], name) == 0) return name;
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace zipfkit;
  CLI::App app{"Rank-frequency and vocabulary-growth analysis of word corpora", "zipfkit"};
  app.set_version_flag("--version", report::tool_version());
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);

  cli::Context ctx;
  app.add_option("--out-dir", ctx.out_dir, "Directory for output files")
      ->envname("ZIPFKIT_OUT_DIR")
      ->capture_default_str();
  app.set_config("--config", "", "Defaults from a JSON or key = value file");
  app.config_formatter(std::make_shared<cli::ConfigFile>(active_subcommand(argc, argv),
                                                            std::vector<std::string>{"out-dir"}));

  cli::add_analyze(app, ctx);
  cli::add_simulate(app, ctx);
  cli::add_compare(app, ctx);
  cli::add_growth(app, ctx);
  cli::add_trend(app, ctx);
  cli::add_test(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "zipfkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zipfkit: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
