#pragma once

#include <string>
#include <vector>

#include "CLI11.hpp"

namespace zipfkit::cli {

// Reads option defaults from a JSON object or from `key = value` lines.
// Top-level keys naming a global option (such as out_dir) apply to the
// program; other top-level keys apply to the subcommand named on the command line; a
// nested object (JSON) or a [section] (key=value) targets a subcommand
// explicitly. Underscores in keys are read as dashes. Values given on the
// command line take precedence.
class ConfigFile : public CLI::Config {
 public:
  ConfigFile(std::string active_subcommand, std::vector<std::string> global_keys)
      : active_(std::move(active_subcommand)), global_(std::move(global_keys)) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;

 private:
  std::string active_;
  std::vector<std::string> global_;  // dashed names of top-level options
};

}  // namespace zipfkit::cli
