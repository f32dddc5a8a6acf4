#include "config_file.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zipfkit::cli {
namespace {

std::string key_name(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw CLI::ConversionError("config values must be strings, numbers, booleans or arrays of those");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

std::string ConfigFile::to_config(const CLI::App*, bool, bool, std::string) const { return {}; }

std::vector<CLI::ConfigItem> ConfigFile::from_config(std::istream& input) const {
  const std::string text(std::istreambuf_iterator<char>(input), {});
  std::vector<CLI::ConfigItem> items;
  auto add = [&](std::vector<std::string> parents, const std::string& key,
                 std::vector<std::string> inputs) {
    const bool global = std::find(global_.begin(), global_.end(), key_name(key)) != global_.end();
    if (parents.empty() && !global && !active_.empty()) parents.push_back(active_);
    CLI::ConfigItem item;
    item.parents = std::move(parents);
    item.name = key_name(key);
    item.inputs = std::move(inputs);
    items.push_back(std::move(item));
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json root;
    try {
      root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
    }
    for (const auto& [key, value] : root.items()) {
      if (value.is_object()) {
        if (key != active_) continue;
        for (const auto& [k, v] : value.items()) {
          std::vector<std::string> inputs;
          if (v.is_array())
            for (const auto& e : v) inputs.push_back(scalar_text(e));
          else
            inputs.push_back(scalar_text(v));
          add({key}, k, std::move(inputs));
        }
        continue;
      }
      std::vector<std::string> inputs;
      if (value.is_array())
        for (const auto& e : value) inputs.push_back(scalar_text(e));
      else
        inputs.push_back(scalar_text(value));
      add({}, key, std::move(inputs));
    }
    return items;
  }

  std::istringstream lines(text);
  std::string line;
  std::string section;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ConversionError("config line " + std::to_string(number) + " is not key = value");
    if (!section.empty() && section != active_) continue;
    std::vector<std::string> parents;
    if (!section.empty()) parents.push_back(section);
    add(std::move(parents), trim(line.substr(0, eq)), {unquote(trim(line.substr(eq + 1)))});
  }
  return items;
}

}  // namespace zipfkit::cli
