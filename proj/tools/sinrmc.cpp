// Command-line front end: subcommands map to harness experiments, every
// configuration key is also a flag, and flags override --config files.
#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sinrmc/error.hpp"
#include "sinrmc/harness.hpp"

namespace {

using sinrmc::harness::RunConfig;

std::map<std::string, std::string> default_values() {
  std::map<std::string, std::string> out;
  const std::string text = sinrmc::harness::to_config_text(RunConfig{});
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  out["seed"] = "42 (or $SINRMC_SEED)";
  return out;
}

std::string flag_names(const std::string& key) {
  std::string dashed = key;
  std::replace(dashed.begin(), dashed.end(), '_', '-');
  return dashed == key ? "--" + key : "--" + dashed + ",--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo estimators for rare connectivity events in SINR networks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it")
      ->check(CLI::ExistingFile);

  std::vector<std::pair<std::string, std::string>> flags;
  const auto defaults = default_values();
  for (const std::string& key : sinrmc::harness::config_keys()) {
    if (key == "experiment") continue;
    app.add_option_function<std::string>(
           flag_names(key), [&flags, key](const std::string& v) { flags.emplace_back(key, v); },
           "default: " + defaults.at(key))
        ->type_name("VALUE");
  }
  std::string pilot_runs;
  app.add_option("--cross-entropy-pilot", pilot_runs,
                 "pilot replicates; sets tilt = ce")->type_name("N");

  std::string experiment;
  for (const char* name : {"avg-count", "isolation", "opt-pair", "lambda-curve", "validate"}) {
    app.add_subcommand(name, std::string("run the ") + name + " experiment")
        ->callback([&experiment, name] { experiment = name; });
  }
  std::string preset_name;
  auto* preset_cmd = app.add_subcommand("preset", "run a named preset experiment");
  preset_cmd->add_option("name", preset_name, "table1-basic | table1-ldp | table1-ce | "
                                              "table2-basic | table2-is | figure2")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig config = preset_name.empty() ? RunConfig{} : sinrmc::harness::preset(preset_name);
    if (!config_path.empty()) config = sinrmc::harness::parse_config_file(config_path, config);
    if (!experiment.empty()) config.set("experiment", experiment, 0);
    for (const auto& [key, value] : flags) config.set(key, value, 0);
    if (!pilot_runs.empty()) {
      config.set("pilot", pilot_runs, 0);
      config.set("tilt", "ce", 0);
    }
    sinrmc::harness::apply_environment(config);
    return sinrmc::harness::run(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
