// Command-line front end for the attractive-point toolkit.
//
//   attract run <config>            run the checks listed in the config
//   attract check <name> <config>   run one named check
//   attract list-catalog [--machine]
//
// Exit codes: 0 all checks passed, 1 a check failed or came back ambiguous,
// 2 invalid configuration, 3 could not write artifacts.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "attract/catalog.hpp"
#include "attract/experiment.hpp"

namespace {

std::filesystem::path resolve_output_root(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("ATTRACT_OUTPUT_ROOT"); env && *env) return env;
  return ".";
}

int run_and_report(const std::string& config_path,
                   const std::vector<std::string>& check_names,
                   const std::filesystem::path& output_root) {
  try {
    const auto config = attract::Config::parse_file(config_path);
    const auto result = attract::run_experiment(config, check_names, output_root);
    std::cout << result.report_text;
    std::cout << "report: " << result.report_path.string() << "\n";
    if (!result.trace_path.empty()) {
      std::cout << "trace:  " << result.trace_path.string() << "\n";
    }
    std::cout << "approx: " << result.approx_path.string() << "\n";
    return result.exit_code;
  } catch (const attract::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for attractive points of set mappings"};
  app.require_subcommand(1);

  std::string config_path;
  std::string check_name;
  std::string out_flag;
  bool machine = false;

  auto* run = app.add_subcommand("run", "Run the checks requested by a config file");
  run->add_option("config", config_path, "key=value config file")->required();
  run->add_option("--out", out_flag,
                  "output root (default: $ATTRACT_OUTPUT_ROOT, then .)");

  auto* check = app.add_subcommand("check", "Run a single named check");
  check->add_option("name", check_name,
                    "one of: theorem_3_1, lemma_2_3, lemma_2_4, extension, "
                    "lemma_4_1, corollary_4_1")
      ->required();
  check->add_option("config", config_path, "key=value config file")->required();
  check->add_option("--out", out_flag,
                    "output root (default: $ATTRACT_OUTPUT_ROOT, then .)");

  auto* list = app.add_subcommand("list-catalog", "List the built-in mappings");
  list->add_flag("--machine", machine, "one tab-separated record per line");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& entry : attract::catalog_entries()) {
      if (machine) {
        std::cout << entry.id << '\t' << entry.params_help << '\t' << entry.fixed_desc
                  << '\t' << entry.attractive_desc << '\n';
      } else {
        std::cout << entry.id << "\n  params:     " << entry.params_help
                  << "\n  fixed:      " << entry.fixed_desc
                  << "\n  attractive: " << entry.attractive_desc << "\n";
      }
    }
    return 0;
  }

  const auto output_root = resolve_output_root(out_flag);
  std::vector<std::string> names;
  if (check->parsed()) names.push_back(check_name);
  return run_and_report(config_path, names, output_root);
}
