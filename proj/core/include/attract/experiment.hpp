#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace attract {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key=value configuration. '#' starts a comment, blank lines are
/// skipped, keys and values are trimmed. Unknown keys are rejected by
/// run_experiment, not by the parser.
struct Config {
  std::map<std::string, std::string> values;

  static Config parse_file(const std::filesystem::path& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_number(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_vector(const std::string& key) const;

  /// Canonical "key=value\n" rendering with sorted keys; the basis of the
  /// artifact-name hash, so runs differing only in key order share names.
  std::string canonical() const;
};

std::uint64_t fnv1a64(std::string_view text);

enum class CheckStatus { Pass, Fail, Ambiguous };

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct ExperimentResult {
  std::vector<CheckOutcome> checks;
  std::string report_text;
  /// 0 when every requested check passed, 1 otherwise.
  int exit_code = 1;
  std::filesystem::path report_path;
  std::filesystem::path trace_path;
  std::filesystem::path approx_path;
};

const std::vector<std::string>& known_check_names();

/// Runs the configured mapping through the requested checks and writes
/// report, trace CSV, and approximation table under the output directory.
/// `check_names` empty means "the checks key from the config, defaulting to
/// theorem_3_1". Configuration problems throw ConfigError; artifact write
/// failures throw std::ios_base::failure.
ExperimentResult run_experiment(const Config& config,
                                const std::vector<std::string>& check_names,
                                const std::filesystem::path& output_root);

}  // namespace attract
