#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gcfib::cli {

/// Process exit codes, stable across releases.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   // validate: at least one named check failed
  kUsage = 2,         // bad flags or missing arguments
  kParseError = 3,    // input file unreadable or malformed
  kInvalidInput = 4,  // parsed, but not a valid skew matrix / germ / domain
  kUnsupported = 5,   // request refused (counterexample with n < 2)
};

enum class OutputFormat { kText, kJsonLines };

struct CliConfig {
  std::string subcommand;  // pfaffian, eigs, hopf, counterexample, analyze, tube-sample, validate
  std::optional<std::string> input_path;
  std::optional<int> n;
  std::optional<double> radius;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::kText;
};

/// Runs one subcommand, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

int run_pfaffian(const CliConfig& config, std::ostream& out);
int run_eigs(const CliConfig& config, std::ostream& out);
int run_hopf(const CliConfig& config, std::ostream& out);
int run_counterexample(const CliConfig& config, std::ostream& out);
int run_analyze(const CliConfig& config, std::ostream& out);
int run_tube_sample(const CliConfig& config, std::ostream& out);
int run_validate(const CliConfig& config, std::ostream& out);

}  // namespace gcfib::cli
