// Command-line front end: batch checks on skew matrices and great-circle germs.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gcfib/cli.hpp"

int main(int argc, char** argv) {
  using gcfib::cli::CliConfig;
  using gcfib::cli::OutputFormat;

  CLI::App app{"Great-circle fibration germs: local fibration and contact checks"};
  app.require_subcommand(1);

  CliConfig config;
  std::string input;
  int n = 0;
  double radius = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format (default text)")
        ->check(CLI::IsMember({"text", "json"}).description(""))
        ->type_name("text|json");
  };
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
  };

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian and determinant of a skew matrix file");
  add_input(pf, "Matrix file");
  add_format(pf);

  auto* eigs = app.add_subcommand("eigs", "Eigenvalues and real-eigenvalue test of a matrix file");
  add_input(eigs, "Matrix file");
  add_format(eigs);

  auto* hopf = app.add_subcommand("hopf", "Hopf germ on S^{2n+1}: write it and report");
  hopf->add_option("--n", n, "Half the base dimension (n >= 1)")->required();
  hopf->add_option("--out", out_path, "Write the germ file here");
  add_format(hopf);

  auto* counter = app.add_subcommand("counterexample", "Non-contact fibration germ on S^{2n+1}, n >= 2");
  counter->add_option("--n", n, "Half the base dimension (n >= 2)")->required();
  counter->add_option("--out", out_path, "Write the germ file here");
  add_format(counter);

  auto* analyze = app.add_subcommand("analyze", "Fibration and contact verdicts for a germ file");
  add_input(analyze, "Germ file");
  add_format(analyze);

  auto* tube = app.add_subcommand("tube-sample", "Minimum distance between sampled circles of a germ");
  add_input(tube, "Germ file");
  tube->add_option("--radius", radius, "Sampling radius (<= domain_radius, default min(0.05, radius))");
  tube->add_option("--samples", samples, "Number of sampled circle pairs (default 200)");
  tube->add_option("--seed", seed, "RNG seed (default 0)");
  add_format(tube);

  auto* validate = app.add_subcommand("validate", "Run the invariant suite on a germ file");
  add_input(validate, "Germ file");
  add_format(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gcfib::cli::kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (!input.empty()) config.input_path = input;
  if (chosen->get_option_no_throw("--n") && chosen->count("--n") > 0) config.n = n;
  if (chosen->get_option_no_throw("--radius") && chosen->count("--radius") > 0) config.radius = radius;
  if (chosen->get_option_no_throw("--samples") && chosen->count("--samples") > 0) config.samples = samples;
  if (chosen->get_option_no_throw("--seed") && chosen->count("--seed") > 0) config.seed = seed;
  if (!out_path.empty()) config.out_path = out_path;
  config.format = format == "json" ? OutputFormat::kJsonLines : OutputFormat::kText;

  return gcfib::cli::run(config, std::cout, std::cerr);
}
