// Command-line front end: construct, verify, corpus, equiv.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shiftlab/commands.hpp"
#include "shiftlab/errors.hpp"

int main(int argc, char** argv) {
  using namespace shiftlab;

  CLI::App app{"Invariant subspaces of S ⊕ S⋆ at finite truncation"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.numerics = default_numerics();
  std::vector<std::string> tolerances;
  std::string out;

  app.add_option("--n-trunc", config.order, "Truncation order N")->capture_default_str();
  app.add_option("--gen-degree", config.gen_degree, "Generator degree M (default N/4)");
  app.add_option("--grid", config.numerics.grid_size, "Grid size override (power of two)");
  app.add_option("--seed", config.seed, "Corpus seed")->capture_default_str();
  app.add_option("--tol", tolerances, "Tolerance override name=value (repeatable)");
  app.add_option("--out", out, "Output file or directory");

  std::string spec_file, input_file, first, second;
  auto* construct = app.add_subcommand("construct", "Build a subspace from a JSON spec");
  construct->add_option("spec", spec_file, "Spec file")->required();
  auto* verify = app.add_subcommand("verify", "Run every applicable check on a spec or subspace file");
  verify->add_option("input", input_file, "Spec or subspace file")->required();
  auto* corpus = app.add_subcommand("corpus", "Generate and verify the labeled corpus");
  corpus->add_flag("--specs-only", config.specs_only, "Write the labeled specs only; skip construction and checks");
  auto* equiv = app.add_subcommand("equiv", "Compare the subspaces of two Θ matrices");
  equiv->add_option("first", first, "First Θ spec")->required();
  equiv->add_option("second", second, "Second Θ spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return run_guarded(
      [&] {
        for (const std::string& t : tolerances) {
          const auto eq = t.find('=');
          if (eq == std::string::npos) throw ParseError("--tol expects name=value, got " + t);
          double value = 0.0;
          try {
            value = std::stod(t.substr(eq + 1));
          } catch (const std::exception&) {
            throw ParseError("--tol value is not a number: " + t);
          }
          if (!set_tolerance(config.numerics, t.substr(0, eq), value))
            throw ParseError("unknown tolerance " + t.substr(0, eq));
        }
        config.out = out;
        if (*construct) return cmd_construct(spec_file, config, std::cout);
        if (*verify) return cmd_verify(input_file, config, std::cout);
        if (*corpus) return cmd_corpus(config, std::cout);
        return cmd_equiv(first, second, config, std::cout);
      },
      std::cerr);
}
