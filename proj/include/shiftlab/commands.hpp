#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include "shiftlab/corpus.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/report.hpp"

namespace shiftlab {

struct RunConfig {
  int order = kDefaultOrder;
  int gen_degree = -1;  ///< -1 selects N/4
  Numerics numerics;
  std::uint64_t seed = 1;
  std::filesystem::path out;
  bool specs_only = false;  ///< corpus: write the labeled specs only, no construction or checks

  int generator_degree() const { return gen_degree < 0 ? order / 4 : gen_degree; }
  /// Throws ParseError unless N >= 16 and 0 <= M <= N/2.
  void validate() const;
};

/// A constructed subspace together with the data that produced it.
struct BuildResult {
  Subspace y;
  std::optional<ThetaMatrix> theta;
  std::optional<ExampleParams> example;
  std::optional<Complex> beta;
  std::optional<int> expected_defect;  ///< derived from the construction data
};

/// Builds the subspace described by `spec` at the configured order. Labels
/// (as written by the corpus) may attach a diagonal Θ to splitting data.
BuildResult build(const ConstructionSpec& spec, const RunConfig& config, const json& labels = json::object());

struct Expectations {
  std::optional<bool> splits;
  std::optional<int> defect;
  std::optional<bool> reducing;
};

Expectations expectations_from_labels(const json& labels);

/// Every check applicable to `y`; the construction data, when given, adds the
/// Θ-level checks (unitarity, cross-construction gaps, dichotomy).
Report verify(const Subspace& y, const BuildResult* built, const Expectations& expect, const RunConfig& config);

int cmd_construct(const std::filesystem::path& spec_file, const RunConfig& config, std::ostream& log);
int cmd_verify(const std::filesystem::path& input, const RunConfig& config, std::ostream& log);
int cmd_corpus(const RunConfig& config, std::ostream& log);
int cmd_equiv(const std::filesystem::path& first, const std::filesystem::path& second, const RunConfig& config,
              std::ostream& log);

/// Runs a command, mapping ParseError to exit code 2 and DomainError to 3.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace shiftlab
