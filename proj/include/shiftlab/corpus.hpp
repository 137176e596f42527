#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/io.hpp"

namespace shiftlab {

/// A labeled construction input with its ground truth.
struct CorpusItem {
  std::string id;
  std::string type;     ///< "case-1", "case-2.1", "case-2.2", "case-3.1-menu", "constant-theta", "case-3.1", "case-3.2", "example"
  bool splits = true;
  int expected_defect = 1;
  bool reducing = false;
  ConstructionSpec spec;
  /// (θ, θ') of the diagonal matrix Θ = diag(θ, conj θ') producing a
  /// splitting item, when there is one.
  std::optional<std::pair<BlaschkeSpec, BlaschkeSpec>> diagonal_theta;

  json labels() const;
  /// Spec and labels in one object, the on-disk corpus format.
  json to_json() const;
};

/// Deterministic corpus of 54 items covering every subspace type.
std::vector<CorpusItem> generate_corpus(std::uint64_t seed);

/// Θ = diag(θ, conj θ'), i.e. θ11 = θ, θ22 = θ', θ12 = θ21 = 0.
ThetaMatrix diagonal_theta_matrix(const BlaschkeSpec& theta, const BlaschkeSpec& theta_prime, int order,
                                  const Numerics& numerics = default_numerics());

}  // namespace shiftlab
