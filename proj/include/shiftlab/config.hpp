#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiftlab {

/// Default truncation order: H² vectors live on indices [0, N], H²₋ on [-N, -1].
inline constexpr int kDefaultOrder = 128;

/// Every numerical threshold used by the library, in one place.
///
/// Functions take a `const Numerics&` (defaulted to `default_numerics()`) so
/// that a CLI `--tol name=value` override or a test sweep reaches every
/// decision point without global state.
struct Numerics {
  // Truncation
  double tail_budget = 1e-9;        ///< max discarded l2 mass / input norm
  double blaschke_margin = 1e-6;    ///< zeros must satisfy |a| < 1 - margin
  double unimodular_tol = 1e-14;    ///< | |c| - 1 | for unimodular constants
  double parseval_tol = 1e-12;

  // Inner/outer
  double modulus_floor = 1e-6;
  double extremality_floor = 1e-6;
  double outer_modulus_tol = 1e-8;  ///< sup | |g| - w | on the grid
  double zero_merge_tol = 1e-9;
  double zero_cluster_tol = 1e-5;   ///< eigenvalue clusters averaged on extraction

  // Subspaces
  double rank_tol = 1e-10;          ///< relative singular-value cut
  double membership_tol = 1e-10;    ///< distance to K_theta for C_theta input
  double invariance_tol = 1e-7;
  double defect_tol = 1e-6;
  double edge_fraction = 0.1;       ///< top fraction of H2 indices treated as edge
  double edge_mass = 0.5;           ///< eigenvector mass that marks an edge artifact

  // Theta matrices
  double unitarity_tol = 1e-8;
  double omega_unitary_tol = 1e-12;
  double route_gap_tol = 1e-9;      ///< two constructions of the same Y
  double example_gap_tol = 1e-8;    ///< explicit rank-one form vs general form
  double beta_tol = 1e-12;

  // Equivalence verdicts
  double equiv_same_tol = 1e-9;
  double equiv_distinct_gap = 0.1;
  double omega_far = 0.05;

  // Reducing subspaces
  double reducing_margin = 1e-2;    ///< complement residual required for "not reducing"

  /// Grid size override; 0 selects the default for the truncation order.
  int grid_size = 0;
};

const Numerics& default_numerics();

/// Set a tolerance by its field name. Returns false for unknown names.
bool set_tolerance(Numerics& numerics, std::string_view name, double value);

/// (name, value) pairs for every tolerance, in declaration order.
std::vector<std::pair<std::string, double>> tolerance_table(const Numerics& numerics);

}  // namespace shiftlab
