#include "shiftlab/config.hpp"

#include <array>

namespace shiftlab {
namespace {

struct Field {
  const char* name;
  double Numerics::*member;
};

constexpr std::array kFields = {
    Field{"tail_budget", &Numerics::tail_budget},
    Field{"blaschke_margin", &Numerics::blaschke_margin},
    Field{"unimodular_tol", &Numerics::unimodular_tol},
    Field{"parseval_tol", &Numerics::parseval_tol},
    Field{"modulus_floor", &Numerics::modulus_floor},
    Field{"extremality_floor", &Numerics::extremality_floor},
    Field{"outer_modulus_tol", &Numerics::outer_modulus_tol},
    Field{"zero_merge_tol", &Numerics::zero_merge_tol},
    Field{"zero_cluster_tol", &Numerics::zero_cluster_tol},
    Field{"rank_tol", &Numerics::rank_tol},
    Field{"membership_tol", &Numerics::membership_tol},
    Field{"invariance_tol", &Numerics::invariance_tol},
    Field{"defect_tol", &Numerics::defect_tol},
    Field{"edge_fraction", &Numerics::edge_fraction},
    Field{"edge_mass", &Numerics::edge_mass},
    Field{"unitarity_tol", &Numerics::unitarity_tol},
    Field{"omega_unitary_tol", &Numerics::omega_unitary_tol},
    Field{"route_gap_tol", &Numerics::route_gap_tol},
    Field{"example_gap_tol", &Numerics::example_gap_tol},
    Field{"beta_tol", &Numerics::beta_tol},
    Field{"equiv_same_tol", &Numerics::equiv_same_tol},
    Field{"equiv_distinct_gap", &Numerics::equiv_distinct_gap},
    Field{"omega_far", &Numerics::omega_far},
    Field{"reducing_margin", &Numerics::reducing_margin},
};

}  // namespace

const Numerics& default_numerics() {
  static const Numerics defaults{};
  return defaults;
}

bool set_tolerance(Numerics& numerics, std::string_view name, double value) {
  for (const auto& field : kFields) {
    if (name == field.name) {
      numerics.*field.member = value;
      return true;
    }
  }
  return false;
}

std::vector<std::pair<std::string, double>> tolerance_table(const Numerics& numerics) {
  std::vector<std::pair<std::string, double>> table;
  table.reserve(kFields.size());
  for (const auto& field : kFields) table.emplace_back(field.name, numerics.*field.member);
  return table;
}

}  // namespace shiftlab
