#pragma once

#include <filesystem>
#include <variant>

#include "json.hpp"
#include "shiftlab/classification.hpp"

namespace shiftlab {

using nlohmann::json;

// Every reader throws ParseError on malformed or ill-typed input; the
// mathematical validity of the data is left to the constructors.

json to_json(Complex c);
json to_json(const FourierSeries& f);
json to_json(const BlaschkeSpec& b);
json to_json(const OuterSpec& s);
json to_json(const OuterFunction& g);
json to_json(const ThetaProvenance& p);
json to_json(const ThetaMatrix& t);
json to_json(const Subspace& y);

Complex complex_from_json(const json& j);
FourierSeries fourier_from_json(const json& j);
BlaschkeSpec blaschke_from_json(const json& j);
OuterSpec outer_spec_from_json(const json& j);
OuterFunction outer_from_json(const json& j);
ThetaProvenance provenance_from_json(const json& j);
ThetaMatrix theta_from_json(const json& j);
Subspace subspace_from_json(const json& j);

/// Data of the explicit rank-one-perturbation family.
struct ExampleParams {
  Complex a;
  Complex alpha;
};

/// Any of the four input forms accepted by `construct`:
///   {"x": ..., "xprime": ...}       splitting data
///   {"theta": ThetaMatrix}          explicit matrix
///   {"parametrization": {...}}      g1, alpha1, alpha2, beta1, beta2, lambda
///   {"example": {"a": .., "alpha": ..}}
struct ConstructionSpec {
  std::variant<SplittingSpec, ThetaMatrix, ThetaProvenance, ExampleParams> data;
};

ConstructionSpec spec_from_json(const json& j);
json to_json(const ConstructionSpec& spec);

/// Parses a file; unreadable files and invalid JSON raise ParseError.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace shiftlab
