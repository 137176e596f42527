#include "shiftlab/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace shiftlab {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }
  /// Uniform in the disk of radius rmax.
  Complex point(double rmax) { return std::sqrt(uniform(0.0, 1.0)) * rmax * phase(); }
  Complex annulus(double rmin, double rmax) { return uniform(rmin, rmax) * phase(); }

  BlaschkeSpec blaschke(int min_degree, int max_degree, double rmax) {
    BlaschkeSpec b;
    const int degree = integer(min_degree, max_degree);
    for (int i = 0; i < degree; ++i) b.zeros.push_back(point(rmax));
    b.unimodular_constant = phase();
    return b;
  }

  OuterSpec outer(double scale_lo, double scale_hi, int max_factors, double rmax) {
    OuterSpec s;
    s.scale = uniform(scale_lo, scale_hi);
    const int count = integer(0, max_factors);
    for (int i = 0; i < count; ++i) s.factors.push_back(point(rmax));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

json CorpusItem::labels() const {
  json out{{"id", id}, {"type", type}, {"splits", splits}, {"expected_defect", expected_defect}, {"reducing", reducing}};
  if (diagonal_theta)
    out["theta_diag"] = {{"theta", shiftlab::to_json(diagonal_theta->first)},
                         {"theta_prime", shiftlab::to_json(diagonal_theta->second)}};
  return out;
}

json CorpusItem::to_json() const {
  json out = shiftlab::to_json(spec);
  out["labels"] = labels();
  return out;
}

std::vector<CorpusItem> generate_corpus(std::uint64_t seed) {
  Draw draw(seed);
  std::vector<CorpusItem> items;
  auto add = [&](std::string type, bool splits, int defect, ConstructionSpec spec) -> CorpusItem& {
    char id[64];
    std::snprintf(id, sizeof id, "%03zu-%s", items.size(), type.c_str());
    items.push_back({id, std::move(type), splits, defect, false, std::move(spec), std::nullopt});
    return items.back();
  };

  add("case-1", true, 1, {SplittingSpec{ZeroPart{}, FullPart{}}}).reducing = true;
  for (int i = 0; i < 6; ++i) add("case-2.1", true, 1, {SplittingSpec{draw.blaschke(1, 3, 0.7), FullPart{}}});
  for (int i = 0; i < 6; ++i) add("case-2.2", true, 1, {SplittingSpec{ZeroPart{}, draw.blaschke(1, 4, 0.7)}});
  for (int i = 0; i < 6; ++i) {
    const BlaschkeSpec theta_prime = draw.blaschke(1, 3, 0.7);
    const BlaschkeSpec theta = draw.blaschke(1, 3, 0.7);
    add("case-3.1-menu", true, 1, {SplittingSpec{theta_prime, theta}}).diagonal_theta = std::pair{theta, theta_prime};
  }
  // Constant first column: Y = θ'H² ⊕ {0}, no defect.
  for (int i = 0; i < 5; ++i) {
    ThetaProvenance p;
    p.g1_spec = draw.outer(0.2, 0.9, 0, 0.0);
    p.alpha1 = draw.blaschke(0, 0, 0.0);
    p.alpha2 = draw.blaschke(1, 3, 0.6);
    p.lambda.value = draw.phase();
    add("constant-theta", true, 0, {p});
  }
  // Proportional first column through a common nonconstant inner factor.
  for (int i = 0; i < 6; ++i) {
    ThetaProvenance p;
    p.g1_spec = draw.outer(0.2, 0.9, 0, 0.0);
    p.alpha1 = draw.blaschke(1, 3, 0.6);
    p.alpha2 = draw.blaschke(0, 2, 0.6);
    p.lambda.value = draw.phase();
    add("case-3.1", true, 1, {p});
  }
  // Generic draws: nonconstant g1 makes θ11/θ12 nonconstant.
  for (int i = 0; i < 16; ++i) {
    ThetaProvenance p;
    p.g1_spec = draw.outer(0.3, 0.85, 2, 0.6);
    if (p.g1_spec->factors.empty()) p.g1_spec->factors.push_back(draw.annulus(0.2, 0.6));
    p.alpha1 = draw.blaschke(0, 2, 0.5);
    p.alpha2 = draw.blaschke(0, 2, 0.5);
    p.beta1 = draw.blaschke(0, 2, 0.5);
    p.beta2 = draw.blaschke(0, 2, 0.5);
    p.lambda.value = draw.phase();
    add("case-3.2", false, 1, {p});
  }
  for (int i = 0; i < 8; ++i) {
    const Complex a = draw.point(0.6);
    const Complex alpha = draw.annulus(0.2, 0.85);
    add("example", false, 1, {ExampleParams{a, alpha}});
  }
  return items;
}

ThetaMatrix diagonal_theta_matrix(const BlaschkeSpec& theta, const BlaschkeSpec& theta_prime, int order,
                                  const Numerics& numerics) {
  return ThetaMatrix{blaschke_series(theta, order, numerics), FourierSeries(order), FourierSeries(order),
                     blaschke_series(theta_prime, order, numerics), std::nullopt};
}

}  // namespace shiftlab
