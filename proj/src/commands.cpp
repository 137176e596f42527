#include "shiftlab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

#include "shiftlab/errors.hpp"
#include "shiftlab/parallel.hpp"

namespace shiftlab {
namespace {

constexpr const char* kInvariance = "invariant subspaces of S ⊕ S⋆";
constexpr const char* kDefect = "defect dimension of T_Y";
constexpr const char* kSplitting = "splitting subspaces X ⊕ X′";
constexpr const char* kDichotomy = "proportional vs nonproportional first column of Θ";
constexpr const char* kReducing = "only reducing subspaces: H² ⊕ {0} and {0} ⊕ H²₋";
constexpr const char* kUnitarity = "Θ unitary on the circle";
constexpr const char* kCompact = "compact form (P₋ ⊕ P₊)Θ*(H² ⊕ H²)";
constexpr const char* kProportional = "proportional column gives θ′H² ⊕ conj(θ)K_θ";
constexpr const char* kExample = "rank-one family u ⊕ β u(a) z̄/(1 − a z̄)";
constexpr const char* kStability = "independence of the generator degree";
constexpr const char* kEquivalence = "same subspace iff Θ′ = ΩΘ";

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

bool constant_series(const FourierSeries& f, const Numerics& numerics) {
  return f.norm_outside(0, 0) <= numerics.tail_budget * std::max(1.0, f.norm());
}

int defect_from_theta(const ThetaMatrix& t, const Numerics& numerics) {
  return constant_series(t.theta11, numerics) && constant_series(t.theta12, numerics) ? 0 : 1;
}

// The H² vector u = 1 lifts to 1 ⊕ β k in the rank-one family, so β is the
// z^{-1} coefficient of the element of Y whose H² part is 1.
ThetaMatrix theta_of(const ConstructionSpec& spec, const json& labels, const RunConfig& config) {
  const BuildResult b = build(spec, config, labels);
  if (!b.theta) throw ParseError("input does not define a Θ matrix");
  return *b.theta;
}

void write_or_print(const json& j, const RunConfig& config, std::ostream& log) {
  if (config.out.empty())
    log << j.dump(2) << '\n';
  else
    write_json_file(config.out, j);
}

}  // namespace

void RunConfig::validate() const {
  if (order < 16) throw ParseError("--n-trunc must be at least 16");
  const int m = generator_degree();
  if (m < 0 || m > order / 2) throw ParseError("--gen-degree must lie in [0, N/2]");
  if (numerics.grid_size > 0 && numerics.grid_size < 2 * (2 * order + 1))
    throw ParseError("--grid must be at least 2(2N+1)");
}

BuildResult build(const ConstructionSpec& spec, const RunConfig& config, const json& labels) {
  const int order = config.order;
  const int m = config.generator_degree();
  const Numerics& numerics = config.numerics;
  BuildResult out;
  if (const auto* s = std::get_if<SplittingSpec>(&spec.data)) {
    out.y = construct_splitting(*s, order, numerics);
    const auto* model = std::get_if<BlaschkeSpec>(&s->xprime_choice);
    out.expected_defect = (model && model->degree() == 0) ? 0 : 1;
    if (labels.contains("theta_diag")) {
      const json& d = labels["theta_diag"];
      out.theta = diagonal_theta_matrix(blaschke_from_json(d.at("theta")), blaschke_from_json(d.at("theta_prime")),
                                        order, numerics);
    }
  } else if (const auto* t = std::get_if<ThetaMatrix>(&spec.data)) {
    out.theta = t->with_order(order);
    out.y = construct_from_theta(*out.theta, m, numerics);
    out.expected_defect = defect_from_theta(*out.theta, numerics);
  } else if (const auto* p = std::get_if<ThetaProvenance>(&spec.data)) {
    out.theta = parametrize_theta(*p, order, numerics);
    out.y = construct_from_theta(*out.theta, m, numerics);
    out.expected_defect = defect_from_theta(*out.theta, numerics);
  } else {
    const auto& e = std::get<ExampleParams>(spec.data);
    ExampleSubspace ex = example_subspace(e.a, e.alpha, order, numerics);
    out.y = std::move(ex.y_explicit);
    out.theta = std::move(ex.theta);
    out.example = e;
    out.beta = ex.beta;
    out.expected_defect = 1;
  }
  return out;
}

Expectations expectations_from_labels(const json& labels) {
  Expectations e;
  if (!labels.is_object()) return e;
  if (labels.contains("splits")) e.splits = labels["splits"].get<bool>();
  if (labels.contains("expected_defect")) e.defect = labels["expected_defect"].get<int>();
  if (labels.contains("reducing")) e.reducing = labels["reducing"].get<bool>();
  return e;
}

namespace {

// gap(y, block) < tol without forming the block: the dimensions must agree
// and y must have almost no mass off the block.
bool near_block(const Subspace& y, bool h2, double tol) {
  const int order = y.ambient_N;
  if (y.dim() != (h2 ? order + 1 : order)) return false;
  const Eigen::MatrixXcd off = h2 ? y.basis.bottomRows(order) : y.basis.topRows(order + 1);
  return off.norm() < tol || gap(y, h2 ? h2_block(order) : h2minus_block(order)) < tol;
}

}  // namespace

Report verify(const Subspace& y, const BuildResult* built, const Expectations& expect, const RunConfig& config) {
  const Numerics& numerics = config.numerics;
  const int order = y.ambient_N;
  const AmbientOperator op(order);
  const std::string id = digest({{"meta", y.meta}, {"N", order}, {"dim", y.dim()}});
  Report report;

  const double residual = invariance_residual(y, op);
  report.add_upper("invariance_residual", kInvariance, id, residual, numerics.invariance_tol,
                   "dim " + std::to_string(y.dim()));
  const bool invariant = residual <= numerics.invariance_tol;

  std::optional<int> expected_defect = expect.defect;
  if (!expected_defect && built) expected_defect = built->expected_defect;
  if (invariant) {
    const DefectReport d = defect_dimension(y, op, numerics);
    const std::string detail = "dim " + std::to_string(d.dimension) + ", " + std::to_string(d.spurious) +
                               " edge eigenvalue(s) excluded (eigenvector mass > " + fmt(numerics.edge_mass) +
                               " on the top " + fmt(numerics.edge_fraction) + " of H² indices)";
    report.add_upper("defect_dimension_bound", kDefect, id, d.dimension, 1.0, detail);
    if (expected_defect)
      report.add_flag("defect_dimension", kDefect, id, d.dimension == *expected_defect,
                      detail + ", expected " + std::to_string(*expected_defect));
  } else if (expected_defect) {
    report.add_flag("defect_dimension", kDefect, id, false, "not computed: subspace is not invariant");
  }

  const SplittingVerdict split = splitting_test(y, numerics);
  const std::string split_detail = std::string(split.splits ? "splits" : "does not split") + " (" +
                                   std::to_string(split.x_part.dim()) + " + " +
                                   std::to_string(split.xprime_part.dim()) + " vs " + std::to_string(y.dim()) + ")";
  if (split.splits)
    report.add_upper("splitting_decomposition", kSplitting, id,
                     gap(y, direct_sum(split.x_part, split.xprime_part, numerics)), numerics.route_gap_tol,
                     split_detail);
  if (expect.splits)
    report.add_flag("splitting_label", kSplitting, id, split.splits == *expect.splits, split_detail);

  const bool trivial = y.dim() == 0 || y.dim() == ambient_dim(order);
  const bool block = near_block(y, true, numerics.equiv_same_tol) || near_block(y, false, numerics.equiv_same_tol);
  const ReducingVerdict red = reducing_test(y, op, numerics);
  if (trivial || block)
    report.add_upper("reducing", kReducing, id, std::max(red.residual_y, red.residual_complement),
                     numerics.invariance_tol, trivial ? "trivial subspace" : "coordinate block");
  else
    report.add_lower("not_reducing", kReducing, id, red.residual_complement, numerics.reducing_margin,
                     "complement residual");

  if (built && built->theta) {
    const ThetaMatrix& t = *built->theta;
    const double unitarity = theta_unitarity_defect(t, numerics);
    report.add_upper("theta_unitarity", kUnitarity, id, unitarity, numerics.unitarity_tol);
    const ProportionalityVerdict prop = proportionality_test(t, numerics);
    report.add_flag("dichotomy", kDichotomy, id, prop.proportional == split.splits,
                    std::string(prop.proportional ? "proportional" : "nonproportional") + " (sigma ratio " +
                        fmt(prop.singular_ratio) + "), " + split_detail);
    if (unitarity <= numerics.unitarity_tol) {
      const int m = config.generator_degree();
      try {
        const Subspace direct = construct_nonsplitting(t, m, Route::Direct, numerics);
        const Subspace compact = construct_nonsplitting(t, m, Route::Compact, numerics);
        report.add_upper("route_agreement", kCompact, id, gap(direct, compact), numerics.route_gap_tol);
        if (built->example) {
          report.add_upper("example_vs_general", kExample, id, gap(y, direct), numerics.example_gap_tol);
          report.add_upper("example_beta", kExample, id, std::abs(beta_from_subspace(direct) - *built->beta),
                           numerics.beta_tol, "beta " + fmt(std::abs(*built->beta)));
        } else if (prop.proportional) {
          report.add_upper("proportional_splitting_form", kProportional, id, gap(y, direct), numerics.route_gap_tol);
        }
        if (m + 4 <= order) {
          try {
            const Subspace wider = construct_nonsplitting(t, m + 4, Route::Direct, numerics);
            report.add_upper("generator_degree_stability", kStability, id, gap(direct, wider),
                             numerics.example_gap_tol, "M=" + std::to_string(m) + " vs M+4");
          } catch (const DomainError&) {
            // M + 4 may exceed the truncation budget; M itself was fine.
          }
        }
      } catch (const DomainError& e) {
        report.add_flag("nonsplitting_construction", kCompact, id, false, e.what());
      }
    }
  }
  return report;
}

int cmd_construct(const std::filesystem::path& spec_file, const RunConfig& config, std::ostream& log) {
  config.validate();
  const json input = read_json_file(spec_file);
  const ConstructionSpec spec = spec_from_json(input);
  BuildResult b = build(spec, config, input.value("labels", json::object()));
  if (b.beta) b.y.meta["beta"] = to_json(*b.beta);
  b.y.meta["spec"] = to_json(spec);
  if (input.contains("labels")) b.y.meta["labels"] = input["labels"];
  const std::filesystem::path out = config.out.empty() ? std::filesystem::path("subspace.json") : config.out;
  write_json_file(out, to_json(b.y));
  log << "wrote " << out.string() << " (dim " << b.y.dim() << ", N=" << b.y.ambient_N << ")\n";
  return 0;
}

int cmd_verify(const std::filesystem::path& input, const RunConfig& config, std::ostream& log) {
  config.validate();
  const json j = read_json_file(input);
  Report report;
  if (j.is_object() && j.contains("basis")) {
    Subspace y = subspace_from_json(j);
    // Accept any spanning set; checks assume an orthonormal basis.
    y = orthonormalize(y.basis, y.ambient_N, config.numerics, y.meta);
    const json labels = y.meta.is_object() ? y.meta.value("labels", json::object()) : json::object();
    report = verify(y, nullptr, expectations_from_labels(labels), config);
  } else {
    const json labels = j.is_object() ? j.value("labels", json::object()) : json::object();
    const BuildResult b = build(spec_from_json(j), config, labels);
    report = verify(b.y, &b, expectations_from_labels(labels), config);
  }
  write_or_print(report.to_json(), config, log);
  return report.all_pass() ? 0 : 1;
}

int cmd_corpus(const RunConfig& config, std::ostream& log) {
  config.validate();
  const std::filesystem::path root = config.out.empty() ? std::filesystem::path("corpus") : config.out;
  const std::vector<CorpusItem> items = generate_corpus(config.seed);
  std::vector<Report> reports(items.size());
  std::filesystem::create_directories(root / "specs");
  if (config.specs_only) {
    json index = json::array();
    for (const CorpusItem& item : items) {
      write_json_file(root / "specs" / (item.id + ".json"), item.to_json());
      index.push_back(item.labels());
    }
    write_json_file(root / "index.json", index);
    log << items.size() << " specs written to " << root.string() << '\n';
    return 0;
  }
  std::filesystem::create_directories(root / "subspaces");
  parallel_for(static_cast<int>(items.size()), [&](int i) {
    const CorpusItem& item = items[i];
    const json spec = item.to_json();
    write_json_file(root / "specs" / (item.id + ".json"), spec);
    try {
      BuildResult b = build(item.spec, config, item.labels());
      Expectations expect{item.splits, item.expected_defect, item.reducing};
      reports[i] = verify(b.y, &b, expect, config);
      b.y.meta["labels"] = item.labels();
      write_json_file(root / "subspaces" / (item.id + ".json"), to_json(b.y));
    } catch (const DomainError& e) {
      reports[i].add_flag("construction", item.type, digest(spec), false, e.what());
    }
    reports[i].tag(item.id);
  });
  Report merged;
  json index = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    merged.merge(reports[i]);
    index.push_back(items[i].labels());
  }
  write_json_file(root / "index.json", index);
  write_json_file(root / "report.json", merged.to_json());
  log << items.size() << " items written to " << root.string() << "; " << merged.passed() << " checks passed, "
      << merged.failed() << " failed\n";
  return merged.all_pass() ? 0 : 1;
}

int cmd_equiv(const std::filesystem::path& first, const std::filesystem::path& second, const RunConfig& config,
              std::ostream& log) {
  config.validate();
  const json j1 = read_json_file(first);
  const json j2 = read_json_file(second);
  const ThetaMatrix t1 = theta_of(spec_from_json(j1), j1.value("labels", json::object()), config);
  const ThetaMatrix t2 = theta_of(spec_from_json(j2), j2.value("labels", json::object()), config);
  const Numerics& numerics = config.numerics;

  Report report;
  const std::string id = digest({j1, j2});
  const double u1 = theta_unitarity_defect(t1, numerics);
  const double u2 = theta_unitarity_defect(t2, numerics);
  report.add_upper("theta_unitarity_first", kUnitarity, id, u1, numerics.unitarity_tol);
  report.add_upper("theta_unitarity_second", kUnitarity, id, u2, numerics.unitarity_tol);
  if (u1 > numerics.unitarity_tol || u2 > numerics.unitarity_tol)
    throw DomainError(ErrorKind::NotUnitary, "equivalence needs unitary Θ matrices");

  const int m = config.generator_degree();
  const double g = gap(construct_nonsplitting(t1, m, Route::Direct, numerics),
                       construct_nonsplitting(t2, m, Route::Direct, numerics));
  const OmegaFit fit = fit_omega(t1, t2, numerics);
  const EquivalenceVerdict verdict = equivalence_verdict(g, fit, numerics);
  report.add_flag("equivalence_verdict", kEquivalence, id, verdict == EquivalenceVerdict::Consistent,
                  to_string(verdict) + ": gap " + fmt(g) + ", omega residual " + fmt(fit.sup_residual) +
                      ", omega lower bound " + fmt(fit.lower_bound));
  json out = report.to_json();
  out["equivalence"] = {{"gap", g},
                        {"omega_residual", fit.sup_residual},
                        {"omega_lower_bound", fit.lower_bound},
                        {"omega", {{to_json(fit.omega(0, 0)), to_json(fit.omega(0, 1))},
                                   {to_json(fit.omega(1, 0)), to_json(fit.omega(1, 1))}}},
                        {"verdict", to_string(verdict)}};
  write_or_print(out, config, log);
  return report.all_pass() ? 0 : 1;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shiftlab
