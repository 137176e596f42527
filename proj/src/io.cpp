#include "shiftlab/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "shiftlab/errors.hpp"

namespace shiftlab {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::vector<Complex> complex_list(const json& j, const char* what) {
  std::vector<Complex> out;
  for (const auto& c : array(j, what)) out.push_back(complex_from_json(c));
  return out;
}

json real_list(const Eigen::VectorXd& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Eigen::VectorXd real_vector(const json& j, const char* what) {
  array(j, what);
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], what);
  return v;
}

}  // namespace

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers are written [re, im]");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json to_json(const FourierSeries& f) {
  json coeffs = json::array();
  for (const Complex& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"N", f.order()}, {"coeffs", std::move(coeffs)}};
}

FourierSeries fourier_from_json(const json& j) {
  const int order = integer(field(j, "N"), "N");
  const json& coeffs = array(field(j, "coeffs"), "coeffs");
  if (order < 1) throw ParseError("N must be >= 1");
  if (static_cast<int>(coeffs.size()) != 2 * order + 1)
    throw ParseError("coeffs must hold 2N+1 entries, found " + std::to_string(coeffs.size()));
  Eigen::VectorXcd v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(coeffs[i]);
  return FourierSeries(order, std::move(v));
}

json to_json(const BlaschkeSpec& b) {
  json zeros = json::array();
  for (const Complex& a : b.zeros) zeros.push_back(to_json(a));
  return {{"zeros", std::move(zeros)}, {"const", to_json(b.unimodular_constant)}};
}

BlaschkeSpec blaschke_from_json(const json& j) {
  BlaschkeSpec b;
  b.zeros = complex_list(field(j, "zeros"), "zeros");
  if (j.contains("const")) b.unimodular_constant = complex_from_json(j["const"]);
  return b;
}

json to_json(const OuterSpec& s) {
  json factors = json::array();
  for (const Complex& b : s.factors) factors.push_back(to_json(b));
  return {{"scale", s.scale}, {"factors", std::move(factors)}};
}

OuterSpec outer_spec_from_json(const json& j) {
  OuterSpec s;
  s.scale = number(field(j, "scale"), "scale");
  if (j.contains("factors")) s.factors = complex_list(j["factors"], "factors");
  return s;
}

json to_json(const OuterFunction& g) {
  return {{"series", to_json(g.series)}, {"modulus_samples", real_list(g.modulus_samples)}};
}

OuterFunction outer_from_json(const json& j) {
  return OuterFunction{fourier_from_json(field(j, "series")),
                       real_vector(field(j, "modulus_samples"), "modulus_samples")};
}

json to_json(const ThetaProvenance& p) {
  json out{{"alpha1", to_json(p.alpha1)},
           {"alpha2", to_json(p.alpha2)},
           {"beta1", to_json(p.beta1)},
           {"beta2", to_json(p.beta2)},
           {"lambda", to_json(p.lambda.value)}};
  if (p.g1_spec) out["g1_spec"] = to_json(*p.g1_spec);
  if (p.g1_modulus_samples) out["g1_modulus_samples"] = real_list(*p.g1_modulus_samples);
  return out;
}

ThetaProvenance provenance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("parametrization must be an object");
  ThetaProvenance p;
  auto inner_or_one = [&](const char* key) { return j.contains(key) ? blaschke_from_json(j[key]) : BlaschkeSpec{}; };
  p.alpha1 = inner_or_one("alpha1");
  p.alpha2 = inner_or_one("alpha2");
  p.beta1 = inner_or_one("beta1");
  p.beta2 = inner_or_one("beta2");
  if (j.contains("lambda")) p.lambda.value = complex_from_json(j["lambda"]);
  if (j.contains("g1_spec")) p.g1_spec = outer_spec_from_json(j["g1_spec"]);
  if (j.contains("g1_modulus_samples")) p.g1_modulus_samples = real_vector(j["g1_modulus_samples"], "g1_modulus_samples");
  if (!p.g1_spec && !p.g1_modulus_samples) throw ParseError("parametrization needs g1_spec or g1_modulus_samples");
  return p;
}

json to_json(const ThetaMatrix& t) {
  json out{{"theta11", to_json(t.theta11)},
           {"theta12", to_json(t.theta12)},
           {"theta21", to_json(t.theta21)},
           {"theta22", to_json(t.theta22)}};
  if (t.provenance) out["provenance"] = to_json(*t.provenance);
  return out;
}

ThetaMatrix theta_from_json(const json& j) {
  ThetaMatrix t{fourier_from_json(field(j, "theta11")), fourier_from_json(field(j, "theta12")),
                fourier_from_json(field(j, "theta21")), fourier_from_json(field(j, "theta22")), std::nullopt};
  const int order = t.order();
  for (const FourierSeries* f : {&t.theta12, &t.theta21, &t.theta22})
    if (f->order() != order) throw ParseError("theta entries must share one N");
  if (j.contains("provenance")) t.provenance = provenance_from_json(j["provenance"]);
  return t;
}

json to_json(const Subspace& y) {
  json basis = json::array();
  for (Eigen::Index c = 0; c < y.basis.cols(); ++c) {
    json column = json::array();
    for (Eigen::Index r = 0; r < y.basis.rows(); ++r) column.push_back(to_json(y.basis(r, c)));
    basis.push_back(std::move(column));
  }
  return {{"ambient_N", y.ambient_N}, {"basis", std::move(basis)}, {"meta", y.meta}};
}

Subspace subspace_from_json(const json& j) {
  const int order = integer(field(j, "ambient_N"), "ambient_N");
  if (order < 1) throw ParseError("ambient_N must be >= 1");
  const json& basis = array(field(j, "basis"), "basis");
  const int rows = ambient_dim(order);
  Subspace y{Eigen::MatrixXcd(rows, basis.size()), order, j.value("meta", json::object())};
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const json& column = array(basis[c], "basis column");
    if (static_cast<int>(column.size()) != rows)
      throw ParseError("basis columns must have 2N+1 entries");
    for (int r = 0; r < rows; ++r) y.basis(r, static_cast<Eigen::Index>(c)) = complex_from_json(column[r]);
  }
  return y;
}

ConstructionSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  if (j.contains("x") || j.contains("xprime")) {
    SplittingSpec s;
    const json& x = field(j, "x");
    if (x.is_string()) {
      if (x.get<std::string>() != "zero") throw ParseError("x must be \"zero\" or {\"theta\": ...}");
      s.x_choice = ZeroPart{};
    } else {
      s.x_choice = blaschke_from_json(field(x, "theta"));
    }
    const json& xp = field(j, "xprime");
    if (xp.is_string()) {
      if (xp.get<std::string>() != "full") throw ParseError("xprime must be \"full\" or {\"model_conj\": ...}");
      s.xprime_choice = FullPart{};
    } else {
      s.xprime_choice = blaschke_from_json(field(xp, "model_conj"));
    }
    return {s};
  }
  if (j.contains("theta")) return {theta_from_json(j["theta"])};
  if (j.contains("parametrization")) return {provenance_from_json(j["parametrization"])};
  if (j.contains("example")) {
    const json& e = j["example"];
    return {ExampleParams{complex_from_json(field(e, "a")), complex_from_json(field(e, "alpha"))}};
  }
  throw ParseError("unrecognized spec: expected x/xprime, theta, parametrization or example");
}

json to_json(const ConstructionSpec& spec) {
  struct Visitor {
    json operator()(const SplittingSpec& s) const {
      json out;
      if (const auto* b = std::get_if<BlaschkeSpec>(&s.x_choice))
        out["x"] = {{"theta", to_json(*b)}};
      else
        out["x"] = "zero";
      if (const auto* b = std::get_if<BlaschkeSpec>(&s.xprime_choice))
        out["xprime"] = {{"model_conj", to_json(*b)}};
      else
        out["xprime"] = "full";
      return out;
    }
    json operator()(const ThetaMatrix& t) const { return {{"theta", to_json(t)}}; }
    json operator()(const ThetaProvenance& p) const { return {{"parametrization", to_json(p)}}; }
    json operator()(const ExampleParams& e) const {
      return {{"example", {{"a", to_json(e.a)}, {"alpha", to_json(e.alpha)}}}};
    }
  };
  return std::visit(Visitor{}, spec.data);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace shiftlab
