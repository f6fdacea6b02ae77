#include "mopuc/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace mopuc {

using nlohmann::json;

json matrix_to_json(const Matrix& a) {
  json data = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      data.push_back({a(i, j).real(), a(i, j).imag()});
    }
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    throw DimensionError("matrix_from_json: expected {rows, cols, data}");
  }
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  const json& data = j.at("data");
  if (rows <= 0 || cols <= 0 ||
      data.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw DimensionError("matrix_from_json: data length does not match shape");
  }
  Matrix a(rows, cols);
  size_t idx = 0;
  for (Index i = 0; i < rows; ++i) {
    for (Index j2 = 0; j2 < cols; ++j2, ++idx) {
      const json& e = data.at(idx);
      if (!e.is_array() || e.size() != 2) {
        throw DimensionError("matrix_from_json: entries must be [re, im] pairs");
      }
      a(i, j2) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return a;
}

json polynomial_to_json(const MatrixPolynomial& p) {
  json coeffs = json::array();
  for (const Matrix& c : p.coeffs()) coeffs.push_back(matrix_to_json(c));
  return json{{"dim", p.dim()}, {"coeffs", std::move(coeffs)}};
}

MatrixPolynomial polynomial_from_json(const json& j) {
  const Index dim = j.at("dim").get<Index>();
  std::vector<Matrix> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c));
  return MatrixPolynomial(dim, std::move(coeffs));
}

json density_to_json(const SpectralDensity& w) {
  json values = json::array();
  for (const Matrix& v : w.values) values.push_back(matrix_to_json(v));
  return json{{"schema_version", kSchemaVersion},
              {"dim", w.dim},
              {"grid_size", w.grid_size},
              {"label", w.label},
              {"values", std::move(values)}};
}

SpectralDensity density_from_json(const json& j) {
  SpectralDensity w;
  w.dim = j.at("dim").get<Index>();
  w.grid_size = j.at("grid_size").get<Index>();
  w.label = j.value("label", std::string{});
  for (const json& v : j.at("values")) w.values.push_back(matrix_from_json(v));
  validate_density(w);
  return w;
}

json moments_to_json(const MomentSequence& mu) {
  json moments = json::array();
  for (int k = 0; k <= mu.order(); ++k) {
    moments.push_back(matrix_to_json(mu.moment_nonneg(k)));
  }
  return json{{"schema_version", kSchemaVersion},
              {"dim", mu.dim()},
              {"order", mu.order()},
              {"moments", std::move(moments)}};
}

MomentSequence moments_from_json(const json& j) {
  const Index dim = j.at("dim").get<Index>();
  const int order = j.at("order").get<int>();
  std::vector<Matrix> nonneg;
  for (const json& m : j.at("moments")) nonneg.push_back(matrix_from_json(m));
  return MomentSequence(dim, order, std::move(nonneg));
}

json verblunsky_to_json(const std::vector<VerblunskyData>& list) {
  json out = json::array();
  for (const VerblunskyData& vb : list) {
    out.push_back(json{{"index", vb.index},
                       {"alpha", matrix_to_json(vb.alpha)},
                       {"rhoR", matrix_to_json(vb.rho_r.matrix())},
                       {"rhoL", matrix_to_json(vb.rho_l.matrix())}});
  }
  return out;
}

json density_spec_to_json(const DensitySpec& spec) {
  json j{{"family", spec.family_name()}, {"dim", spec.dim}};
  switch (spec.family) {
    case DensitySpec::Family::Lebesgue:
      break;
    case DensitySpec::Family::TrigPoly: {
      json coeffs = json::array();
      for (const Matrix& c : spec.trig_coeffs) coeffs.push_back(matrix_to_json(c));
      j["coeffs"] = std::move(coeffs);
      break;
    }
    case DensitySpec::Family::RandomPd:
      j["degree"] = spec.random_degree;
      j["seed"] = spec.seed;
      j["eps"] = spec.floor_eps;
      break;
    case DensitySpec::Family::BsFromAlphas: {
      json alphas = json::array();
      for (const Matrix& a : spec.alphas) alphas.push_back(matrix_to_json(a));
      j["alphas"] = std::move(alphas);
      break;
    }
  }
  return j;
}

DensitySpec density_spec_from_json(const json& j) {
  DensitySpec spec;
  const std::string family = j.at("family").get<std::string>();
  spec.dim = j.at("dim").get<Index>();
  if (family == "lebesgue") {
    spec.family = DensitySpec::Family::Lebesgue;
  } else if (family == "trig_poly") {
    spec.family = DensitySpec::Family::TrigPoly;
    for (const json& c : j.at("coeffs")) {
      spec.trig_coeffs.push_back(matrix_from_json(c));
    }
  } else if (family == "random_pd") {
    spec.family = DensitySpec::Family::RandomPd;
    spec.random_degree = j.at("degree").get<int>();
    spec.seed = j.at("seed").get<uint64_t>();
    spec.floor_eps = j.value("eps", 0.1);
  } else if (family == "bs_from_alphas") {
    spec.family = DensitySpec::Family::BsFromAlphas;
    for (const json& a : j.at("alphas")) {
      spec.alphas.push_back(matrix_from_json(a));
    }
  } else {
    throw DimensionError("density spec: unknown family '" + family + "'");
  }
  return spec;
}

namespace {

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw DimensionError("density spec: malformed number for " + what + ": '" +
                         text + "'");
  }
}

uint64_t parse_uint(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return static_cast<uint64_t>(v);
  } catch (const std::exception&) {
    throw DimensionError("density spec: malformed integer for " + what + ": '" +
                         text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return {};
  return s.substr(a, b - a + 1);
}

DensitySpec parse_random_spec(const std::string& args) {
  DensitySpec spec;
  spec.family = DensitySpec::Family::RandomPd;
  bool have_d = false, have_m = false, have_seed = false;
  for (const std::string& part : split(args, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw DimensionError("density spec: expected key=value in random spec, got '" +
                           part + "'");
    }
    const std::string key = trimmed(part.substr(0, eq));
    const std::string value = trimmed(part.substr(eq + 1));
    if (key == "d") {
      spec.dim = static_cast<Index>(parse_uint(value, "d"));
      have_d = true;
    } else if (key == "m") {
      spec.random_degree = static_cast<int>(parse_uint(value, "m"));
      have_m = true;
    } else if (key == "seed") {
      spec.seed = parse_uint(value, "seed");
      have_seed = true;
    } else if (key == "eps") {
      spec.floor_eps = parse_double(value, "eps");
    } else {
      throw DimensionError("density spec: unknown random key '" + key + "'");
    }
  }
  if (!have_d || !have_m || !have_seed) {
    throw DimensionError("density spec: random requires d=, m=, seed=");
  }
  return spec;
}

DensitySpec parse_bs_spec(const std::string& args, Index /*dim_hint*/) {
  DensitySpec spec;
  spec.family = DensitySpec::Family::BsFromAlphas;
  if (!args.empty() && args.front() == '[') {
    if (args.back() != ']') {
      throw DimensionError("density spec: unterminated scalar list in bs spec");
    }
    spec.dim = 1;
    const std::string inner = args.substr(1, args.size() - 2);
    if (!trimmed(inner).empty()) {
      for (const std::string& item : split(inner, ',')) {
        const double a = parse_double(trimmed(item), "alpha");
        if (!(std::abs(a) < 1.0)) {
          throw DimensionError(
              "density spec: alpha must be a strict contraction, got " +
              trimmed(item));
        }
        Matrix alpha(1, 1);
        alpha(0, 0) = a;
        spec.alphas.push_back(alpha);
      }
    }
    return spec;
  }
  // Otherwise a JSON file {"dim": d, "alphas": [matrix...]}.
  const json j = load_json_file(args);
  spec.dim = j.at("dim").get<Index>();
  for (const json& a : j.at("alphas")) spec.alphas.push_back(matrix_from_json(a));
  for (size_t k = 0; k < spec.alphas.size(); ++k) {
    if (!(operator_norm(spec.alphas[k]) < 1.0)) {
      throw DimensionError("density spec: alpha " + std::to_string(k) +
                           " is not a strict contraction");
    }
  }
  return spec;
}

}  // namespace

DensitySpec parse_density_spec(const std::string& text, Index dim_hint) {
  const std::string s = trimmed(text);
  if (s == "lebesgue") {
    DensitySpec spec;
    spec.family = DensitySpec::Family::Lebesgue;
    spec.dim = dim_hint;
    return spec;
  }
  if (s.rfind("trig:", 0) == 0) {
    const json j = load_json_file(s.substr(5));
    DensitySpec spec;
    spec.family = DensitySpec::Family::TrigPoly;
    spec.dim = j.at("dim").get<Index>();
    for (const json& c : j.at("coeffs")) {
      spec.trig_coeffs.push_back(matrix_from_json(c));
    }
    return spec;
  }
  if (s.rfind("random:", 0) == 0) return parse_random_spec(s.substr(7));
  if (s.rfind("bs:", 0) == 0) return parse_bs_spec(s.substr(3), dim_hint);
  throw DimensionError("density spec: unknown family in '" + text +
                       "' (expected lebesgue, trig:, random:, or bs:)");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DimensionError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DimensionError("cannot parse JSON file " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericalError("cannot open output file: " + path);
  out << content;
  if (!out) throw NumericalError("failed writing output file: " + path);
}

}  // namespace mopuc
