#pragma once

#include "mopuc/matrix_polynomial.hpp"
#include "mopuc/opuc.hpp"
#include "mopuc/spectral_measure.hpp"
#include "mopuc/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace mopuc {

inline constexpr int kSchemaVersion = 1;

/// Matrix exchange format: {"rows": r, "cols": c, "data": [[re, im], ...]}
/// with entries in row-major order.
nlohmann::json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const SpectralDensity& w);
SpectralDensity density_from_json(const nlohmann::json& j);

nlohmann::json moments_to_json(const MomentSequence& mu);
MomentSequence moments_from_json(const nlohmann::json& j);

nlohmann::json verblunsky_to_json(const std::vector<VerblunskyData>& list);

nlohmann::json density_spec_to_json(const DensitySpec& spec);
DensitySpec density_spec_from_json(const nlohmann::json& j);

/// Command-line density grammar:
///   lebesgue
///   trig:<path.json>                      {"dim": d, "coeffs": [C_0..C_m]}
///   random:d=<d>,m=<m>,seed=<s>[,eps=<e>]
///   bs:[a0, a1, ...]                      scalar strict contractions
///   bs:<path.json>                        {"dim": d, "alphas": [matrix...]}
/// dim_hint supplies the dimension for families that do not carry one.
DensitySpec parse_density_spec(const std::string& text, Index dim_hint);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mopuc
