#pragma once

#include <json.hpp>

#include "sympath/coefficient_path.hpp"
#include "sympath/galerkin.hpp"
#include "sympath/hamiltonian.hpp"
#include "sympath/index_report.hpp"
#include "sympath/orbit.hpp"
#include "sympath/verification.hpp"

namespace sympath {

using Json = nlohmann::json;

/// Matrices travel as row-major nested arrays; complex entries as [re, im].
Json to_json(const Mat& m);
Json to_json(const CMat& m);
Mat mat_from_json(const Json& j);

Json to_json(const SignatureTriple& sig);
Json to_json(const IndexReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const GalerkinForm& form);
Json to_json(const CoefficientPath& path, int orbit_samples = 512);
Json to_json(const BrakeOrbit& orbit, bool include_samples = true);

/// Parses {"n", "tau", "kind", "coeffs", "flags"} descriptions; throws
/// ConfigParse on malformed input.
CoefficientPath coefficient_path_from_json(const Json& j);

/// Parses {"builtin": "harmonic" | "quartic", "n": ...} or
/// {"builtin": "polynomial", "n": ..., "terms": [{"coeff", "exponents"}]}.
HamiltonianSpec hamiltonian_from_json(const Json& j);

} // namespace sympath
