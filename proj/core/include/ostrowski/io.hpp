#pragma once

#include "ostrowski/bounds.hpp"
#include "ostrowski/harness/discrepancy.hpp"
#include "ostrowski/prob.hpp"
#include "ostrowski/pwm_function.hpp"
#include "ostrowski/quadrature.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace ostrowski::io {

/// {"interval": [a, b], "segments": [{"right": r, "coeffs": [c0, c1, ...]}, ...]}
/// Coefficients are in powers of t. Malformed input throws ParseError with a
/// JSON-pointer location; a well-formed but invalid function throws
/// ValidationError.
PwmFunction parse_function(std::string_view text);
PwmFunction load_function(const std::string& path);

/// Same schema plus "kind": "cdf".
CdfModel parse_cdf(std::string_view text);
CdfModel load_cdf(const std::string& path);

std::string function_to_json(const PwmFunction& f);

// Reports as JSON objects with sorted keys.
std::string to_json(const BoundReport& r);
std::string to_json(const SpecialCaseReport& r);
std::string to_json(const QuadratureResult& r);
std::string to_json(const ProbReport& r);
std::string to_json(const harness::KernelDiscrepancy& r);

/// left,right,estimate,bound
void write_cells_csv(std::ostream& os, const QuadratureResult& r);

}  // namespace ostrowski::io
