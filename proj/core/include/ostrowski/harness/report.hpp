#pragma once

#include "ostrowski/harness/checks.hpp"
#include "ostrowski/harness/sharpness.hpp"

#include <ostream>
#include <span>
#include <string>

namespace ostrowski::harness {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double v);

/// fn_id,x,p,member_pair,lhs,rhs,slack
void write_violations_csv(std::ostream& os, std::span<const ChainViolation> violations);

/// family,eps,lhs,bound,ratio
void write_probe_csv(std::ostream& os, std::span<const SharpnessPoint> points);

}  // namespace ostrowski::harness
