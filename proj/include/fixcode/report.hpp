#pragma once

#include <iosfwd>
#include <string>

#include "fixcode/fixengine.hpp"

namespace fixcode {

/// JSON report. Keys: claim, params, group, code, fix_span, witness, checks,
/// conclusion, elapsed_ms (omitted when with_elapsed is false). Matrices are
/// row-major hex strings as produced by FqMatrix::to_hex.
[[nodiscard]] std::string report_json(const VerificationReport& report, bool with_elapsed = true);

/// Short human-readable summary, one line per check.
void print_summary(std::ostream& out, const VerificationReport& report);

}  // namespace fixcode
