#pragma once

#include "cext/cli/config.hpp"
#include "cext/cli/report.hpp"

namespace cext::cli {

// Each command validates its configuration (ArgumentError / InputError /
// CapacityError on bad input) and returns a report whose checks decide the
// exit status.

/// Z^2, B^2, H^2 with representatives and their extension fingerprints;
/// cross-checked against the exhaustive oracle when that is feasible.
Report cmd_h2(const RunConfig& cfg);

/// The extension defined by a degree-2 cochain file, or the triple where
/// the cocycle condition fails.
Report cmd_extend(const RunConfig& cfg);

/// h2, plus the classes grouped by the fingerprint of their extension.
Report cmd_classify(const RunConfig& cfg);

/// The seeded battery for the loop-group forms R and alpha.
Report cmd_verify(const RunConfig& cfg);

/// Periods of R over the standard S^2 family of based loops in SU(2).
Report cmd_period(const RunConfig& cfg);

}  // namespace cext::cli
