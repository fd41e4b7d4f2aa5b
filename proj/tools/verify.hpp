#pragma once

#include <cstdint>
#include <ostream>

#include "weyl/moments.hpp"

namespace weyl::cli {

/// Runs the verification suites (kernel relation identities, sum-vs-det
/// kernel forms, the double-determinant identity, the Moebius circle
/// oracle, and solution-measure membership) against the input sequence.
/// Writes a JSON report and returns true when every suite passed.
bool run_verify(const MomentSequence& s, std::uint64_t seed, double tol, std::ostream& out);

}  // namespace weyl::cli
