// SLOCC class detection from an invariant record via the vanishing
// pattern of the invariants, with explicit tolerance semantics.
#pragma once

#include <array>
#include <string>

#include "luinv/invariants.hpp"

namespace luinv {

enum class SloccClass { Null, FullySeparable, Bisep1_23, Bisep2_13, Bisep3_12, W, GHZ };

std::string to_string(SloccClass c);

/// Classification result.  `positive` is the observed >tol pattern over
/// the columns (n2, y2, c2_1..3, g2_1..3, omega2, tau2); when the pattern
/// matches no class exactly, `cls` is the nearest row (fewest mismatched
/// columns, less entangled on ties), `consistent` is false and
/// `diagnostics` names the mismatches.
struct Classification {
    SloccClass cls = SloccClass::Null;
    bool consistent = true;
    std::array<bool, 10> positive{};
    std::string diagnostics;
};

/// A value counts as zero iff it is <= tol (applied to the stored squared
/// quantities).  The decision runs top-down: vanishing norm, then tau2,
/// then omega2, then the c2 zero pattern.
Classification classify(const InvariantSet& inv, double tol);

/// Expected >0 pattern of a class over the same ten columns.
std::array<bool, 10> class_pattern(SloccClass c);

std::array<std::string, 10> pattern_column_names();

}  // namespace luinv
