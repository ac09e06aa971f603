#pragma once

// Verification suites run by `ukin verify` and the acceptance binary.

#include "ukin/dualalgebra.hpp"

#include <string>

namespace ukin {

enum class Suite { Relations, Identities, Algebra, All };

Suite parse_suite(const std::string &name);

/// Closed-form families and binomial identities (independent of n except
/// that the ball-value and recurrence sweeps extend up to n when larger).
Report verify_identities(int n);

/// Structural properties of the product on the dual algebra for dimension n.
Report verify_algebra(const DualAlgebra &alg);

Report run_suite(int n, Suite suite);

} // namespace ukin
