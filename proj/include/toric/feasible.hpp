#pragma once

#include "toric/bigint.hpp"

#include <optional>
#include <vector>

namespace toric {

/// One half-space <x, normal> >= bound (strict: > bound).
struct LinConstraint {
    IntVec normal;
    Int bound;
    bool strict = false;
};

/// Exact rational point satisfying every constraint, or nullopt if the
/// system is infeasible. Fourier-Motzkin elimination in ascending variable
/// order; the returned point is deterministic for a fixed input.
std::optional<RatVec> rational_feasible(const std::vector<LinConstraint>& weak,
                                        const std::vector<LinConstraint>& strict);

}  // namespace toric
