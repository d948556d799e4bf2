#pragma once

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace toric {

/// Ray subset {rho : <m, v_rho> < -a_rho} attached to a weight m.
struct SupportPattern {
    std::vector<std::size_t> rays;  // sorted
};

/// Dimensions h^0..h^n of line-bundle sheaf cohomology.
struct CohomologyTable {
    std::vector<Int> dims;

    bool all_zero() const {
        for (const auto& d : dims)
            if (d != 0) return false;
        return true;
    }
    bool is_unit() const {  // (1, 0, ..., 0)
        if (dims.empty() || dims[0] != 1) return false;
        for (std::size_t i = 1; i < dims.size(); ++i)
            if (dims[i] != 0) return false;
        return true;
    }
    bool higher_zero() const {
        for (std::size_t i = 1; i < dims.size(); ++i)
            if (dims[i] != 0) return false;
        return true;
    }
};

/// Reduced rational cohomology H~^{-1}..H~^{n-1} of the subcomplex of the
/// fan spanned by the rays in S (faces = cone ray-sets inside S).
std::vector<Int> reduced_cohomology(const Fan& fan, const SupportPattern& s);

/// Per-fan cohomology computations with a shared pattern cache.
class CohomologyEngine {
public:
    explicit CohomologyEngine(Fan fan);

    const Fan& fan() const { return fan_; }

    CohomologyTable line_bundle(const TDivisor& d) const;
    CohomologyTable ext(const TDivisor& d1, const TDivisor& d2) const;
    Int euler_char(const TDivisor& d) const;

private:
    Fan fan_;
    IntMatrix normal_;  // R^T R of the ray matrix, for the centering shift
    IntVec pattern_dims(std::uint64_t mask) const;
    TDivisor center(const TDivisor& d) const;

    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, IntVec> cache_;
};

CohomologyTable line_bundle_cohomology(const Fan& fan, const TDivisor& d);
CohomologyTable ext_table(const Fan& fan, const TDivisor& d1, const TDivisor& d2);
Int euler_char(const Fan& fan, const TDivisor& d);

}  // namespace toric
