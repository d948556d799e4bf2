#pragma once

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

#include <map>
#include <set>

namespace toric {

/// Isomorphism classes of line-bundle summands of Frobenius pushforwards.
struct FrobeniusSet {
    std::set<PicClass> classes;
    std::map<long, std::set<PicClass>> per_level;  // filled by the sweep builder
};

/// Summand classes of (F_ell)_* O_X with multiplicity; the multiset has
/// exactly ell^n members.
std::map<PicClass, Int> frob_summands(const Fan& fan, const PicardLattice& lat, long ell);

/// Exact union over all ell, via feasibility of the floor-vector chambers
/// inside the unit cube (no level sweep).
FrobeniusSet frob_set(const Fan& fan, const PicardLattice& lat);

/// Union of summand classes for ell = 1..lmax; independent cross-check of
/// frob_set.
FrobeniusSet frob_sweep(const Fan& fan, const PicardLattice& lat, long lmax);

/// {c in Frob(X) : -c nef}.
std::set<PicClass> frob_antinef(const Fan& fan, const PicardLattice& lat);
std::set<PicClass> frob_antinef(const Fan& fan, const PicardLattice& lat, const FrobeniusSet& fs);

}  // namespace toric
