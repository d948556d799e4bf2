#pragma once

#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Lattice automorphism preserving the fan: matrix * v_rho = v_{ray_perm[rho]}.
struct FanAutomorphism {
    IntMatrix matrix;
    std::vector<std::size_t> ray_perm;
};

struct FanAutGroup {
    std::vector<FanAutomorphism> elements;
    std::vector<IntMatrix> pic_matrices;  // same order as elements; see pic_action

    std::size_t order() const { return elements.size(); }
};

/// Enumerates all lattice automorphisms preserving the fan, canonically
/// ordered by ray permutation.
FanAutGroup fan_automorphisms(const Fan& fan);

/// Builds a (closure-verified) subgroup from explicit matrices, e.g. a known
/// symmetric-group action supplied by a catalog constructor.
FanAutGroup group_from_matrices(const Fan& fan, const std::vector<IntMatrix>& mats);

/// Induced action on canonical Picard coordinates; fills group.pic_matrices.
void pic_action(FanAutGroup& group, const Fan& fan, const PicardLattice& lat);

/// Rank of the invariant sublattice Pic^G.
std::size_t invariant_rank(const FanAutGroup& group, const PicardLattice& lat);

struct OrbitPartition {
    std::vector<std::vector<PicClass>> orbits;
    // set when the input set is not closed under the action
    std::optional<std::pair<std::size_t, PicClass>> unstable_witness;  // (element idx, escaped image)
    bool stable() const { return !unstable_witness.has_value(); }
};

/// Orbit partition of a class set under the group's Picard action.
OrbitPartition orbits(const FanAutGroup& group, const std::vector<PicClass>& classes);

/// Multiplicative order of an element.
std::size_t element_order(const FanAutomorphism& g, const Fan& fan);

/// True if every product of two elements stays in the group (finite closure).
bool is_closed_under_product(const FanAutGroup& group);

bool is_abelian(const FanAutGroup& group);

/// GL(N)-isomorphism carrying f1 onto f2 (rays to rays, cones to cones).
std::optional<IntMatrix> find_fan_isomorphism(const Fan& f1, const Fan& f2);

}  // namespace toric
