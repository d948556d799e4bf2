#pragma once

#include "toric/bigint.hpp"
#include "toric/intmat.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

/// Simplicial fan with full-dimensional maximal cones, given by primitive
/// ray generators and the ray-index sets of its maximal cones.
struct Fan {
    std::size_t rank = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    std::size_t ray_count() const { return rays.size(); }

    /// Index of a ray with the given coordinates; throws if absent.
    std::size_t ray_index(const IntVec& v) const;

    /// True if the ray set spans a cone of the fan (simplicial: any subset
    /// of a maximal cone's rays).
    bool has_cone(const std::vector<std::size_t>& c) const;
};

struct Wall {
    std::vector<std::size_t> ridge;  // sorted, size rank-1
    std::size_t left = 0, right = 0;  // adjacent maximal cone indices, left < right
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Structural checks: primitive distinct rays, independent full-dimensional
/// cones, every ray used; pairwise cone intersections are common faces
/// (the face check runs on fans small enough for exact LPs unless forced).
ValidationReport validate(const Fan& fan, bool force_face_check = false);

/// Every maximal cone unimodular.
bool is_smooth(const Fan& fan);

/// Every ridge of every maximal cone shared by exactly two maximal cones.
bool is_complete(const Fan& fan);

/// Fan of the product variety: embedded rays, all pairwise unions of cones.
Fan product(const Fan& f1, const Fan& f2);

/// Star subdivision at a cone of dimension >= 2 of a smooth fan (the toric
/// blowup along the corresponding orbit closure).
Fan star_subdivision(const Fan& fan, const std::vector<std::size_t>& cone);

/// Fan of P(O + O(D_1) + ... + O(D_r)) over a smooth complete base; twists
/// are ray-indexed coefficient vectors of the D_i.
Fan projectivize(const Fan& base, const std::vector<IntVec>& twists, std::size_t fiber_rank);

/// All walls (ridges with their two adjacent maximal cones); throws on a
/// boundary ridge.
std::vector<Wall> walls(const Fan& fan);

/// All cones of the given dimension, as sorted ray-index sets.
std::vector<std::vector<std::size_t>> cones_of_dimension(const Fan& fan, std::size_t dim);

/// Sorts rays lexicographically and renumbers cones; constructors apply this
/// so file output is reproducible.
Fan canonicalize(Fan fan);

}  // namespace toric
