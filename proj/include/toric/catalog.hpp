#pragma once

#include "toric/collections.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/symmetry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Reference invariants (sigma1, k0, |Aut|, rho, rho^G, fr, fr-) from the
/// classification of smooth toric Fano 3-folds.
using InvariantTuple = std::array<std::size_t, 7>;

struct CatalogEntry {
    std::string name;
    Fan fan;
    std::optional<InvariantTuple> expected;
    std::string note;
};

/// Row metadata for the Fano 3-fold table; rows 13, 14, 16, 18 have no fan
/// constructor here (bundle data not derivable from the names alone).
struct Fano3Row {
    int index;
    std::string name;
    InvariantTuple expected;
    bool constructible;
};

const std::vector<Fano3Row>& fano3_rows();

Fan point_fan();
Fan pn_fan(std::size_t n);

/// Rank-2 complete fan from rays positively spanning the plane (cones are
/// consecutive pairs in angular order).
Fan fan2_from_rays(std::vector<IntVec> rays);

/// Minimal toric surfaces and the del Pezzo blowdowns: P2, P1xP1, F(a),
/// dP6, dP7, dP8. Accepts "F(a)" or "Fa" for Hirzebruch surfaces.
CatalogEntry surface(const std::string& name);
CatalogEntry hirzebruch(long a);

/// Toric Fano 3-fold by classification index (1..18); throws for the four
/// rows without fan data.
CatalogEntry fano3(int index);

/// Centrally symmetric generalized del Pezzo V_n (n even): 2(n+1) rays,
/// (n+1)!/((n/2)!)^2 maximal cones.
CatalogEntry v_fano(std::size_t n);

/// Fan of Weyl chambers of a type-A root system (permutohedral fan).
CatalogEntry weyl_a(std::size_t n);

/// The F_{c,J} line bundle collection on V_n, blocks grouped by symmetry
/// orbit and ordered by decreasing |J|.
Collection vn_collection(std::size_t n);

/// Matrices of the natural S_{n+1} x C_2 action on the V_n lattice.
std::vector<IntMatrix> vn_symmetric_matrices(std::size_t n);

/// The involution's matrix on Pic(V_n) in the (H, E_1..E_{n+1}) basis.
IntMatrix vn_involution_matrix(std::size_t n);

/// Change of basis: columns are the canonical Picard coordinates of
/// H, E_1, ..., E_{n+1} on V_n.
IntMatrix vn_pic_basis(const Fan& fan, const PicardLattice& lat, std::size_t n);

/// Named collections from the classical literature.
Collection beilinson_collection(const Fan& pn, const PicardLattice& lat);
Collection p1p1_collection(const Fan& fan, const PicardLattice& lat);
Collection hirzebruch_collection(const Fan& fan, const PicardLattice& lat);
Collection king_dp6_collection(const Fan& fan, const PicardLattice& lat);

/// Frob(X) ^ -Nef(X) with a searched semiorthogonal order; nullopt when the
/// precedence relation is cyclic.
std::optional<Collection> bondal_uehara_collection(const Fan& fan, const PicardLattice& lat,
                                                   const CohomologyEngine& engine);

/// Exterior product collection on product(fanA, fanB), ordered
/// lexicographically by factor indices.
Collection exterior_product_collection(const Fan& fanA, const PicardLattice& latA,
                                       const Collection& collA, const Fan& fanB,
                                       const PicardLattice& latB, const Collection& collB,
                                       const Fan& prod, const PicardLattice& latProd);

/// Self-intersection of a divisor class on a smooth complete surface.
Int surface_self_intersection(const Fan& fan, const TDivisor& d);

/// All seven classification invariants of a fan.
InvariantTuple invariant_tuple(const Fan& fan);

/// Resolve a catalog name (P3, P1xP1, F2, dP6, fano3-7, V4, weylA3, ...).
std::optional<CatalogEntry> catalog_find(const std::string& name);

/// Names accepted by catalog_find, for help text.
std::vector<std::string> catalog_names();

}  // namespace toric
