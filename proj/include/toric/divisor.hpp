#pragma once

#include "toric/fan.hpp"
#include "toric/intmat.hpp"

#include <vector>

namespace toric {

/// Torus-invariant divisor: one integer coefficient per ray.
struct TDivisor {
    IntVec coeffs;

    TDivisor() = default;
    explicit TDivisor(IntVec c) : coeffs(std::move(c)) {}
    explicit TDivisor(std::size_t nrays) : coeffs(nrays) {}

    TDivisor operator+(const TDivisor& o) const { return TDivisor(add(coeffs, o.coeffs)); }
    TDivisor operator-(const TDivisor& o) const { return TDivisor(sub(coeffs, o.coeffs)); }
    TDivisor operator-() const { return TDivisor(neg(coeffs)); }
    bool operator==(const TDivisor& o) const { return coeffs == o.coeffs; }
};

/// Class in the Picard quotient, in the canonical coordinates fixed by the
/// Smith decomposition of the ray matrix.
struct PicClass {
    IntVec v;

    PicClass() = default;
    explicit PicClass(IntVec c) : v(std::move(c)) {}

    PicClass operator+(const PicClass& o) const { return PicClass(add(v, o.v)); }
    PicClass operator-(const PicClass& o) const { return PicClass(sub(v, o.v)); }
    PicClass operator-() const { return PicClass(neg(v)); }
    PicClass operator*(const Int& c) const { return PicClass(scale(c, v)); }
    auto operator<=>(const PicClass& o) const = default;
};

/// Presentation of Pic(X) as the cokernel of M -> Div_T(X), m |-> (<m, v_rho>).
/// Smooth complete fans give a free quotient of rank (#rays - rank).
class PicardLattice {
public:
    explicit PicardLattice(const Fan& fan);

    std::size_t rank() const { return rank_; }

    PicClass class_of(const TDivisor& d) const;

    /// Canonical divisor representative of a class (a section of class_of).
    TDivisor representative(const PicClass& c) const;

    std::size_t ray_count() const { return nrays_; }

private:
    std::size_t nrays_, rank_;
    IntMatrix quot_;  // rank x nrays: trailing rows of U^{-1}
    IntMatrix sect_;  // nrays x rank: trailing columns of U
};

PicardLattice picard(const Fan& fan);

/// The unique relation sum b_rho v_rho = 0 supported on a wall's ridge and
/// its two completing rays, normalized to coefficient 1 on the completers.
IntVec wall_relation(const Fan& fan, const Wall& w);

/// Intersection number D . C_w of a divisor with the invariant curve of a wall.
Int intersect(const Fan& fan, const TDivisor& d, const Wall& w);

bool is_nef(const Fan& fan, const TDivisor& d);
bool is_ample(const Fan& fan, const TDivisor& d);
bool is_nef(const Fan& fan, const std::vector<Wall>& ws, const TDivisor& d);
bool is_ample(const Fan& fan, const std::vector<Wall>& ws, const TDivisor& d);

TDivisor anticanonical(const Fan& fan);
bool is_fano(const Fan& fan);

/// All lattice points m with <m, v_rho> >= -a_rho for every ray.
std::vector<IntVec> polytope_points(const Fan& fan, const TDivisor& d);

/// Componentwise integer bounding box of the vertices of the hyperplane
/// arrangement {<m, v_rho> = -a_rho}, padded by the given margin.
std::pair<IntVec, IntVec> arrangement_box(const Fan& fan, const IntVec& a, const Int& pad);

}  // namespace toric
