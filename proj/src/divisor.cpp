#include "toric/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

PicardLattice::PicardLattice(const Fan& fan) {
    nrays_ = fan.ray_count();
    const std::size_t n = fan.rank;
    if (nrays_ < n) throw std::invalid_argument("picard: rays do not span");
    IntMatrix R = mat_from_rows(fan.rays);  // nrays x n
    SNFDecomposition d = smith_normal_form(R);
    for (std::size_t i = 0; i < n; ++i)
        if (d.S.at(i, i) != 1)
            throw std::invalid_argument(
                "picard: quotient has torsion or positive corank (fan not smooth/complete?)");
    rank_ = nrays_ - n;
    quot_ = IntMatrix(rank_, nrays_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < nrays_; ++j) quot_.at(i, j) = d.u_inv.at(n + i, j);
    sect_ = IntMatrix(nrays_, rank_);
    for (std::size_t i = 0; i < nrays_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) sect_.at(i, j) = d.U.at(i, n + j);
}

PicClass PicardLattice::class_of(const TDivisor& d) const {
    if (d.coeffs.size() != nrays_)
        throw std::invalid_argument("class_of: divisor length does not match ray count");
    return PicClass(mat_apply(quot_, d.coeffs));
}

TDivisor PicardLattice::representative(const PicClass& c) const {
    if (c.v.size() != rank_) throw std::invalid_argument("representative: wrong class length");
    return TDivisor(mat_apply(sect_, c.v));
}

PicardLattice picard(const Fan& fan) { return PicardLattice(fan); }

IntVec wall_relation(const Fan& fan, const Wall& w) {
    const auto& left = fan.max_cones.at(w.left);
    const auto& right = fan.max_cones.at(w.right);
    auto completer = [&](const std::vector<std::size_t>& cone) {
        for (auto i : cone)
            if (!std::binary_search(w.ridge.begin(), w.ridge.end(), i)) return i;
        throw std::logic_error("wall_relation: ridge equals cone");
    };
    std::size_t rl = completer(left), rr = completer(right);

    // Express v_rr in the basis (v_rl, ridge rays) of the left cone.
    std::vector<IntVec> cols;
    cols.push_back(fan.rays.at(rl));
    for (auto i : w.ridge) cols.push_back(fan.rays.at(i));
    IntMatrix B = mat_from_columns(cols);
    auto sol = solve_rational(B, fan.rays.at(rr));
    if (!sol) throw std::invalid_argument("wall_relation: singular ridge system");
    for (const auto& x : *sol)
        if (boost::multiprecision::denominator(x) != 1)
            throw std::invalid_argument("wall_relation: non-integral relation (fan not smooth)");
    if ((*sol)[0] != -1)
        throw std::invalid_argument("wall_relation: completing coefficient not -1 (fan not smooth)");

    IntVec b(fan.ray_count());
    b[rl] = 1;
    b[rr] = 1;
    for (std::size_t k = 0; k < w.ridge.size(); ++k)
        b[w.ridge[k]] = -Int(boost::multiprecision::numerator((*sol)[k + 1]));
    return b;
}

Int intersect(const Fan& fan, const TDivisor& d, const Wall& w) {
    if (d.coeffs.size() != fan.ray_count())
        throw std::invalid_argument("intersect: divisor length does not match ray count");
    return dot(wall_relation(fan, w), d.coeffs);
}

bool is_nef(const Fan& fan, const std::vector<Wall>& ws, const TDivisor& d) {
    for (const auto& w : ws)
        if (intersect(fan, d, w) < 0) return false;
    return true;
}

bool is_ample(const Fan& fan, const std::vector<Wall>& ws, const TDivisor& d) {
    for (const auto& w : ws)
        if (intersect(fan, d, w) <= 0) return false;
    return true;
}

bool is_nef(const Fan& fan, const TDivisor& d) { return is_nef(fan, walls(fan), d); }
bool is_ample(const Fan& fan, const TDivisor& d) { return is_ample(fan, walls(fan), d); }

TDivisor anticanonical(const Fan& fan) {
    TDivisor d(fan.ray_count());
    for (auto& c : d.coeffs) c = 1;
    return d;
}

bool is_fano(const Fan& fan) { return is_ample(fan, anticanonical(fan)); }

std::pair<IntVec, IntVec> arrangement_box(const Fan& fan, const IntVec& a, const Int& pad) {
    const std::size_t n = fan.rank;
    const std::size_t m = fan.ray_count();
    RatVec lo(n), hi(n);
    bool any = false;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (m < n) throw std::invalid_argument("arrangement_box: too few rays");
    for (;;) {
        std::vector<IntVec> rows;
        IntVec rhs;
        for (auto i : idx) {
            rows.push_back(fan.rays[i]);
            rhs.push_back(-a[i]);
        }
        auto sol = solve_rational(mat_from_rows(rows), rhs);
        if (sol) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!any || (*sol)[k] < lo[k]) lo[k] = (*sol)[k];
                if (!any || (*sol)[k] > hi[k]) hi[k] = (*sol)[k];
            }
            any = true;
        }
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == m - n + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!any) throw std::logic_error("arrangement_box: no independent ray subsets");
    IntVec ilo(n), ihi(n);
    for (std::size_t k = 0; k < n; ++k) {
        ilo[k] = floor_rat(lo[k]) - pad;
        ihi[k] = ceil_rat(hi[k]) + pad;
    }
    return {ilo, ihi};
}

std::vector<IntVec> polytope_points(const Fan& fan, const TDivisor& d) {
    if (d.coeffs.size() != fan.ray_count())
        throw std::invalid_argument("polytope_points: divisor length does not match ray count");
    auto [lo, hi] = arrangement_box(fan, d.coeffs, Int(0));
    const std::size_t n = fan.rank;
    std::vector<IntVec> pts;
    IntVec m = lo;
    for (;;) {
        bool inside = true;
        for (std::size_t r = 0; r < fan.ray_count() && inside; ++r)
            if (dot(m, fan.rays[r]) < -d.coeffs[r]) inside = false;
        if (inside) pts.push_back(m);
        std::size_t k = n;
        while (k > 0 && m[k - 1] == hi[k - 1]) --k;
        if (k == 0) break;
        ++m[k - 1];
        for (std::size_t j = k; j < n; ++j) m[j] = lo[j];
    }
    return pts;
}

}  // namespace toric
