#include "toric/frobenius.hpp"

#include "toric/feasible.hpp"

#include <stdexcept>

namespace toric {

std::map<PicClass, Int> frob_summands(const Fan& fan, const PicardLattice& lat, long ell) {
    if (ell < 1) throw std::invalid_argument("frob_summands: level must be positive");
    const std::size_t n = fan.rank;
    std::map<PicClass, Int> out;
    IntVec t(n, Int(0));
    for (;;) {
        TDivisor d(fan.ray_count());
        for (std::size_t r = 0; r < fan.ray_count(); ++r)
            d.coeffs[r] = fdiv(dot(t, fan.rays[r]), Int(ell));
        ++out[lat.class_of(d)];
        std::size_t k = n;
        while (k > 0 && t[k - 1] == ell - 1) --k;
        if (k == 0) break;
        ++t[k - 1];
        for (std::size_t j = k; j < n; ++j) t[j] = 0;
    }
    return out;
}

namespace {

// Feasibility of u in [0,1)^n with b_rho <= <u, v_rho> < b_rho + 1 for the
// first `upto` rays.
bool chamber_feasible(const Fan& fan, const IntVec& b, std::size_t upto) {
    const std::size_t n = fan.rank;
    std::vector<LinConstraint> weak, strict;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = 1;
        weak.push_back({e, Int(0), false});   // u_i >= 0
        strict.push_back({neg(e), Int(-1), true});  // -u_i > -1
    }
    for (std::size_t r = 0; r < upto; ++r) {
        weak.push_back({fan.rays[r], b[r], false});
        strict.push_back({neg(fan.rays[r]), Int(-(b[r] + 1)), true});
    }
    return rational_feasible(weak, strict).has_value();
}

}  // namespace

FrobeniusSet frob_set(const Fan& fan, const PicardLattice& lat) {
    const std::size_t m = fan.ray_count();
    IntVec lo(m), hi(m);
    for (std::size_t r = 0; r < m; ++r)
        for (const auto& c : fan.rays[r]) {
            if (c < 0) lo[r] += c;
            if (c > 0) hi[r] += c;
        }
    FrobeniusSet fs;
    IntVec b(m);
    // depth-first over floor vectors with prefix pruning
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (!chamber_feasible(fan, b, idx)) return;
        if (idx == m) {
            fs.classes.insert(lat.class_of(TDivisor(b)));
            return;
        }
        for (Int v = lo[idx]; v <= hi[idx]; ++v) {
            b[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return fs;
}

FrobeniusSet frob_sweep(const Fan& fan, const PicardLattice& lat, long lmax) {
    if (lmax < 1) throw std::invalid_argument("frob_sweep: lmax must be positive");
    FrobeniusSet fs;
    for (long ell = 1; ell <= lmax; ++ell) {
        auto ms = frob_summands(fan, lat, ell);
        auto& lvl = fs.per_level[ell];
        for (const auto& [c, mult] : ms) {
            lvl.insert(c);
            fs.classes.insert(c);
        }
    }
    return fs;
}

std::set<PicClass> frob_antinef(const Fan& fan, const PicardLattice& lat, const FrobeniusSet& fs) {
    auto ws = walls(fan);
    std::set<PicClass> out;
    for (const auto& c : fs.classes)
        if (is_nef(fan, ws, lat.representative(-c))) out.insert(c);
    return out;
}

std::set<PicClass> frob_antinef(const Fan& fan, const PicardLattice& lat) {
    return frob_antinef(fan, lat, frob_set(fan, lat));
}

}  // namespace toric
