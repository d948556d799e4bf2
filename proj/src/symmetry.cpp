#include "toric/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

IntMatrix cone_cols(const Fan& fan, const std::vector<std::size_t>& cone) {
    std::vector<IntVec> cols;
    for (auto i : cone) cols.push_back(fan.rays.at(i));
    return mat_from_columns(cols);
}

// Integer solution A of A * B = T, if one exists (B square nonsingular).
std::optional<IntMatrix> solve_int_left(const IntMatrix& B, const IntMatrix& T) {
    const std::size_t n = B.rows;
    IntMatrix Bt = mat_transpose(B);
    IntMatrix A(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto x = solve_rational(Bt, T.row(j));
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < n; ++k) {
            if (boost::multiprecision::denominator((*x)[k]) != 1) return std::nullopt;
            A.at(j, k) = Int(boost::multiprecision::numerator((*x)[k]));
        }
    }
    return A;
}

// Ray permutation induced by a candidate matrix, if it maps rays onto rays
// and maximal cones onto maximal cones.
std::optional<std::vector<std::size_t>> induced_ray_perm(const Fan& fan_from, const Fan& fan_to,
                                                         const IntMatrix& A) {
    std::map<IntVec, std::size_t> ray_of;
    for (std::size_t i = 0; i < fan_to.ray_count(); ++i) ray_of[fan_to.rays[i]] = i;
    std::vector<std::size_t> perm(fan_from.ray_count());
    std::vector<bool> hit(fan_to.ray_count(), false);
    for (std::size_t i = 0; i < fan_from.ray_count(); ++i) {
        auto it = ray_of.find(mat_apply(A, fan_from.rays[i]));
        if (it == ray_of.end() || hit[it->second]) return std::nullopt;
        perm[i] = it->second;
        hit[it->second] = true;
    }
    std::set<std::vector<std::size_t>> cones(fan_to.max_cones.begin(), fan_to.max_cones.end());
    for (const auto& mc : fan_from.max_cones) {
        std::vector<std::size_t> img;
        for (auto i : mc) img.push_back(perm[i]);
        std::sort(img.begin(), img.end());
        if (!cones.count(img)) return std::nullopt;
    }
    return perm;
}

std::vector<FanAutomorphism> enumerate_maps(const Fan& from, const Fan& to, bool first_only) {
    std::vector<FanAutomorphism> out;
    if (from.rank != to.rank || from.ray_count() != to.ray_count() ||
        from.max_cones.size() != to.max_cones.size())
        return out;
    const auto& base = from.max_cones.at(0);
    IntMatrix B = cone_cols(from, base);
    for (const auto& target : to.max_cones) {
        std::vector<std::size_t> img(target);
        std::sort(img.begin(), img.end());
        do {
            IntMatrix T = cone_cols(to, img);
            auto A = solve_int_left(B, T);
            if (!A) continue;
            Int det = determinant(*A);
            if (det != 1 && det != -1) continue;
            auto perm = induced_ray_perm(from, to, *A);
            if (!perm) continue;
            out.push_back(FanAutomorphism{std::move(*A), std::move(*perm)});
            if (first_only) return out;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return out;
}

}  // namespace

FanAutGroup fan_automorphisms(const Fan& fan) {
    if (fan.max_cones.empty()) throw std::invalid_argument("fan_automorphisms: no maximal cones");
    FanAutGroup g;
    g.elements = enumerate_maps(fan, fan, false);
    std::sort(g.elements.begin(), g.elements.end(),
              [](const FanAutomorphism& a, const FanAutomorphism& b) {
                  return a.ray_perm < b.ray_perm;
              });
    return g;
}

FanAutGroup group_from_matrices(const Fan& fan, const std::vector<IntMatrix>& mats) {
    FanAutGroup g;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& m : mats) {
        Int det = determinant(m);
        if (det != 1 && det != -1)
            throw std::invalid_argument("group_from_matrices: matrix not unimodular");
        auto perm = induced_ray_perm(fan, fan, m);
        if (!perm) throw std::invalid_argument("group_from_matrices: matrix does not preserve fan");
        if (seen.insert(*perm).second) g.elements.push_back(FanAutomorphism{m, std::move(*perm)});
    }
    std::sort(g.elements.begin(), g.elements.end(),
              [](const FanAutomorphism& a, const FanAutomorphism& b) {
                  return a.ray_perm < b.ray_perm;
              });
    if (!is_closed_under_product(g))
        throw std::invalid_argument("group_from_matrices: set not closed under composition");
    return g;
}

void pic_action(FanAutGroup& group, const Fan& fan, const PicardLattice& lat) {
    group.pic_matrices.clear();
    const std::size_t rho = lat.rank();
    for (const auto& g : group.elements) {
        IntMatrix P(rho, rho);
        for (std::size_t k = 0; k < rho; ++k) {
            PicClass unit{IntVec(rho)};
            unit.v[k] = 1;
            TDivisor d = lat.representative(unit);
            TDivisor moved(fan.ray_count());
            for (std::size_t r = 0; r < fan.ray_count(); ++r)
                moved.coeffs[g.ray_perm[r]] = d.coeffs[r];
            PicClass img = lat.class_of(moved);
            for (std::size_t i = 0; i < rho; ++i) P.at(i, k) = img.v[i];
        }
        group.pic_matrices.push_back(std::move(P));
    }
}

std::size_t invariant_rank(const FanAutGroup& group, const PicardLattice& lat) {
    if (group.pic_matrices.size() != group.elements.size())
        throw std::invalid_argument("invariant_rank: pic_action not computed");
    const std::size_t rho = lat.rank();
    IntMatrix stacked(rho * group.elements.size(), rho);
    for (std::size_t e = 0; e < group.elements.size(); ++e)
        for (std::size_t i = 0; i < rho; ++i)
            for (std::size_t j = 0; j < rho; ++j)
                stacked.at(e * rho + i, j) =
                    group.pic_matrices[e].at(i, j) - (i == j ? 1 : 0);
    return rho - mat_rank(stacked);
}

OrbitPartition orbits(const FanAutGroup& group, const std::vector<PicClass>& classes) {
    if (group.pic_matrices.size() != group.elements.size())
        throw std::invalid_argument("orbits: pic_action not computed");
    OrbitPartition res;
    std::set<PicClass> pool(classes.begin(), classes.end());
    std::set<PicClass> assigned;
    for (const auto& start : pool) {
        if (assigned.count(start)) continue;
        std::set<PicClass> orb;
        std::vector<PicClass> queue{start};
        orb.insert(start);
        while (!queue.empty()) {
            PicClass c = queue.back();
            queue.pop_back();
            for (std::size_t e = 0; e < group.pic_matrices.size(); ++e) {
                PicClass img{mat_apply(group.pic_matrices[e], c.v)};
                if (!pool.count(img)) {
                    res.unstable_witness = {e, img};
                    return res;
                }
                if (orb.insert(img).second) queue.push_back(img);
            }
        }
        assigned.insert(orb.begin(), orb.end());
        res.orbits.emplace_back(orb.begin(), orb.end());
    }
    return res;
}

std::size_t element_order(const FanAutomorphism& g, const Fan& fan) {
    IntMatrix id = IntMatrix::identity(fan.rank);
    IntMatrix p = g.matrix;
    std::size_t k = 1;
    while (!(p == id)) {
        p = mat_mul(p, g.matrix);
        ++k;
        if (k > 10000) throw std::logic_error("element_order: runaway (matrix not finite order)");
    }
    return k;
}

bool is_closed_under_product(const FanAutGroup& group) {
    std::set<std::vector<std::size_t>> perms;
    for (const auto& g : group.elements) perms.insert(g.ray_perm);
    for (const auto& g : group.elements)
        for (const auto& h : group.elements) {
            // (g*h)(v_r) = g(v_{h.perm[r]}) : composed perm r -> g.perm[h.perm[r]]
            std::vector<std::size_t> comp(g.ray_perm.size());
            for (std::size_t r = 0; r < comp.size(); ++r) comp[r] = g.ray_perm[h.ray_perm[r]];
            if (!perms.count(comp)) return false;
        }
    return true;
}

bool is_abelian(const FanAutGroup& group) {
    for (const auto& g : group.elements)
        for (const auto& h : group.elements)
            if (!(mat_mul(g.matrix, h.matrix) == mat_mul(h.matrix, g.matrix))) return false;
    return true;
}

std::optional<IntMatrix> find_fan_isomorphism(const Fan& f1, const Fan& f2) {
    auto maps = enumerate_maps(f1, f2, true);
    if (maps.empty()) return std::nullopt;
    return maps[0].matrix;
}

}  // namespace toric
