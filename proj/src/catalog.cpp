#include "toric/catalog.hpp"

#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

// counterclockwise from the positive x-axis, exact integer comparison
bool angle_less(const IntVec& a, const IntVec& b) {
    auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Int cross = a[0] * b[1] - a[1] * b[0];
    return cross > 0;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void require_valid(const Fan& fan, const std::string& what) {
    auto rep = validate(fan);
    if (!rep.ok())
        throw std::logic_error("catalog: construction of " + what +
                               " produced an invalid fan: " + rep.failures.front());
}

}  // namespace

Fan point_fan() {
    Fan f;
    f.rank = 0;
    f.max_cones = {{}};
    return f;
}

Fan pn_fan(std::size_t n) {
    if (n == 0) throw std::invalid_argument("pn_fan: n must be positive");
    Fan f;
    f.rank = n;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec v(n);
        v[i] = 1;
        f.rays.push_back(std::move(v));
    }
    f.rays.push_back(IntVec(n, Int(-1)));
    for_each_subset(n + 1, n, [&](const std::vector<std::size_t>& s) { f.max_cones.push_back(s); });
    return canonicalize(std::move(f));
}

Fan fan2_from_rays(std::vector<IntVec> rays) {
    std::sort(rays.begin(), rays.end(), angle_less);
    Fan f;
    f.rank = 2;
    f.rays = rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<std::size_t> c{i, (i + 1) % rays.size()};
        std::sort(c.begin(), c.end());
        f.max_cones.push_back(std::move(c));
    }
    return canonicalize(std::move(f));
}

CatalogEntry hirzebruch(long a) {
    if (a < 0) throw std::invalid_argument("hirzebruch: twist must be nonnegative");
    Fan p1 = pn_fan(1);
    IntVec twist(p1.ray_count(), Int(0));
    twist[p1.ray_index(IntVec{Int(-1)})] = a;
    CatalogEntry e;
    e.name = "F" + std::to_string(a);
    e.fan = projectivize(p1, {twist}, 1);
    e.note = "Hirzebruch surface P(O+O(" + std::to_string(a) + ")) over P1";
    require_valid(e.fan, e.name);
    return e;
}

CatalogEntry surface(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    if (name == "P2") {
        e.fan = pn_fan(2);
        e.note = "projective plane";
    } else if (name == "P1xP1") {
        e.fan = product(pn_fan(1), pn_fan(1));
        e.note = "quadric surface";
    } else if (name == "dP6") {
        e.fan = fan2_from_rays({{Int(1), Int(0)},
                                {Int(0), Int(1)},
                                {Int(-1), Int(0)},
                                {Int(0), Int(-1)},
                                {Int(1), Int(1)},
                                {Int(-1), Int(-1)}});
        e.note = "del Pezzo surface of degree 6";
    } else if (name == "dP7") {
        Fan f = star_subdivision(pn_fan(2), {pn_fan(2).ray_index(IntVec{Int(1), Int(0)}),
                                             pn_fan(2).ray_index(IntVec{Int(0), Int(1)})});
        f = star_subdivision(f, {f.ray_index(IntVec{Int(0), Int(1)}),
                                 f.ray_index(IntVec{Int(-1), Int(-1)})});
        e.fan = std::move(f);
        e.note = "del Pezzo surface of degree 7";
    } else if (name == "dP8") {
        Fan p2 = pn_fan(2);
        e.fan = star_subdivision(p2, {p2.ray_index(IntVec{Int(1), Int(0)}),
                                      p2.ray_index(IntVec{Int(0), Int(1)})});
        e.note = "del Pezzo surface of degree 8";
    } else {
        // F(a) or Fa
        std::string digits;
        if (name.size() > 3 && name.substr(0, 2) == "F(" && name.back() == ')')
            digits = name.substr(2, name.size() - 3);
        else if (name.size() > 1 && name[0] == 'F')
            digits = name.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("surface: unknown name " + name);
        return hirzebruch(std::stol(digits));
    }
    require_valid(e.fan, e.name);
    return e;
}

const std::vector<Fano3Row>& fano3_rows() {
    static const std::vector<Fano3Row> rows = {
        {1, "P3", {4, 4, 24, 1, 1, 4, 4}, true},
        {2, "P_P2(O+O(2))", {5, 6, 6, 2, 2, 7, 6}, true},
        {3, "P_P2(O+O(1))", {5, 6, 6, 2, 2, 6, 6}, true},
        {4, "P_P1(O+O+O(1))", {5, 6, 4, 2, 2, 6, 6}, true},
        {5, "P2xP1", {5, 6, 12, 2, 2, 6, 6}, true},
        {6, "P_P1xP1(O+O(1,1))", {6, 8, 8, 3, 2, 8, 8}, true},
        {7, "P_dP8(O+O(l)), l^2=1", {6, 8, 8, 3, 3, 8, 8}, true},
        {8, "P1xP1xP1", {6, 8, 48, 3, 1, 8, 8}, true},
        {9, "dP8xP1", {6, 8, 4, 3, 3, 8, 8}, true},
        {10, "P_P1xP1(O+O(1,-1))", {6, 8, 8, 3, 2, 8, 8}, true},
        {11, "Bl_P1 P_P2(O+O(1))", {6, 8, 2, 3, 3, 9, 8}, true},
        {12, "Bl_P1 (P2xP1)", {6, 8, 2, 3, 3, 8, 8}, true},
        {13, "dP7-bundle over P1 (I)", {7, 10, 2, 4, 4, 10, 10}, false},
        {14, "dP7-bundle over P1 (II)", {7, 10, 4, 4, 3, 10, 10}, false},
        {15, "dP7xP1", {7, 10, 4, 4, 3, 10, 10}, true},
        {16, "dP7-bundle over P1 (III)", {7, 10, 2, 4, 4, 10, 10}, false},
        {17, "dP6xP1", {8, 12, 24, 5, 2, 12, 12}, true},
        {18, "dP6-bundle over P1", {8, 12, 4, 5, 4, 12, 12}, false},
    };
    return rows;
}

Int surface_self_intersection(const Fan& fan, const TDivisor& d) {
    if (fan.rank != 2) throw std::invalid_argument("surface_self_intersection: rank must be 2");
    Int s = 0;
    for (const auto& w : walls(fan)) s += d.coeffs.at(w.ridge.at(0)) * intersect(fan, d, w);
    return s;
}

InvariantTuple invariant_tuple(const Fan& fan) {
    PicardLattice lat = picard(fan);
    FanAutGroup aut = fan_automorphisms(fan);
    pic_action(aut, fan, lat);
    FrobeniusSet fs = frob_set(fan, lat);
    auto an = frob_antinef(fan, lat, fs);
    return {fan.ray_count(),    fan.max_cones.size(), aut.order(),
            lat.rank(),         invariant_rank(aut, lat),
            fs.classes.size(),  an.size()};
}

namespace {

Fan search_projectivized_dp8(const InvariantTuple& expected) {
    Fan dp8 = surface("dP8").fan;
    PicardLattice lat(dp8);
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            PicClass c{IntVec{Int(x), Int(y)}};
            TDivisor d = lat.representative(c);
            if (surface_self_intersection(dp8, d) != 1) continue;
            Fan f = projectivize(dp8, {d.coeffs}, 1);
            if (!is_fano(f)) continue;
            if (invariant_tuple(f) == expected) return f;
        }
    throw std::logic_error("fano3: no square-one twist on dP8 matched the expected invariants");
}

std::pair<Fan, std::size_t> search_curve_blowup(const Fan& ambient, const InvariantTuple& expected) {
    std::optional<Fan> first;
    std::size_t matches = 0;
    for (const auto& c : cones_of_dimension(ambient, 2)) {
        Fan f = star_subdivision(ambient, c);
        if (f.ray_count() != expected[0] || f.max_cones.size() != expected[1]) continue;
        if (!is_fano(f)) continue;
        if (invariant_tuple(f) != expected) continue;
        ++matches;
        if (!first) first = std::move(f);
    }
    if (!first) throw std::logic_error("fano3: no invariant curve blowup matched the expected invariants");
    return {std::move(*first), matches};
}

}  // namespace

CatalogEntry fano3(int index) {
    const auto& rows = fano3_rows();
    if (index < 1 || index > int(rows.size()))
        throw std::invalid_argument("fano3: index out of range 1..18");
    const Fano3Row& row = rows[index - 1];
    if (!row.constructible)
        throw std::invalid_argument("fano3: row " + std::to_string(index) +
                                    " not constructible from classification data");
    CatalogEntry e;
    e.name = row.name;
    e.expected = row.expected;
    e.note = "toric Fano 3-fold #" + std::to_string(index);

    Fan p1 = pn_fan(1);
    Fan p2 = pn_fan(2);
    switch (index) {
        case 1:
            e.fan = pn_fan(3);
            break;
        case 2:
        case 3: {
            IntVec twist(p2.ray_count(), Int(0));
            twist[0] = (index == 2) ? 2 : 1;  // any single ray carries the hyperplane class
            e.fan = projectivize(p2, {twist}, 1);
            break;
        }
        case 4: {
            IntVec twist(p1.ray_count(), Int(0));
            twist[p1.ray_index(IntVec{Int(-1)})] = 1;
            e.fan = projectivize(p1, {twist, IntVec(p1.ray_count(), Int(0))}, 2);
            break;
        }
        case 5:
            e.fan = product(p2, p1);
            break;
        case 6:
        case 10: {
            Fan q = product(p1, p1);
            IntVec twist(q.ray_count(), Int(0));
            twist[q.ray_index(IntVec{Int(1), Int(0)})] = 1;
            twist[q.ray_index(IntVec{Int(0), Int(1)})] = (index == 6) ? 1 : -1;
            e.fan = projectivize(q, {twist}, 1);
            break;
        }
        case 7:
            e.fan = search_projectivized_dp8(row.expected);
            break;
        case 8:
            e.fan = product(product(p1, p1), p1);
            break;
        case 9:
            e.fan = product(surface("dP8").fan, p1);
            break;
        case 11: {
            auto [f, matches] = search_curve_blowup(fano3(3).fan, row.expected);
            e.fan = std::move(f);
            e.note += " (blowup center search: " + std::to_string(matches) + " match(es))";
            break;
        }
        case 12: {
            auto [f, matches] = search_curve_blowup(fano3(5).fan, row.expected);
            e.fan = std::move(f);
            e.note += " (blowup center search: " + std::to_string(matches) + " match(es))";
            break;
        }
        case 15:
            e.fan = product(surface("dP7").fan, p1);
            break;
        case 17:
            e.fan = product(surface("dP6").fan, p1);
            break;
        default:
            throw std::logic_error("fano3: unhandled constructible row");
    }
    require_valid(e.fan, e.name);
    return e;
}

namespace {

// Ray direction j (0..n) of the V_n / type-A lattice: e_j for j < n, else
// (-1,...,-1).
IntVec simplex_ray(std::size_t n, std::size_t j) {
    IntVec v(n);
    if (j < n)
        v[j] = 1;
    else
        for (auto& x : v) x = -1;
    return v;
}

}  // namespace

CatalogEntry v_fano(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("v_fano: n must be even and positive");
    Fan f;
    f.rank = n;
    // indices 0..n: e_j; n+1..2n+1: antipodes
    for (std::size_t j = 0; j <= n; ++j) f.rays.push_back(simplex_ray(n, j));
    for (std::size_t j = 0; j <= n; ++j) f.rays.push_back(neg(simplex_ray(n, j)));
    std::vector<std::size_t> others;
    for (std::size_t omit = 0; omit <= n; ++omit) {
        others.clear();
        for (std::size_t j = 0; j <= n; ++j)
            if (j != omit) others.push_back(j);
        for_each_subset(n, n / 2, [&](const std::vector<std::size_t>& pick) {
            std::vector<bool> flip(n, false);
            for (auto p : pick) flip[p] = true;
            std::vector<std::size_t> cone;
            for (std::size_t t = 0; t < n; ++t)
                cone.push_back(flip[t] ? (n + 1 + others[t]) : others[t]);
            std::sort(cone.begin(), cone.end());
            f.max_cones.push_back(std::move(cone));
        });
    }
    CatalogEntry e;
    e.name = "V" + std::to_string(n);
    e.fan = canonicalize(std::move(f));
    e.note = "centrally symmetric generalized del Pezzo of dimension " + std::to_string(n);
    require_valid(e.fan, e.name);
    return e;
}

CatalogEntry weyl_a(std::size_t n) {
    if (n == 0) throw std::invalid_argument("weyl_a: n must be positive");
    Fan f;
    f.rank = n;
    std::map<std::uint64_t, std::size_t> ray_of_subset;
    auto subset_ray = [&](std::uint64_t mask) {
        auto it = ray_of_subset.find(mask);
        if (it != ray_of_subset.end()) return it->second;
        IntVec v(n);
        for (std::size_t j = 0; j <= n; ++j)
            if (mask & (std::uint64_t(1) << j)) v = add(v, simplex_ray(n, j));
        f.rays.push_back(std::move(v));
        ray_of_subset[mask] = f.rays.size() - 1;
        return f.rays.size() - 1;
    };
    std::vector<std::size_t> w(n + 1);
    std::iota(w.begin(), w.end(), 0);
    do {
        std::vector<std::size_t> cone;
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < n; ++k) {
            mask |= std::uint64_t(1) << w[k];
            cone.push_back(subset_ray(mask));
        }
        std::sort(cone.begin(), cone.end());
        f.max_cones.push_back(std::move(cone));
    } while (std::next_permutation(w.begin(), w.end()));
    CatalogEntry e;
    e.name = "X(A" + std::to_string(n) + ")";
    e.fan = canonicalize(std::move(f));
    e.note = "fan of Weyl chambers of the A" + std::to_string(n) + " root system";
    require_valid(e.fan, e.name);
    return e;
}

namespace {

struct VnClasses {
    std::vector<PicClass> E;  // E_1..E_{n+1}, 0-indexed
    PicClass H;
    PicClass sumE;
};

VnClasses vn_classes(const Fan& fan, const PicardLattice& lat, std::size_t n) {
    VnClasses out;
    for (std::size_t j = 0; j <= n; ++j)
        out.E.push_back(lat.class_of(
            TDivisor([&] {
                IntVec c(fan.ray_count(), Int(0));
                c[fan.ray_index(simplex_ray(n, j))] = 1;
                return c;
            }())));
    // H = [bar e_{n+1}] + sum_{j != n+1} E_j with bar e_{n+1} = (1,...,1)
    IntVec c(fan.ray_count(), Int(0));
    c[fan.ray_index(IntVec(n, Int(1)))] = 1;
    out.H = lat.class_of(TDivisor(c));
    for (std::size_t j = 0; j < n; ++j) out.H = out.H + out.E[j];
    out.sumE = PicClass{IntVec(lat.rank(), Int(0))};
    for (const auto& e : out.E) out.sumE = out.sumE + e;
    return out;
}

PicClass vn_F(const VnClasses& cls, long c, const std::vector<std::size_t>& J) {
    PicClass r = (cls.sumE - cls.H) * Int(c);
    for (auto j : J) r = r - cls.E[j];
    return r;
}

}  // namespace

Collection vn_collection(std::size_t n) {
    Fan fan = v_fano(n).fan;
    PicardLattice lat(fan);
    VnClasses cls = vn_classes(fan, lat, n);

    // valid c range for |J| = s: |J|-n/4 <= c <= n/4  or  (n+2)/4 <= c <= |J|-(n+2)/4
    auto in_range = [&](long c, long s) {
        bool cond1 = 4 * (s - c) <= long(n) && 4 * c <= long(n);
        bool cond2 = long(n) + 2 <= 4 * c && 4 * (s - c) >= long(n) + 2;
        return cond1 || cond2;
    };

    Collection coll;
    for (long s = long(n) + 1; s >= 0; --s) {
        std::vector<long> cs;
        for (long c = -long(n); c <= 2 * long(n) + 2; ++c)
            if (in_range(c, s)) cs.push_back(c);
        // orbit blocks pair c with s-c
        std::vector<std::pair<long, long>> pairs;
        for (long c : cs) {
            long lo = std::min(c, s - c), hi = std::max(c, s - c);
            if (std::find(pairs.begin(), pairs.end(), std::make_pair(lo, hi)) == pairs.end())
                pairs.emplace_back(lo, hi);
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto [clo, chi] : pairs) {
            std::vector<long> block_cs{clo};
            if (chi != clo) block_cs.push_back(chi);
            for (long c : block_cs)
                for_each_subset(n + 1, std::size_t(s), [&](const std::vector<std::size_t>& J) {
                    coll.items.push_back(vn_F(cls, c, J));
                });
            coll.block_bounds.push_back(coll.items.size());
        }
    }
    validate_collection(coll);
    return coll;
}

std::vector<IntMatrix> vn_symmetric_matrices(std::size_t n) {
    std::vector<IntMatrix> mats;
    std::vector<std::size_t> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int sign : {1, -1}) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                IntVec img = simplex_ray(n, perm[i]);
                for (std::size_t r = 0; r < n; ++r) m.at(r, i) = sign * img[r];
            }
            mats.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return mats;
}

IntMatrix vn_involution_matrix(std::size_t n) {
    IntMatrix m(n + 2, n + 2);
    m.at(0, 0) = Int(n);
    for (std::size_t j = 1; j <= n + 1; ++j) {
        m.at(0, j) = 1;
        m.at(j, 0) = 1 - Int(n);
        for (std::size_t i = 1; i <= n + 1; ++i) m.at(i, j) = (i == j) ? 0 : -1;
    }
    return m;
}

IntMatrix vn_pic_basis(const Fan& fan, const PicardLattice& lat, std::size_t n) {
    VnClasses cls = vn_classes(fan, lat, n);
    std::vector<IntVec> cols;
    cols.push_back(cls.H.v);
    for (const auto& e : cls.E) cols.push_back(e.v);
    return mat_from_columns(cols);
}

Collection beilinson_collection(const Fan& pn, const PicardLattice& lat) {
    IntVec c(pn.ray_count(), Int(0));
    c[0] = 1;
    PicClass h = lat.class_of(TDivisor(c));
    if (!is_nef(pn, lat.representative(h))) h = -h;
    Collection coll;
    for (std::size_t j = 0; j <= pn.rank; ++j) {
        coll.items.push_back(h * Int(j));
        coll.block_bounds.push_back(coll.items.size());
    }
    return coll;
}

Collection p1p1_collection(const Fan& fan, const PicardLattice& lat) {
    auto ray_class = [&](std::initializer_list<long> v) {
        IntVec c(fan.ray_count(), Int(0));
        c[fan.ray_index(IntVec(v.begin(), v.end()))] = 1;
        return lat.class_of(TDivisor(c));
    };
    PicClass a = ray_class({1, 0});
    PicClass b = ray_class({0, 1});
    PicClass zero{IntVec(lat.rank(), Int(0))};
    return Collection{{zero, a, b, a + b}, {1, 3, 4}};
}

Collection hirzebruch_collection(const Fan& fan, const PicardLattice& lat) {
    auto ray_class = [&](std::initializer_list<long> v) {
        IntVec c(fan.ray_count(), Int(0));
        c[fan.ray_index(IntVec(v.begin(), v.end()))] = 1;
        return lat.class_of(TDivisor(c));
    };
    PicClass d3 = ray_class({1, 0});   // fiber over the base ray e1
    PicClass d4 = ray_class({0, -1});  // section
    PicClass zero{IntVec(lat.rank(), Int(0))};
    return Collection{{zero, d3, d4, d3 + d4}, {1, 2, 3, 4}};
}

Collection king_dp6_collection(const Fan& fan, const PicardLattice& lat) {
    VnClasses cls = vn_classes(fan, lat, 2);
    PicClass zero{IntVec(lat.rank(), Int(0))};
    Collection coll;
    coll.items = {zero,
                  cls.H - cls.E[0],
                  cls.H - cls.E[1],
                  cls.H - cls.E[2],
                  cls.H,
                  cls.H * Int(2) - cls.sumE};
    coll.block_bounds = {1, 4, 6};
    return coll;
}

std::optional<Collection> bondal_uehara_collection(const Fan& fan, const PicardLattice& lat,
                                                   const CohomologyEngine& engine) {
    auto an = frob_antinef(fan, lat);
    CollectionChecker checker(fan, lat, engine);
    auto order = checker.search_order(an);
    if (!order) return std::nullopt;
    Collection coll;
    coll.items = std::move(*order);
    return coll;
}

Collection exterior_product_collection(const Fan& fanA, const PicardLattice& latA,
                                       const Collection& collA, const Fan& fanB,
                                       const PicardLattice& latB, const Collection& collB,
                                       const Fan& prod, const PicardLattice& latProd) {
    Collection out;
    for (const auto& ca : collA.items)
        for (const auto& cb : collB.items) {
            TDivisor da = latA.representative(ca);
            TDivisor db = latB.representative(cb);
            TDivisor d(prod.ray_count());
            for (std::size_t r = 0; r < prod.ray_count(); ++r) {
                const IntVec& v = prod.rays[r];
                IntVec front(v.begin(), v.begin() + fanA.rank);
                IntVec back(v.begin() + fanA.rank, v.end());
                bool back_zero = std::all_of(back.begin(), back.end(),
                                             [](const Int& x) { return x == 0; });
                if (back_zero)
                    d.coeffs[r] = da.coeffs[fanA.ray_index(front)];
                else
                    d.coeffs[r] = db.coeffs[fanB.ray_index(back)];
            }
            out.items.push_back(latProd.class_of(d));
        }
    return out;
}

std::optional<CatalogEntry> catalog_find(const std::string& name) {
    try {
        if (name == "P1" || name == "P2" || name == "P3" || name == "P4" || name == "P5") {
            CatalogEntry e;
            e.name = name;
            e.fan = pn_fan(std::size_t(name[1] - '0'));
            e.note = "projective space";
            if (name == "P3") e.expected = fano3_rows()[0].expected;
            return e;
        }
        if (name == "P1xP1" || name == "dP6" || name == "dP7" || name == "dP8")
            return surface(name);
        if (!name.empty() && name[0] == 'F') return surface(name);
        if (name == "P2xP1") return fano3(5);
        if (name == "P1xP1xP1") return fano3(8);
        if (name == "dP8xP1") return fano3(9);
        if (name == "dP7xP1") return fano3(15);
        if (name == "dP6xP1") return fano3(17);
        if (name.rfind("fano3-", 0) == 0) return fano3(std::stoi(name.substr(6)));
        if (name.size() >= 2 && name[0] == 'V' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos)
            return v_fano(std::stoul(name.substr(1)));
        if (name.rfind("weylA", 0) == 0) return weyl_a(std::stoul(name.substr(5)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    return {"P1",      "P2",    "P3",       "P1xP1",   "P2xP1", "P1xP1xP1", "dP6",
            "dP7",     "dP8",   "dP6xP1",   "dP7xP1",  "dP8xP1", "F<a>",     "fano3-<1..18>",
            "V<even n>", "weylA<n>"};
}

}  // namespace toric
