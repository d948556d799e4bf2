#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/symmetry.hpp"

#include <map>
#include <random>
#include <set>

using namespace toric;

namespace {

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }

PicClass ray_class(const Fan& f, const PicardLattice& lat, const IntVec& ray) {
    TDivisor d(f.ray_count());
    d.coeffs[f.ray_index(ray)] = 1;
    return lat.class_of(d);
}

std::multiset<std::size_t> order_multiset(const FanAutGroup& g, const Fan& f) {
    std::multiset<std::size_t> out;
    for (const auto& e : g.elements) out.insert(element_order(e, f));
    return out;
}

}  // namespace

TEST_CASE("group orders of the minimal surfaces") {
    CHECK(fan_automorphisms(pn_fan(2)).order() == 6);    // S_3
    CHECK(fan_automorphisms(product(pn_fan(1), pn_fan(1))).order() == 8);  // D_8
    CHECK(fan_automorphisms(surface("dP6").fan).order() == 12);            // D_12
    CHECK(fan_automorphisms(hirzebruch(2).fan).order() == 2);
    CHECK(fan_automorphisms(hirzebruch(3).fan).order() == 2);
    CHECK(fan_automorphisms(surface("dP7").fan).order() == 2);
    CHECK(fan_automorphisms(surface("dP8").fan).order() == 2);
}

TEST_CASE("group orders of P3 and the cube fan") {
    CHECK(fan_automorphisms(pn_fan(3)).order() == 24);  // S_4
    CHECK(fan_automorphisms(fano3(8).fan).order() == 48);  // C_2 x S_4
}

TEST_CASE("element order profile of the P2 symmetry group") {
    Fan p2 = pn_fan(2);
    FanAutGroup g = fan_automorphisms(p2);
    CHECK(order_multiset(g, p2) == std::multiset<std::size_t>{1, 2, 2, 2, 3, 3});
    CHECK(!is_abelian(g));
}

TEST_CASE("group axioms: closure, identity, inverses on catalog fans") {
    for (const auto& fan : {pn_fan(2), pn_fan(3), surface("dP6").fan, hirzebruch(2).fan,
                            fano3(4).fan, v_fano(2).fan}) {
        FanAutGroup g = fan_automorphisms(fan);
        CHECK(is_closed_under_product(g));
        bool has_id = false;
        for (const auto& e : g.elements)
            if (e.matrix == IntMatrix::identity(fan.rank)) has_id = true;
        CHECK(has_id);
        // inverse = (order-1)-th power stays inside (closure implies it)
        for (const auto& e : g.elements) {
            IntMatrix p = e.matrix;
            std::size_t ord = element_order(e, fan);
            for (std::size_t k = 1; k < ord; ++k) p = mat_mul(p, e.matrix);
            CHECK(p == IntMatrix::identity(fan.rank));
        }
    }
}

TEST_CASE("wreath product law for products") {
    // distinct factors: |Aut(X x Y)| = |Aut X| * |Aut Y|
    CHECK(fan_automorphisms(fano3(5).fan).order() == 6 * 2);  // P2 x P1 -> D_12
    CHECK(fan_automorphisms(fano3(17).fan).order() == 12 * 2);
    // equal factors: |Aut(X x X)| = |Aut X|^2 * 2
    CHECK(fan_automorphisms(product(pn_fan(1), pn_fan(1))).order() == 2 * 2 * 2);
}

TEST_CASE("pic_action: trivial on P2 and on Hirzebruch surfaces") {
    for (const auto& fan : {pn_fan(2), hirzebruch(2).fan, hirzebruch(3).fan}) {
        PicardLattice lat(fan);
        FanAutGroup g = fan_automorphisms(fan);
        pic_action(g, fan, lat);
        for (const auto& p : g.pic_matrices) CHECK(p == IntMatrix::identity(lat.rank()));
    }
}

TEST_CASE("pic_action: dP6 rotation exchanges the two blowdown polarizations") {
    Fan f = surface("dP6").fan;
    PicardLattice lat(f);
    FanAutGroup g = fan_automorphisms(f);
    pic_action(g, f, lat);

    PicClass e1 = ray_class(f, lat, v2(1, 0));
    PicClass e2 = ray_class(f, lat, v2(0, 1));
    PicClass e3 = ray_class(f, lat, v2(-1, -1));
    PicClass h = ray_class(f, lat, v2(1, 1)) + e1 + e2;
    PicClass hprime = h * Int(2) - e1 - e2 - e3;
    CHECK(!(h == hprime));

    bool found = false;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (element_order(g.elements[i], f) != 6) continue;
        PicClass img{mat_apply(g.pic_matrices[i], h.v)};
        if (img == hprime) {
            PicClass img2{mat_apply(g.pic_matrices[i], img.v)};
            CHECK(img2 == h);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("pic_action is a group homomorphism") {
    Fan f = surface("dP6").fan;
    PicardLattice lat(f);
    FanAutGroup g = fan_automorphisms(f);
    pic_action(g, f, lat);
    std::map<std::vector<std::size_t>, std::size_t> by_perm;
    for (std::size_t i = 0; i < g.elements.size(); ++i) by_perm[g.elements[i].ray_perm] = i;
    for (std::size_t a = 0; a < g.elements.size(); ++a)
        for (std::size_t b = 0; b < g.elements.size(); ++b) {
            std::vector<std::size_t> comp(f.ray_count());
            for (std::size_t r = 0; r < comp.size(); ++r)
                comp[r] = g.elements[a].ray_perm[g.elements[b].ray_perm[r]];
            std::size_t ab = by_perm.at(comp);
            CHECK(mat_mul(g.pic_matrices[a], g.pic_matrices[b]) == g.pic_matrices[ab]);
        }
}

TEST_CASE("invariant ranks of table rows 6, 8, 17") {
    for (auto [idx, want] : std::vector<std::pair<int, std::size_t>>{{6, 2}, {8, 1}, {17, 2}}) {
        Fan f = fano3(idx).fan;
        PicardLattice lat(f);
        FanAutGroup g = fan_automorphisms(f);
        pic_action(g, f, lat);
        CHECK(invariant_rank(g, lat) == want);
    }
}

TEST_CASE("orbits: the four-bundle set on P1xP1 splits 1+2+1") {
    Fan f = product(pn_fan(1), pn_fan(1));
    PicardLattice lat(f);
    FanAutGroup g = fan_automorphisms(f);
    pic_action(g, f, lat);
    PicClass a = ray_class(f, lat, v2(1, 0));
    PicClass b = ray_class(f, lat, v2(0, 1));
    PicClass zero{IntVec(lat.rank(), Int(0))};
    OrbitPartition part = orbits(g, {zero, a, b, a + b});
    REQUIRE(part.stable());
    std::multiset<std::size_t> sizes;
    for (const auto& o : part.orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 2});
}

TEST_CASE("orbits: singleton is one orbit; missing image is flagged") {
    Fan f = product(pn_fan(1), pn_fan(1));
    PicardLattice lat(f);
    FanAutGroup g = fan_automorphisms(f);
    pic_action(g, f, lat);
    PicClass zero{IntVec(lat.rank(), Int(0))};
    OrbitPartition one = orbits(g, {zero});
    CHECK(one.stable());
    CHECK(one.orbits.size() == 1);

    PicClass a = ray_class(f, lat, v2(1, 0));
    OrbitPartition bad = orbits(g, {zero, a});
    CHECK(!bad.stable());  // the swap sends (1,0) to (0,1), which is missing
}

TEST_CASE("pic matrices preserve nef membership") {
    for (const auto& fan : {surface("dP6").fan, fano3(6).fan}) {
        PicardLattice lat(fan);
        FanAutGroup g = fan_automorphisms(fan);
        pic_action(g, fan, lat);
        auto ws = walls(fan);
        std::mt19937 rng(4141);
        std::uniform_int_distribution<int> val(-2, 2);
        for (int t = 0; t < 40; ++t) {
            IntVec c(lat.rank());
            for (auto& x : c) x = val(rng);
            PicClass cls{c};
            bool nef = is_nef(fan, ws, lat.representative(cls));
            for (const auto& p : g.pic_matrices) {
                PicClass img{mat_apply(p, cls.v)};
                CHECK(is_nef(fan, ws, lat.representative(img)) == nef);
            }
        }
    }
}

TEST_CASE("group_from_matrices: V2 symmetric group is the full hexagon symmetry") {
    Fan f = v_fano(2).fan;
    FanAutGroup g = group_from_matrices(f, vn_symmetric_matrices(2));
    CHECK(g.order() == 12);
    CHECK(g.order() == fan_automorphisms(f).order());
}

TEST_CASE("group_from_matrices: rejects a non-closed or alien set") {
    Fan f = pn_fan(2);
    // a rotation that does not preserve the fan
    IntMatrix rot(2, 2);
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    CHECK_THROWS_AS(group_from_matrices(f, {rot}), std::invalid_argument);
}

TEST_CASE("find_fan_isomorphism: weylA2 vs dP6 and a negative case") {
    CHECK(find_fan_isomorphism(weyl_a(2).fan, surface("dP6").fan).has_value());
    CHECK(!find_fan_isomorphism(pn_fan(2), surface("dP8").fan).has_value());
    CHECK(!find_fan_isomorphism(hirzebruch(2).fan, product(pn_fan(1), pn_fan(1))).has_value());
}

TEST_CASE("weyl fan symmetry orders") {
    CHECK(fan_automorphisms(weyl_a(1).fan).order() == 2);
    CHECK(fan_automorphisms(weyl_a(2).fan).order() == 12);
    CHECK(fan_automorphisms(weyl_a(3).fan).order() == 48);
}
