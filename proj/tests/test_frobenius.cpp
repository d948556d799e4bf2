#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/frobenius.hpp"
#include "toric/symmetry.hpp"

using namespace toric;

TEST_CASE("frob_summands: P1 level 1 and 2") {
    Fan p1 = pn_fan(1);
    PicardLattice lat(p1);
    auto m1 = frob_summands(p1, lat, 1);
    REQUIRE(m1.size() == 1);
    CHECK(m1.begin()->first == PicClass{IntVec{Int(0)}});
    CHECK(m1.begin()->second == 1);

    auto m2 = frob_summands(p1, lat, 2);
    REQUIRE(m2.size() == 2);
    Int total = 0;
    for (const auto& [c, mult] : m2) total += mult;
    CHECK(total == 4 / 2);  // 2^1 summands
    // classes are O and O(-1): the two canonical coordinates {0} and {-1} up
    // to the orientation of the quotient coordinate
    std::set<Int> got;
    for (const auto& [c, mult] : m2) {
        got.insert(abs(c.v[0]) * (c.v[0] < 0 ? -1 : 1));
        CHECK(mult == 1);
    }
    CHECK(got.count(Int(0)) == 1);
    CHECK((got.count(Int(1)) + got.count(Int(-1))) == 1);
}

TEST_CASE("frob_summands: multiset size is ell^n") {
    for (long ell : {1L, 2L, 3L, 5L}) {
        for (const auto& fan : {pn_fan(2), hirzebruch(2).fan, surface("dP6").fan}) {
            PicardLattice lat(fan);
            Int total = 0;
            for (const auto& [c, mult] : frob_summands(fan, lat, ell)) total += mult;
            Int expect = 1;
            for (std::size_t i = 0; i < fan.rank; ++i) expect *= ell;
            CHECK(total == expect);
        }
    }
    Fan p3 = pn_fan(3);
    PicardLattice lat(p3);
    Int total = 0;
    for (const auto& [c, mult] : frob_summands(p3, lat, 4)) total += mult;
    CHECK(total == 64);
}

TEST_CASE("frob_set: P3 has the four twists") {
    Fan p3 = pn_fan(3);
    PicardLattice lat(p3);
    FrobeniusSet fs = frob_set(p3, lat);
    CHECK(fs.classes.size() == 4);
    auto an = frob_antinef(p3, lat, fs);
    CHECK(an.size() == 4);
    // large-level summands realize all four classes
    auto m = frob_summands(p3, lat, 4);
    std::set<PicClass> from_sweep;
    for (const auto& [c, mult] : m) from_sweep.insert(c);
    CHECK(from_sweep == fs.classes);
}

TEST_CASE("frob_set: projective bundle over P2 with twist 2 has 7 classes, 6 anti-nef") {
    CatalogEntry e = fano3(2);
    PicardLattice lat(e.fan);
    FrobeniusSet fs = frob_set(e.fan, lat);
    CHECK(fs.classes.size() == 7);
    CHECK(frob_antinef(e.fan, lat, fs).size() == 6);
}

TEST_CASE("frob_set: blowup row has 9 classes, 8 anti-nef") {
    CatalogEntry e = fano3(11);
    PicardLattice lat(e.fan);
    FrobeniusSet fs = frob_set(e.fan, lat);
    CHECK(fs.classes.size() == 9);
    CHECK(frob_antinef(e.fan, lat, fs).size() == 8);
}

TEST_CASE("divisibility nesting of summand sets on surfaces") {
    for (const auto& fan : {pn_fan(2), product(pn_fan(1), pn_fan(1)), hirzebruch(2).fan,
                            surface("dP6").fan, surface("dP7").fan}) {
        PicardLattice lat(fan);
        std::map<long, std::set<PicClass>> sets;
        for (long ell = 1; ell <= 12; ++ell) {
            std::set<PicClass> s;
            for (const auto& [c, mult] : frob_summands(fan, lat, ell)) s.insert(c);
            sets[ell] = std::move(s);
        }
        for (long a = 1; a <= 12; ++a)
            for (long b = a; b <= 12; b += a)
                CHECK(std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(),
                                    sets[a].end()));
    }
}

TEST_CASE("sweep union matches the exact chamber set on small fans") {
    for (const auto& fan : {pn_fan(1), pn_fan(2), pn_fan(3), hirzebruch(2).fan,
                            surface("dP6").fan, product(pn_fan(1), pn_fan(1))}) {
        PicardLattice lat(fan);
        FrobeniusSet ex = frob_set(fan, lat);
        FrobeniusSet sw = frob_sweep(fan, lat, 24);
        CHECK(ex.classes == sw.classes);
        // per-level sets are recorded and each is a subset of the union
        for (const auto& [ell, s] : sw.per_level)
            CHECK(std::includes(sw.classes.begin(), sw.classes.end(), s.begin(), s.end()));
    }
}

TEST_CASE("frob_set and frob_antinef are Aut-stable") {
    for (const auto& fan : {pn_fan(2), surface("dP6").fan, fano3(2).fan}) {
        PicardLattice lat(fan);
        FanAutGroup aut = fan_automorphisms(fan);
        pic_action(aut, fan, lat);
        FrobeniusSet fs = frob_set(fan, lat);
        auto an = frob_antinef(fan, lat, fs);
        for (const auto& p : aut.pic_matrices) {
            std::set<PicClass> moved, moved_an;
            for (const auto& c : fs.classes) moved.insert(PicClass{mat_apply(p, c.v)});
            for (const auto& c : an) moved_an.insert(PicClass{mat_apply(p, c.v)});
            CHECK(moved == fs.classes);
            CHECK(moved_an == an);
        }
    }
}
