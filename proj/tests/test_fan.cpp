#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/fan.hpp"
#include "toric/symmetry.hpp"

using namespace toric;

namespace {

Fan p1() { return pn_fan(1); }
Fan p2() { return pn_fan(2); }

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }
IntVec v3(long a, long b, long c) { return IntVec{Int(a), Int(b), Int(c)}; }

void expect_good(const Fan& f) {
    CHECK(validate(f).ok());
    CHECK(is_smooth(f));
    CHECK(is_complete(f));
}

}  // namespace

TEST_CASE("validate: P1 fan is valid") {
    Fan f;
    f.rank = 1;
    f.rays = {{Int(1)}, {Int(-1)}};
    f.max_cones = {{0}, {1}};
    CHECK(validate(f).ok());
}

TEST_CASE("validate: non-primitive ray is rejected") {
    Fan f;
    f.rank = 2;
    f.rays = {v2(2, 0), v2(0, 1), v2(-1, -1)};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    auto rep = validate(f);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& s : rep.failures)
        if (s.find("primitive") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validate: P2 fan is valid") { expect_good(p2()); }

TEST_CASE("validate: overlapping cones are not face-to-face") {
    Fan f;
    f.rank = 2;
    f.rays = {v2(1, 0), v2(1, 2), v2(1, 1)};
    f.max_cones = {{0, 1}, {0, 2}};
    auto rep = validate(f);
    CHECK(!rep.ok());
}

TEST_CASE("is_smooth: examples") {
    CHECK(is_smooth(p2()));
    Fan f;
    f.rank = 2;
    f.rays = {v2(1, 0), v2(1, 2)};
    f.max_cones = {{0, 1}};
    CHECK(validate(f).ok());
    CHECK(!is_smooth(f));  // det 2
    CHECK(is_smooth(v_fano(4).fan));
}

TEST_CASE("is_complete: examples") {
    CHECK(is_complete(p1()));
    Fan single;
    single.rank = 2;
    single.rays = {v2(1, 0), v2(0, 1)};
    single.max_cones = {{0, 1}};
    CHECK(validate(single).ok());
    CHECK(!is_complete(single));
    CHECK(is_complete(surface("dP6").fan));
}

TEST_CASE("product: P1 x P1") {
    Fan f = product(p1(), p1());
    expect_good(f);
    CHECK(f.ray_count() == 4);
    CHECK(f.max_cones.size() == 4);
    f.ray_index(v2(1, 0));
    f.ray_index(v2(-1, 0));
    f.ray_index(v2(0, 1));
    f.ray_index(v2(0, -1));
}

TEST_CASE("product: P1 x P1 x P1 and count law") {
    Fan f = product(product(p1(), p1()), p1());
    expect_good(f);
    CHECK(f.ray_count() == 6);
    CHECK(f.max_cones.size() == 8);
    Fan g = product(p2(), p1());
    expect_good(g);
    CHECK(g.max_cones.size() == p2().max_cones.size() * p1().max_cones.size());
}

TEST_CASE("product: identity with the point fan") {
    Fan pt = point_fan();
    Fan f = product(p2(), pt);
    CHECK(f.rank == 2);
    CHECK(f.ray_count() == 3);
    CHECK(f.max_cones.size() == 3);
    CHECK(find_fan_isomorphism(f, p2()).has_value());
}

TEST_CASE("star subdivision: Bl_pt P2 = dP8") {
    Fan f = p2();
    Fan dp8 = star_subdivision(f, {f.ray_index(v2(1, 0)), f.ray_index(v2(0, 1))});
    expect_good(dp8);
    CHECK(dp8.ray_count() == 4);
    CHECK(dp8.max_cones.size() == 4);
    dp8.ray_index(v2(1, 1));  // the barycenter ray
}

TEST_CASE("star subdivision: two then three centers reach dP7, dP6") {
    Fan dp7 = surface("dP7").fan;
    expect_good(dp7);
    CHECK(dp7.ray_count() == 5);
    CHECK(dp7.max_cones.size() == 5);

    Fan f = star_subdivision(dp7, {dp7.ray_index(v2(1, 0)), dp7.ray_index(v2(-1, -1))});
    expect_good(f);
    CHECK(f.ray_count() == 6);
    CHECK(find_fan_isomorphism(f, surface("dP6").fan).has_value());
}

TEST_CASE("star subdivision: errors") {
    Fan f = p2();
    CHECK_THROWS_AS(star_subdivision(f, {0}), std::invalid_argument);
    CHECK_THROWS_AS(star_subdivision(f, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("star subdivision: cone counts in rank 2 and rank 3") {
    Fan f = p2();
    Fan g = star_subdivision(f, f.max_cones[0]);
    CHECK(g.max_cones.size() == f.max_cones.size() + 1);

    Fan x = product(p2(), p1());
    // a 2-cone of the P2 factor sits in exactly two maximal cones
    std::size_t a = x.ray_index(v3(1, 0, 0));
    std::size_t b = x.ray_index(v3(0, 1, 0));
    Fan y = star_subdivision(x, {a, b});
    expect_good(y);
    CHECK(y.max_cones.size() == x.max_cones.size() + 2);
    CHECK(y.ray_count() == x.ray_count() + 1);
}

TEST_CASE("projectivize: Hirzebruch ray pin u1 = -e1 + a e2") {
    for (long a : {0L, 1L, 2L, 3L, 7L}) {
        Fan f = hirzebruch(a).fan;
        expect_good(f);
        CHECK(f.ray_count() == 4);
        CHECK(f.max_cones.size() == 4);
        f.ray_index(v2(-1, a));
        f.ray_index(v2(1, 0));
        f.ray_index(v2(0, 1));
        f.ray_index(v2(0, -1));
    }
}

TEST_CASE("projectivize: P(O+O(2)) over P2") {
    Fan f = fano3(2).fan;
    expect_good(f);
    CHECK(f.ray_count() == 5);
    CHECK(f.max_cones.size() == 6);
}

TEST_CASE("projectivize: P(O+O+O(1)) over P1") {
    Fan f = fano3(4).fan;
    expect_good(f);
    CHECK(f.ray_count() == 5);
    CHECK(f.max_cones.size() == 6);
}

TEST_CASE("projectivize: rejects a non-complete base") {
    Fan single;
    single.rank = 2;
    single.rays = {v2(1, 0), v2(0, 1)};
    single.max_cones = {{0, 1}};
    CHECK_THROWS_AS(projectivize(single, {IntVec{Int(0), Int(0)}}, 1), std::invalid_argument);
}

TEST_CASE("walls: counts for P2, P1xP1, P3") {
    CHECK(walls(p2()).size() == 3);
    CHECK(walls(product(p1(), p1())).size() == 4);
    CHECK(walls(pn_fan(3)).size() == 6);
}

TEST_CASE("walls: error on incomplete fan") {
    Fan single;
    single.rank = 2;
    single.rays = {v2(1, 0), v2(0, 1)};
    single.max_cones = {{0, 1}};
    CHECK_THROWS_AS(walls(single), std::invalid_argument);
}

TEST_CASE("canonicalize: ray order is lexicographic") {
    Fan f = p2();
    for (std::size_t i = 0; i + 1 < f.ray_count(); ++i) CHECK(f.rays[i] < f.rays[i + 1]);
}

TEST_CASE("every constructor output validates smooth and complete") {
    for (const char* name : {"P2", "P1xP1", "F2", "F3", "dP6", "dP7", "dP8"})
        expect_good(surface(name).fan);
    for (int i : {1, 2, 3, 4, 5, 6, 8, 9, 10, 15, 17}) expect_good(fano3(i).fan);
    expect_good(v_fano(2).fan);
    expect_good(weyl_a(2).fan);
    expect_good(weyl_a(3).fan);
}
