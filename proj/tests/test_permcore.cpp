#include "doctest.h"
#include "fixtures.hpp"

#include <set>

using namespace affnc;

TEST_CASE("compose basics") {
    auto id = PeriodicPermutation::identity(3);
    CHECK(compose(id, id) == id);
    auto t = parse_cycles("(1 2)_3", 3);
    CHECK(compose(t, t) == id);
    auto l = Generator::loop(3, 1, 1).to_permutation();
    auto li = Generator::loop(3, 1, -1).to_permutation();
    CHECK(compose(l, li) == id);
    CHECK_THROWS_AS(compose(id, PeriodicPermutation::identity(4)), std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
    auto a = parse_cycles("(1 2)_3", 3);
    auto b = parse_cycles("(2 3)_3", 3);
    auto ab = a * b;
    CHECK(ab(2) == a(b(2)));
    CHECK(ab(3) == 1);
}

TEST_CASE("shift statistic") {
    CHECK(PeriodicPermutation::identity(3).shift() == 0);
    auto l1 = Generator::loop(3, 1, 1).to_permutation();
    CHECK(l1.window() == std::vector<Int>{4, 2, 3});
    CHECK(l1.shift() == 1);
    CHECK(parse_cycles("(1 2)_3", 3).shift() == 0);
    CHECK(parse_cycles("(1 5)_3", 3).is_affine());
    CHECK_THROWS(PeriodicPermutation(3, {1, 1, 3}));
    CHECK_THROWS(PeriodicPermutation(3, {1, 2, 4}));
}

TEST_CASE("decompose identity and Coxeter element") {
    auto d = decompose(PeriodicPermutation::identity(3));
    CHECK(d.finite_classes.size() == 3);
    CHECK(d.infinite_cycles.empty());

    auto c = to_permutation(fx::c7());
    auto dc = decompose(c);
    CHECK(dc.finite_classes.empty());
    REQUIRE(dc.infinite_cycles.size() == 2);
    std::set<std::pair<std::vector<Int>, Int>> recs;
    for (const auto& r : dc.infinite_cycles) recs.insert({r.entries, r.drift});
    CHECK(recs.count({{3, 4, 7}, 1}) == 1);
    // the decreasing record starts at its residue-minimal entry
    bool found = false;
    for (const auto& r : dc.infinite_cycles)
        if (r.drift == -1) {
            CHECK(c(6) == 5);
            CHECK(c(1) == -1);
            found = true;
        }
    CHECK(found);
    CHECK(recompose(dc) == c);
}

TEST_CASE("decompose a loop") {
    auto l5 = Generator::loop(7, 5, 1).to_permutation();
    auto d = decompose(l5);
    REQUIRE(d.infinite_cycles.size() == 1);
    CHECK(d.infinite_cycles[0].entries == std::vector<Int>{5});
    CHECK(d.infinite_cycles[0].drift == 1);
    CHECK(d.finite_classes.size() == 6);
}

TEST_CASE("finite class counts and annular length") {
    CHECK(finite_class_count(PeriodicPermutation::identity(7)) == 7);
    CHECK(finite_class_count(to_permutation(fx::c7())) == 0);
    CHECK(finite_class_count(fx::P1()) == 4);
    CHECK(annular_length(PeriodicPermutation::identity(7)) == 0);
    CHECK(annular_length(parse_cycles("(2 12)_7", 7)) == 1);
    CHECK(annular_length(Generator::loop(7, 3, -1).to_permutation()) == 1);
    CHECK(annular_length(fx::P2()) == 6);
    auto bad = Generator::loop(4, 1, 1).to_permutation() * Generator::loop(4, 2, 1).to_permutation();
    CHECK_FALSE(is_annular(bad));
    CHECK_THROWS_AS(annular_length(bad), std::invalid_argument);
    auto twice = parse_cycles("(... 1 9 ...)", 4);
    CHECK_FALSE(is_annular(twice));
}

TEST_CASE("apply_generator deltas") {
    auto id = PeriodicPermutation::identity(3);
    CHECK(apply_generator(Generator::reflection(3, 1, 2), id).finite_class_delta == -1);
    CHECK(apply_generator(Generator::loop(3, 1, 1), id).finite_class_delta == -1);
    auto p = parse_cycles("(1 2 3 4)_5", 5);
    auto split = apply_generator(Generator::reflection(5, 1, 3), p);
    CHECK(split.finite_class_delta == 1);
    CHECK(split.result == Generator::reflection(5, 1, 3).to_permutation() * p);
}

TEST_CASE("ascent generators") {
    CHECK(ascent_generators(PeriodicPermutation::identity(5)).empty());

    auto c = to_permutation(fx::c7());
    auto asc = ascent_generators(c, 14);
    auto has = [&](const Generator& g) { return std::find(asc.begin(), asc.end(), g) != asc.end(); };
    CHECK(has(Generator::reflection(7, 3, 4)));
    CHECK(has(Generator::loop(7, 6, 1)));
    CHECK_FALSE(has(Generator::loop(7, 3, 1)));
    CHECK(has(Generator::loop(7, 3, -1)));
    for (const auto& g : asc) {
        auto a = apply_generator(g, c);
        CHECK(a.finite_class_delta == 1);
        CHECK(is_annular(a.result));
    }

    auto p = Generator::loop(7, 3, 1).to_permutation() * Generator::loop(7, 6, -1).to_permutation();
    auto asc2 = ascent_generators(p, 14);
    CHECK(std::find(asc2.begin(), asc2.end(), Generator::reflection(7, 3, 6)) != asc2.end());
}

TEST_CASE("generator canonical forms") {
    auto g = Generator::reflection(7, 4, -2);
    CHECK(g.i == 5);
    CHECK(g.j == 11);
    CHECK(g.to_string() == "(5 11)_7");
    CHECK(Generator::reflection(7, 11, 5) == g);
    CHECK_THROWS(Generator::reflection(7, 1, 8));
    CHECK(Generator::loop(7, 5, -1).to_string() == "l_5^-1");
    CHECK(as_generator(g.to_permutation()) == g);
    CHECK(as_generator(Generator::loop(7, 2, -1).to_permutation()) == Generator::loop(7, 2, -1));
    CHECK_FALSE(as_generator(fx::P1()).has_value());
}

TEST_CASE("cycle notation parse and print") {
    auto t = parse_cycles("(1 2)_3", 3);
    CHECK(t.window() == std::vector<Int>{2, 1, 3});
    auto c = parse_cycles("(... 3 4 7 10 ...)(... 6 5 2 1 -1 ...)", 7);
    CHECK(c == to_permutation(fx::c7()));
    auto pair = parse_cycles("((3 4))_14", 14);
    CHECK(pair == parse_cycles("(3 4)_14 (-3 -4)_14", 14));
    CHECK(parse_cycles("(⋯ 3 4 7 10 ⋯)(⋯ 6 5 2 1 −1 ⋯)", 7) == c);
    CHECK(parse_cycles("()", 4) == PeriodicPermutation::identity(4));
    for (auto p : {fx::P1(), fx::P2(), fx::P3(), c, t}) CHECK(parse_cycles(print_cycles(p), p.n()) == p);

    CHECK_THROWS(parse_cycles("(1 2", 3));
    CHECK_THROWS(parse_cycles("(1 4)_3", 3));
    CHECK_THROWS(parse_cycles("(1 2)_4", 3));
    CHECK_THROWS(parse_cycles("(1 2)_3 (2 3)_3", 3));
    CHECK_THROWS(parse_cycles("(... 1 2 9 ...)", 3));
}

TEST_CASE("json round trip") {
    auto p = fx::P2();
    CHECK(perm_from_json(perm_to_json(p)) == p);
    CHECK(perm_to_json(parse_cycles("(1 2)_3", 3)) == R"({"n":3,"window":[2,1,3]})");
    CHECK_THROWS(perm_from_json(R"({"n":3})"));
}
