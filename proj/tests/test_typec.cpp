#include "doctest.h"
#include "fixtures.hpp"

#include "affnc/diagram.hpp"

#include <map>

using namespace affnc;

TEST_CASE("signings") {
    auto s = fx::sC();
    CHECK(s.elements() == std::vector<Int>{-6, -4, -3, 1, 2, 5});
    CHECK(s.is_outer(1));
    CHECK(s.is_outer(-6));
    CHECK(s.is_outer(8));
    CHECK_FALSE(s.is_outer(6));
    CHECK_THROWS(s.is_outer(7));
    CHECK(signing_from_json(signing_to_json(s)) == s);
    CHECK(signing_to_json(Signing(3, {1, -1})) == R"({"n":3,"signs":{"1":1,"2":-1}})");
    CHECK_THROWS(Signing(3, {1}));
    CHECK_THROWS(Signing::from_word(4, {0, 1, 1, 3}));
}

TEST_CASE("phi") {
    auto id = PeriodicPermutation::identity(14);
    CHECK(phi(id) == id);
    CHECK(phi(parse_cycles("(1 2)_14", 14)) == parse_cycles("(-1 -2)_14", 14));
    CHECK(phi(phi(fx::C3())) == fx::C3());
    CHECK_THROWS(phi(parse_cycles("(1 7)_14", 14)));
    auto a = parse_cycles("(1 2 5)_14", 14), b = parse_cycles("(3 -2)_14", 14);
    CHECK(phi(a * b) == phi(a) * phi(b));
}

TEST_CASE("Coxeter elements from signings") {
    auto s = fx::sC();
    auto c = coxeter_from_signing(s);
    CHECK(c == parse_cycles("((... -6 -4 -3 1 2 5 8 ...))", 14));
    CHECK(c == word_product_C(7, {6, 4, 3, 0, 1, 2, 5}));
    CHECK(is_phi_fixed(c));
    Signing pos(5, {1, 1, 1, 1});
    CHECK(coxeter_from_signing(pos) == parse_cycles("((... 1 2 3 4 11 ...))", 10));
    CHECK(folded_coxeter(s).outer_points().size() == 6);
    // every word gives the product of its simple reflections
    std::vector<Int> w{0, 1, 2, 3, 4};
    do {
        CHECK(coxeter_from_signing(Signing::from_word(5, w)) == word_product_C(5, w));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("simple reflections in both groups") {
    const Int n = 7;
    CHECK(simple_reflection_C(n, 0) == parse_cycles("(-1 1)_14", 14));
    CHECK(simple_reflection_C(n, 1) == parse_cycles("((1 2))_14", 14));
    CHECK(simple_reflection_C(n, 6) == parse_cycles("(6 8)_14", 14));
    for (Int i = 1; i <= n - 2; ++i)
        CHECK(simple_reflection_C(n, i) == simple_reflection_W(n, i) * simple_reflection_W(n, 2 * n - 2 - i));
    CHECK(simple_reflection_C(n, 0) == simple_reflection_W(n, 0));
    CHECK(simple_reflection_C(n, n - 1) == simple_reflection_W(n, n - 1));
}

TEST_CASE("folding the index set") {
    const Int n = 7;
    auto id = PeriodicPermutation::identity(14);
    CHECK(fold_index(id, n) == PeriodicPermutation::identity(12));
    CHECK(fold_value(6, n) == 6);
    CHECK(fold_value(8, n) == 7);
    CHECK(fold_value(-1, n) == 0);
    CHECK_THROWS(fold_value(14, n));
    CHECK(fold_index(simple_reflection_C(n, 6), n) == parse_cycles("(6 7)_12", 12));
    for (Int y = -30; y <= 30; ++y) CHECK(fold_value(unfold_value(y, n), n) == y);
    for (auto p : {fx::C1(), fx::C2(), fx::C3(), fx::C4()}) {
        CHECK(unfold_index(fold_index(p, n), n) == p);
        auto q = fx::C2();
        CHECK(fold_index(p * q, n) == fold_index(p, n) * fold_index(q, n));
    }
}

TEST_CASE("membership of the C examples") {
    auto s = fx::sC();
    for (auto p : {fx::C1(), fx::C2(), fx::C3(), fx::C4()}) {
        CHECK(is_phi_fixed(p));
        CHECK(is_member_C(p, s));
    }
    CHECK_FALSE(is_member_C(parse_cycles("(1 2)_14", 14), s));
    CHECK(annular_length(fold_index(fx::C2(), 7)) == 6);
    CHECK(is_member_C(coxeter_from_signing(s), s));
}

TEST_CASE("reflections of type C") {
    const Int n = 7;
    auto s0 = reflection_C(n, -1, 1);
    CHECK(s0.multiplicity() == 1);
    CHECK(s0.element == simple_reflection_C(n, 0));
    auto s1 = reflection_C(n, 1, 2);
    CHECK(s1.multiplicity() == 2);
    CHECK(s1.element == simple_reflection_C(n, 1));
    for (const auto& r : reflections_C(n, 14)) {
        CHECK(is_phi_fixed(r.element));
        CHECK((r.element * r.element).is_identity());
        CHECK(as_reflection_C(r.element, n).has_value());
        CHECK((r.multiplicity() == 1 || r.multiplicity() == 2));
        auto prod = PeriodicPermutation::identity(2 * n);
        for (const auto& g : r.orbit) prod = prod * g.to_permutation();
        CHECK(prod == r.element);
    }
    CHECK_FALSE(as_reflection_C(fx::C2(), n).has_value());
    CHECK(as_reflection_C(parse_cycles("(6 36)_14", 14), n)->multiplicity() == 1);
}

TEST_CASE("orbifold diagrams") {
    auto s = fx::sC();
    auto d1 = decode_orbifold(fx::C1(), s);
    std::map<int, std::vector<std::vector<Int>>> by_count;
    for (const auto& b : d1.blocks) by_count[b.orbifold_count].push_back(b.points);
    REQUIRE(by_count[2].size() == 1);
    CHECK(by_count[2][0] == std::vector<Int>{1, 3, 5});
    CHECK(by_count[1].empty());
    CHECK(std::find(by_count[0].begin(), by_count[0].end(), std::vector<Int>{4, 6}) != by_count[0].end());
    // ((2)) is a pair of fixed points, not a self-negative class
    CHECK(std::find(by_count[0].begin(), by_count[0].end(), std::vector<Int>{2}) != by_count[0].end());
    CHECK(rank_C(fx::C1(), s) == 5);
    CHECK(perm_C(d1) == fx::C1());

    auto did = decode_orbifold(PeriodicPermutation::identity(14), s);
    CHECK(did.enclosed_orbifold_points() == 0);
    CHECK(did.blocks.size() == 6);

    for (auto p : {fx::C1(), fx::C2(), fx::C3(), fx::C4()}) CHECK(perm_C(decode_orbifold(p, s)) == p);
    CHECK_THROWS(decode_orbifold(parse_cycles("(1 2)_14", 14), s));
}

TEST_CASE("type C ranks") {
    auto s = fx::sC();
    CHECK(rank_C(PeriodicPermutation::identity(14), s) == 0);
    CHECK(rank_C(coxeter_from_signing(s), s) == 7);
    for (Int i : s.elements()) {
        auto nu = translation_nu(7, i);
        CHECK(is_member_C(nu, s));
        CHECK(rank_C(nu, s) == 2);
        CHECK(is_phi_fixed(nu));
    }
    CHECK(translations_C(s).size() == 6);
    CHECK_FALSE(is_member_C(translation_nu(7, 6), s));
    CHECK_FALSE(is_member_C(translation_nu(7, -1), s));
    CHECK(rank_C(fx::C2(), s) == 4);
    for (auto p : {fx::C1(), fx::C2(), fx::C3(), fx::C4()}) CHECK(rank_C(p, s) == rank_C_symmetric(p, s));
}

TEST_CASE("Kreweras in type C") {
    auto s = fx::sC();
    auto c = coxeter_from_signing(s);
    for (auto p : {fx::C1(), fx::C2(), fx::C3(), fx::C4()}) {
        auto k = kreweras_C(p, s);
        CHECK(k == p.inverse() * c);
        CHECK(is_member_C(k, s));
        CHECK(rank_C(k, s) == 7 - rank_C(p, s));
        auto dp = decode_orbifold(p, s), dk = decode_orbifold(k, s);
        CHECK(dp.enclosed_orbifold_points() + dk.enclosed_orbifold_points() == 2);
    }
}

TEST_CASE("fold lifting of words") {
    const Int n = 5;
    Signing s = Signing::from_word(n, {0, 1, 2, 3, 4});
    CHECK(fold_lift_word({simple_reflection_C(n, 0)}, s).size() == 1);
    CHECK(fold_lift_word({simple_reflection_C(n, 1)}, s).size() == 2);
    std::vector<PeriodicPermutation> word;
    for (Int i = 0; i < n; ++i) word.push_back(simple_reflection_C(n, i));
    auto lifted = fold_lift_word(word, s);
    CHECK(lifted.size() == 2 * n - 2);
    CHECK_THROWS(fold_lift_word({simple_reflection_C(n, 1), simple_reflection_C(n, 1)}, s));
}

TEST_CASE("covers in type C") {
    auto s = fx::sC();
    auto c = coxeter_from_signing(s);
    auto cov = covers_down_C(c, s, 36);
    CHECK_FALSE(cov.empty());
    for (const auto& u : cov) {
        CHECK(is_member_C(u, s));
        CHECK(rank_C(u, s) == 6);
        CHECK(as_reflection_C(c * u.inverse(), 7).has_value());
    }
}

TEST_CASE("direct reflection length") {
    const Int n = 4;
    Signing s = Signing::from_word(n, {0, 1, 2, 3});
    LengthSearch opt;
    auto c = coxeter_from_signing(s);
    CHECK(reflection_length_C(PeriodicPermutation::identity(8), n, 4, opt) == 0);
    CHECK(reflection_length_C(simple_reflection_C(n, 1), n, 4, opt) == 1);
    CHECK(reflection_length_C(c, n, 4, opt) == 4);
    CHECK(direct_member_C(c, s, opt) == true);
    CHECK(direct_member_C(translation_nu(n, 1), s, opt) == true);
    CHECK(direct_member_C(translation_nu(n, -1), s, opt) == false);
    LengthSearch starved;
    starved.node_budget = 1;
    CHECK_FALSE(reflection_length_C(c, n, 4, starved).has_value());
}
