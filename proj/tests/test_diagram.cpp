#include "doctest.h"
#include "fixtures.hpp"

#include "affnc/diagram.hpp"

#include <regex>

using namespace affnc;

static int count_of(const std::string& s, const std::string& what) {
    int k = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++k;
    return k;
}

TEST_CASE("decode the running examples") {
    auto c = fx::c7();
    auto d2 = decode(fx::P2(), c);
    const Block* a = d2.annular_block();
    REQUIRE(a);
    CHECK(a->kind == Block::Kind::NonDanglingAnnular);
    CHECK(a->increasing.entries == std::vector<Int>{3, 4, 7});
    CHECK(a->decreasing.entries == std::vector<Int>{1, -5});
    CHECK(d2.block_of(5).cycle == std::vector<Int>{5, 6});
    CHECK(d2.block_of(5).kind == Block::Kind::ArcOrSegment);
    CHECK_FALSE(has_dangling(d2));

    auto d3 = decode(fx::P3(), c);
    REQUIRE(d3.annular_block());
    CHECK(d3.annular_block()->kind == Block::Kind::DanglingAnnular);
    CHECK(d3.annular_block()->increasing.entries == std::vector<Int>{4, 7});
    CHECK(d3.block_of(1).kind == Block::Kind::Disk);
    CHECK(d3.block_of(2).kind == Block::Kind::Trivial);
    CHECK(d3.block_of(3).kind == Block::Kind::Trivial);
    CHECK(has_dangling(d3));
    CHECK(non_annular_block_count(d3) == 3);

    auto d1 = decode(fx::P1(), c);
    CHECK_FALSE(has_dangling(d1));
    CHECK(d1.annular_block() == nullptr);

    auto did = decode(PeriodicPermutation::identity(7), c);
    for (const auto& b : did.blocks) CHECK(b.kind == Block::Kind::Trivial);
    CHECK_FALSE(has_dangling(did));

    for (auto p : {fx::P1(), fx::P2(), fx::P3()}) CHECK(encode(decode(p, c)) == p);
    CHECK_THROWS(decode(Generator::loop(7, 3, -1).to_permutation(), c));
}

TEST_CASE("curve containment") {
    auto c = fx::c7();
    auto d1 = decode(fx::P1(), c);
    CHECK(curve_contains(d1.block_of(1), Curve::chord(7, 1, -7), c));
    CHECK(curve_contains(d1.block_of(1), Curve::chord(7, -7, -4), c));
    CHECK_FALSE(curve_contains(d1.block_of(1), Curve::chord(7, 1, 0), c));
    CHECK_FALSE(curve_contains(d1.block_of(1), Curve::self_loop(7, 1), c));

    auto d2 = decode(fx::P2(), c);
    const Block& ann = *d2.annular_block();
    CHECK(curve_contains(ann, Curve::self_loop(7, 3), c));
    for (Int k = -4; k <= 4; ++k) {
        CHECK(curve_contains(ann, Curve::chord(7, 3, 1 + 7 * k), c));
        // the rank-1 element of that curve lies below P2
        auto g = generator_of_curve(Curve::chord(7, 3, 1 + 7 * k), c).to_permutation();
        CHECK(leq(g, fx::P2(), c));
    }
    CHECK(curve_contains(ann, Curve::chord(7, 3, 4), c));
    CHECK_FALSE(curve_contains(ann, Curve::chord(7, 3, 11), c));

    auto did = decode(PeriodicPermutation::identity(7), c);
    for (const auto& k : curve_universe(7, 14)) CHECK_FALSE(curve_contains(did.blocks[0], k, c));
}

TEST_CASE("curve canonical forms") {
    CHECK(Curve::chord(7, -7, 1) == Curve::chord(7, 1, -7));
    CHECK(Curve::chord(7, 1, -7) == Curve::chord(7, 7, 15));
    CHECK_THROWS(Curve::chord(7, 1, 8));
    CHECK(Curve::self_loop(7, 10) == Curve::self_loop(7, 3));
}

TEST_CASE("curve subsets") {
    auto c = fx::c7();
    auto d1 = decode(fx::P1(), c), d2 = decode(fx::P2(), c), d3 = decode(fx::P3(), c);
    CHECK(curve_subset(d1, d2, c));
    CHECK_FALSE(curve_subset(d2, d3, c));
    CHECK_FALSE(curve_subset(d3, d2, c));
    CHECK(curve_subset(d2, d2, c));
}

TEST_CASE("meet reconstruction") {
    auto c = fx::c7();
    for (auto p : {fx::P1(), fx::P2(), fx::P3()}) {
        auto d = decode(p, c);
        CHECK(meet_reconstruct(d, d, c) == d);
    }
    auto d2 = decode(fx::P2(), c), d3 = decode(fx::P3(), c);
    auto m = meet_reconstruct(d2, d3, c);
    for (const auto& k : curve_universe(7, 35))
        CHECK(curve_in(m, k, c) == (curve_in(d2, k, c) && curve_in(d3, k, c)));
}

TEST_CASE("augmentation along simple connectors") {
    auto c = fx::c7();
    auto did = decode(PeriodicPermutation::identity(7), c);
    auto a = simple_connector_augment(did, Curve::chord(7, 1, 2), c);
    CHECK(encode(a.diagram) == Generator::reflection(7, 1, 2).to_permutation());
    int arcs = 0;
    for (const auto& b : a.diagram.blocks) arcs += b.kind == Block::Kind::ArcOrSegment;
    CHECK(arcs == 1);

    auto l = simple_connector_augment(did, Curve::self_loop(7, 3), c);
    CHECK(encode(l.diagram) == Generator::loop(7, 3, 1).to_permutation());
    CHECK(l.diagram.annular_block()->kind == Block::Kind::DanglingAnnular);
    CHECK(l.tau == Generator::loop(7, 3, 1));

    auto d1 = decode(fx::P1(), c);
    CHECK_THROWS(simple_connector_augment(d1, Curve::chord(7, 1, -7), c));

    // a covering chain from P1 up to P2, each step an augmentation
    auto d2 = decode(fx::P2(), c);
    std::vector<AnnularDiagram> chain{d1};
    while (rank(encode(chain.back()), c) < rank(fx::P2(), c)) {
        bool stepped = false;
        for (const auto& k : curve_universe(7, 21)) {
            if (curve_in(chain.back(), k, c) || !curve_in(d2, k, c)) continue;
            try {
                auto aug = simple_connector_augment(chain.back(), k, c);
                if (!curve_subset(aug.diagram, d2, c)) continue;
                CHECK(encode(aug.diagram) == aug.tau.to_permutation() * encode(chain.back()));
                chain.push_back(aug.diagram);
                stepped = true;
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        REQUIRE(stepped);
    }
    CHECK(chain.size() == 4);
    CHECK(chain.back() == d2);
}

TEST_CASE("svg rendering") {
    auto c = fx::c7();
    auto id = render_svg(decode(PeriodicPermutation::identity(7), c), c);
    CHECK(id.find("<svg") != std::string::npos);
    CHECK(count_of(id, "class=\"point\"") == 7);
    CHECK(count_of(id, "class=\"boundary\"") == 2);
    CHECK(count_of(id, "<text") == 7);
    CHECK(count_of(id, "class=\"block") == 0);

    auto top = render_svg(decode(to_permutation(c), c), c);
    CHECK(count_of(top, "class=\"block annular\"") == 1);
    CHECK(count_of(top, "class=\"block") == 1);

    auto p3 = render_svg(decode(fx::P3(), c), c);
    CHECK(count_of(p3, "class=\"block dangling-annular\"") == 1);
    CHECK(count_of(p3, "class=\"block disk\"") == 1);
    CHECK(p3 == render_svg(decode(fx::P3(), c), c));
    CHECK(count_of(p3, "<svg") == count_of(p3, "</svg>"));
}

TEST_CASE("diagram json") {
    auto c = fx::c7();
    auto j = diagram_to_json(decode(fx::P2(), c));
    CHECK(j.find("\"annular\"") != std::string::npos);
    CHECK(j.find("\"n\":7") != std::string::npos);
}
