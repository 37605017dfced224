#include <catch2/catch_amalgamated.hpp>

#include "kohnert/checkered.hpp"
#include "kohnert/key.hpp"
#include "kohnert/obstruction.hpp"
#include "kohnert/poset.hpp"
#include "oracles.hpp"

using namespace kohnert;

TEST_CASE("first general pattern: staircase fixture") {
    // column 1 filled rows 2..4, row-2 cell in column 3, helper cells making
    // conditions (iii) and the Case-1 shape hold
    Diagram d{{2, 1}, {3, 1}, {4, 1}, {2, 3}, {3, 2}, {1, 4}};
    CHECK(thm1_conditions_hold(d, 2, 4, 1, 1, 1, 3));
    auto w = detect_thm1(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::Thm1);
    CHECK(validate(*w));
}

TEST_CASE("detectors reject trivial diagrams") {
    CHECK_FALSE(detect_thm1(Diagram{{1, 1}}).has_value());
    CHECK_FALSE(detect_thm2(Diagram{{1, 1}}).has_value());
    CHECK_FALSE(detect_cor(Diagram{{1, 1}}).has_value());
    CHECK_FALSE(detect_thm2(Diagram{{1, 1}, {2, 1}}).has_value());
    CHECK_FALSE(detect_thm1(Diagram{}).has_value());
}

TEST_CASE("corollary case (a) specializes the first theorem") {
    Diagram d{{2, 1}, {3, 1}, {2, 5}};
    auto w = detect_cor(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::CorA);
    CHECK(w->params.at("r_star") == 1);
    CHECK(w->params.at("c1") == 1);
    CHECK(w->params.at("c2") == 5);
    CHECK(validate(*w));
    // the same diagram carries a Thm1 witness via r1 = r2 = r*
    CHECK(thm1_conditions_hold(d, 2, 3, 1, 1, 1, 5));
    CHECK(detect_thm1(d).has_value());
}

TEST_CASE("corollary case (b) specializes the second theorem") {
    Diagram d{{2, 1}, {3, 1}, {3, 5}, {1, 5}};
    auto w = detect_cor(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::CorB);
    CHECK(w->params.at("r_star") == 1);
    CHECK(validate(*w));
    CHECK(thm2_conditions_hold(d, 1, 3, 1, 5));
    CHECK(detect_thm2(d).has_value());
}

TEST_CASE("non-pure key diagram exposes a witness after one move") {
    Diagram d = kohnert_move(key_diagram(Composition{0, 1, 2}), 3).diagram;
    CHECK(d == Diagram{{2, 1}, {3, 1}, {2, 2}});
    auto w = detect_cor(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::CorA);
    CHECK(detect_thm1(d).has_value());
}

TEST_CASE("odd checkered board exposes the corollary pattern at the top right") {
    Diagram d = kohnert_move(checkered(5, 1), 4).diagram;
    auto w = detect_cor(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::CorB);
    CHECK(w->params.at("r_star") == 1);
    CHECK(w->params.at("c1") == 4);
    CHECK(w->params.at("c2") == 5);
}

TEST_CASE("two-block two-row diagram yields case (b) after one move") {
    Diagram d0{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
    Diagram d = kohnert_move(d0, 2).diagram;
    CHECK(d == Diagram{{2, 1}, {3, 1}, {1, 2}, {3, 2}});
    auto w = detect_cor(d);
    REQUIRE(w.has_value());
    CHECK(w->kind == ObstructionKind::CorB);
    CHECK(w->params.at("r_star") == 1);
}

TEST_CASE("closure scans") {
    CHECK(scan_closure_for_obstruction(checkered(4, 1)).has_value());
    CHECK_FALSE(scan_closure_for_obstruction(Diagram{{2, 1}, {3, 2}, {2, 3}}).has_value());
    CHECK_FALSE(scan_closure_for_obstruction(key_diagram(Composition{2, 2})).has_value());
}

TEST_CASE("scan determinism") {
    auto a = scan_closure_for_obstruction(checkered(5, 2));
    auto b = scan_closure_for_obstruction(checkered(5, 2));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->kind == b->kind);
    CHECK(a->params == b->params);
    CHECK(a->diagram == b->diagram);
}

TEST_CASE("corollary hits imply general-theorem hits on random diagrams") {
    std::mt19937 rng(4242);
    int hits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Diagram d = oracles::random_diagram(rng, 5, 5, 10);
        auto w = detect_cor(d);
        if (!w) continue;
        ++hits;
        CHECK(validate(*w));
        const int r_star = w->params.at("r_star");
        const int c1 = w->params.at("c1");
        const int c2 = w->params.at("c2");
        if (w->kind == ObstructionKind::CorA) {
            CHECK(thm1_conditions_hold(d, r_star + 1, r_star + 2, r_star, r_star, c1, c2));
            CHECK(detect_thm1(d).has_value());
        } else {
            CHECK(thm2_conditions_hold(d, r_star, r_star + 2, c1, c2));
            CHECK(detect_thm2(d).has_value());
        }
    }
    CHECK(hits > 20);
}

TEST_CASE("witnesses found in closures are sound") {
    std::mt19937 rng(99);
    int witnessed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Diagram d0 = oracles::random_diagram(rng, 4, 4, 6);
        KohnertPoset p = kd_closure(d0);
        auto w = scan_closure_for_obstruction(p);
        if (!w) continue;
        ++witnessed;
        CHECK(validate(*w));
        CHECK(p.index_of(w->diagram).has_value());
        CHECK_FALSE(is_ranked(p).ranked);
    }
    CHECK(witnessed > 3);
}
