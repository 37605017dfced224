#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kohnert/checkered.hpp"
#include "kohnert/key.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/verify.hpp"

using namespace kohnert;

namespace {
// a long pure composition whose factorization uses every part shape
const Composition kLongPure{25, 22, 18, 18, 17, 16, 14, 19, 13, 10, 8, 8, 7, 8, 8, 7, 8, 7, 5,
                            5,  6,  5,  6,  5,  4,  4,  6,  2,  2, 2,  3, 3, 2, 3, 2, 3, 3};
}

TEST_CASE("key diagram construction") {
    Diagram d = key_diagram(Composition{0, 3, 4, 2, 3});
    Diagram expected{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
                     {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}};
    CHECK(d == expected);
    CHECK(key_diagram(Composition{0, 0, 0}) == Diagram{});
    CHECK(key_diagram(Composition{0, 2, 2}) == Diagram{{2, 1}, {2, 2}, {3, 1}, {3, 2}});
    CHECK(key_diagram(Composition{0, 2, 2}) == raised_square(2));
    CHECK_THROWS_AS((Composition{-1}), std::invalid_argument);
}

TEST_CASE("sorted key diagram is the unique minimal element") {
    CHECK(key_min(Composition{0, 3, 4, 2, 3}) == key_diagram(Composition{4, 3, 3, 2, 0}));
    CHECK(key_min(Composition{3, 2, 1}) == key_diagram(Composition{3, 2, 1}));
    CHECK(key_min(Composition{0, 2}) == Diagram{{1, 1}, {1, 2}});

    KohnertPoset p = kd_closure(key_diagram(Composition{0, 3, 4, 2, 3}));
    REQUIRE(p.minimals.size() == 1);
    CHECK(p.node(p.minimals.front()) == key_min(Composition{0, 3, 4, 2, 3}));
}

TEST_CASE("purity") {
    CHECK(is_pure(kLongPure));
    CHECK_FALSE(is_pure(Composition{0, 1, 2}));
    CHECK_FALSE(is_pure(Composition{0, 2, 1}));
    CHECK_FALSE(is_pure_by_forbidden_triples(Composition{0, 2, 1}));  // second pattern
    CHECK(is_pure(Composition{1, 2, 2}));  // 1+1 = 2 is not a wide gap
    CHECK(is_pure(Composition{}));
    CHECK(is_pure(Composition{5}));

    SECTION("the two purity scans agree") {
        for (const Composition& a : enumerate_compositions(3, 4))
            CHECK(is_pure_by_forbidden_triples(a) == is_pure_by_reduced_patterns(a));
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> len(0, 9), entry(0, 6);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> v(static_cast<std::size_t>(len(rng)));
            for (int& e : v) e = entry(rng);
            Composition a(v);
            CHECK(is_pure_by_forbidden_triples(a) == is_pure_by_reduced_patterns(a));
        }
    }
}

TEST_CASE("pure decomposition of the long composition") {
    PureDecomposition dec = pure_decompose(kLongPure);
    REQUIRE(dec.parts.size() == 5);
    CHECK(dec.parts[0].comp == Composition{25, 22, 18, 18, 17, 16, 14, 19});
    CHECK(dec.parts[0].type == PartType::TrailingJump);
    CHECK(dec.parts[1].comp == Composition{13, 10, 8, 8});
    CHECK(dec.parts[1].type == PartType::WeaklyDecreasing);
    CHECK(dec.parts[2].comp == Composition{7, 8, 8, 7, 8, 7});
    CHECK(dec.parts[2].type == PartType::TwoValued);
    CHECK(dec.parts[3].comp == Composition{5, 5, 6, 5, 6, 5, 4, 4, 6});
    CHECK(dec.parts[3].type == PartType::DipAndReturn);
    CHECK(dec.parts[4].comp == Composition{2, 2, 2, 3, 3, 2, 3, 2, 3, 3});
    CHECK(dec.parts[4].type == PartType::TwoValued);
}

TEST_CASE("pure decomposition corner cases") {
    PureDecomposition dec = pure_decompose(Composition{5, 3, 1});
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].type == PartType::WeaklyDecreasing);

    dec = pure_decompose(Composition{2, 3, 2, 3});
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].type == PartType::TwoValued);

    CHECK_THROWS_AS(pure_decompose(Composition{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("decomposition invariants over small and random pure compositions") {
    std::mt19937 rng(57);
    std::uniform_int_distribution<int> len(1, 10), entry(0, 5);
    std::vector<Composition> inputs = enumerate_compositions(3, 4);
    for (int trial = 0; trial < 800; ++trial) {
        std::vector<int> v(static_cast<std::size_t>(len(rng)));
        for (int& e : v) e = entry(rng);
        inputs.push_back(Composition(v));
    }
    int pure_count = 0;
    for (const Composition& a : inputs) {
        if (!is_pure(a) || a.empty()) continue;
        ++pure_count;
        PureDecomposition dec = pure_decompose(a);
        std::vector<int> concat;
        for (const auto& part : dec.parts) {
            CHECK(part_matches_type(part.comp, part.type));
            concat.insert(concat.end(), part.comp.entries().begin(), part.comp.entries().end());
        }
        CHECK(Composition(concat) == a);
        for (std::size_t i = 0; i + 1 < dec.parts.size(); ++i) {
            const auto& prev = dec.parts[i].comp.entries();
            const auto& next = dec.parts[i + 1].comp.entries();
            CHECK(*std::min_element(prev.begin(), prev.end()) >=
                  *std::max_element(next.begin(), next.end()));
        }
    }
    CHECK(pure_count > 200);
}

TEST_CASE("key report") {
    AnalysisReport r = key_report(Composition{0, 3, 4, 2, 3});
    CHECK(r.bounded);
    CHECK_FALSE(r.ranked);  // 0 < 3 < 4 is a forbidden ascent pattern
    CHECK(r.b_value == 27);

    r = key_report(Composition{2, 2});
    CHECK(r.bounded);
    CHECK(r.ranked);
    CHECK(r.b_value == 6);

    r = key_report(Composition{1, 0});
    CHECK(r.bounded);
    CHECK(r.ranked);
    CHECK(r.b_value == 1);
}

TEST_CASE("row swaps stay inside the closure") {
    CHECK(row_swap_member(Composition{1, 3}, 1, 2) == key_diagram(Composition{3, 1}));
    CHECK(row_swap_member(Composition{0, 3, 4, 2, 3}, 1, 2) ==
          key_diagram(Composition{3, 0, 4, 2, 3}));
    KohnertPoset p = kd_closure(key_diagram(Composition{1, 3}));
    CHECK(p.index_of(key_diagram(Composition{3, 1})).has_value());

    CHECK_THROWS_AS(row_swap_member(Composition{3, 1}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(row_swap_member(Composition{1, 3}, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(row_swap_member(Composition{1, 3}, 1, 3), std::invalid_argument);
}
