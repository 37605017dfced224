#include <catch2/catch_amalgamated.hpp>

#include "kohnert/key.hpp"
#include "kohnert/poset.hpp"
#include "oracles.hpp"

using namespace kohnert;

namespace {

const Diagram kD0{{1, 3}, {2, 1}, {2, 2}, {3, 2}};
const Diagram kD1{{1, 2}, {1, 3}, {2, 1}, {3, 2}};
const Diagram kD2{{1, 1}, {1, 2}, {1, 3}, {3, 2}};
const Diagram kD3{{1, 2}, {1, 3}, {2, 1}, {2, 2}};
const Diagram kD4{{1, 1}, {1, 2}, {1, 3}, {2, 2}};

bool has_edge(const KohnertPoset& p, const Diagram& a, const Diagram& b,
              const AdjacencyList& edges) {
    auto ia = p.index_of(a), ib = p.index_of(b);
    REQUIRE(ia);
    REQUIRE(ib);
    const auto& lst = edges[static_cast<std::size_t>(*ia)];
    return std::find(lst.begin(), lst.end(), *ib) != lst.end();
}

}  // namespace

TEST_CASE("closure of the running four-cell example") {
    KohnertPoset p = kd_closure(kD0);
    REQUIRE(p.nodes.size() == 5);
    for (const Diagram& d : {kD0, kD1, kD2, kD3, kD4}) CHECK(p.index_of(d).has_value());
    CHECK(p.node(p.root) == kD0);

    SECTION("a single move edge need not be a cover") {
        CHECK(has_edge(p, kD0, kD3, p.move_edges));
        CHECK_FALSE(has_edge(p, kD0, kD3, p.cover_edges));
        CHECK(has_edge(p, kD0, kD1, p.cover_edges));
    }

    SECTION("fixedness determines the minimal elements") {
        std::vector<Diagram> mins = minimal_elements(p);
        // Both D3 and D4 are fixed by all Kohnert moves: the rightmost row-2
        // cell of D3 is blocked below, and no other cell of a row may move.
        std::vector<Diagram> expected{kD3, kD4};
        std::sort(expected.begin(), expected.end());
        std::sort(mins.begin(), mins.end());
        CHECK(mins == expected);
        for (const Diagram& d : p.nodes)
            CHECK(oracles::is_fixed(d) ==
                  (std::find(mins.begin(), mins.end(), d) != mins.end()));
        CHECK_FALSE(is_bounded(p));
    }

    SECTION("b is the least rowsum over the minimals") { CHECK(b_of(p) == 5); }

    SECTION("order and intervals") {
        CHECK(order_leq(p, kD3, kD0));
        CHECK(order_leq(p, kD4, kD4));
        CHECK_FALSE(order_leq(p, kD0, kD4));
        CHECK_THROWS_AS(order_leq(p, Diagram{{9, 9}}, kD0), std::invalid_argument);

        // D3 is fixed, so it cannot lie above D4: the interval omits it
        KohnertPoset full = interval(p, kD4, kD0);
        CHECK(full.nodes.size() == 4);
        CHECK_FALSE(full.index_of(kD3).has_value());
        CHECK(interval(p, kD3, kD3).nodes.size() == 1);
        KohnertPoset sub = interval(p, kD2, kD1);
        REQUIRE(sub.nodes.size() == 2);
        CHECK(sub.index_of(kD1).has_value());
        CHECK(sub.index_of(kD2).has_value());
        CHECK(sub.node(sub.root) == kD1);
        CHECK_THROWS_AS(interval(p, kD0, kD4), std::invalid_argument);
    }

    SECTION("node cap raises a resource error") {
        Limits tight;
        tight.node_cap = 2;
        CHECK_THROWS_AS(kd_closure(kD0, tight), resource_limit_error);
    }
}

TEST_CASE("one-cell-per-column staggered example poset") {
    KohnertPoset p = kd_closure(Diagram{{2, 1}, {3, 2}, {2, 3}});
    CHECK(p.nodes.size() == 8);
    std::size_t covers = 0;
    for (const auto& lst : p.cover_edges) covers += lst.size();
    // every move in a one-cell-per-column closure drops one row, so all 9
    // move edges are covers
    CHECK(covers == 9);
    RankCertificate cert = is_ranked(p);
    REQUIRE(cert.ranked);
    CHECK(*std::max_element(cert.ranks.begin(), cert.ranks.end()) == 4);
    CHECK(*std::min_element(cert.ranks.begin(), cert.ranks.end()) == 0);
    CHECK(is_bounded(p));
    CHECK(maximal_chain_lengths(p) == std::set<std::size_t>{4});
}

TEST_CASE("degenerate closures") {
    KohnertPoset fixed = kd_closure(Diagram{{1, 1}});
    CHECK(fixed.nodes.size() == 1);
    CHECK(fixed.minimals == std::vector<int>{0});
    CHECK(b_of(fixed) == 1);
    CHECK(maximal_chain_lengths(fixed) == std::set<std::size_t>{0});

    KohnertPoset empty = kd_closure(Diagram{});
    CHECK(empty.nodes.size() == 1);
    CHECK(is_bounded(empty));
    CHECK(is_ranked(empty).ranked);
    CHECK(b_of(empty) == 0);
}

TEST_CASE("abstract poset rank analysis") {
    // five elements with covers 2>1, 3>2, 4>2, 5>3, 5>4
    AdjacencyList covers(5);
    covers[1] = {0};
    covers[2] = {1};
    covers[3] = {1};
    covers[4] = {2, 3};
    RankCertificate cert = rank_covers(5, covers);
    REQUIRE(cert.ranked);
    CHECK(cert.ranks == std::vector<long long>{0, 1, 2, 2, 3});

    std::vector<int> topo{4, 2, 3, 1, 0};
    CHECK(maximal_chain_lengths_covers(covers, topo) == std::set<std::size_t>{3});

    SECTION("an odd cycle of constraints is a conflict") {
        AdjacencyList bad(3);  // 0 covers 1, 1 covers 2, 0 covers 2
        bad[0] = {1, 2};
        bad[1] = {2};
        RankCertificate c = rank_covers(3, bad);
        CHECK_FALSE(c.ranked);
        REQUIRE(c.conflict.has_value());
    }
}

TEST_CASE("chain lengths distinguish non-ranked key posets") {
    KohnertPoset p = kd_closure(key_diagram(Composition{0, 1, 2}));
    std::set<std::size_t> lengths = maximal_chain_lengths(p);
    CHECK(lengths.size() >= 2);
    CHECK_FALSE(is_ranked(p).ranked);

    Limits tight;
    tight.chain_cap = 2;
    CHECK_THROWS_AS(maximal_chain_lengths(p, tight), resource_limit_error);
}

TEST_CASE("b of the sorted key diagram") {
    CHECK(b_of(kd_closure(key_diagram(Composition{0, 3, 4, 2, 3}))) == 27);
}

TEST_CASE("poset structure agrees with the brute-force oracle") {
    std::mt19937 rng(777);
    int interesting = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Diagram d0 = oracles::random_diagram(rng, 4, 4, 7);
        KohnertPoset p = kd_closure(d0);
        oracles::Closure oc = oracles::closure_of(d0);
        REQUIRE(p.nodes.size() == oc.nodes.size());
        if (p.nodes.size() > 3) ++interesting;

        for (std::size_t u = 0; u < p.nodes.size(); ++u) {
            const std::size_t ou = oc.index(p.nodes[u]);
            // move edges: same neighbor sets
            std::set<Diagram> mine, theirs;
            for (int v : p.move_edges[u]) mine.insert(p.node(v));
            for (std::size_t j = 0; j < oc.nodes.size(); ++j)
                if (oc.edge[ou][j]) theirs.insert(oc.nodes[j]);
            CHECK(mine == theirs);
            // covers: transitive reduction equals the definitional covers
            mine.clear();
            theirs.clear();
            for (int v : p.cover_edges[u]) mine.insert(p.node(v));
            for (std::size_t j = 0; j < oc.nodes.size(); ++j)
                if (oc.cover[ou][j]) theirs.insert(oc.nodes[j]);
            CHECK(mine == theirs);
            // every move edge strictly lowers rowsum
            for (int v : p.move_edges[u]) CHECK(rowsum(p.node(v)) < rowsum(p.nodes[u]));
        }

        // the root is the unique node without incoming move edges
        std::vector<int> incoming(p.nodes.size(), 0);
        for (const auto& lst : p.move_edges)
            for (int v : lst) ++incoming[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < p.nodes.size(); ++i)
            CHECK((incoming[i] == 0) == (static_cast<int>(i) == p.root));

        // chain-length criterion matches the rank certificate on bounded posets
        if (p.nodes.size() <= 400) {
            std::set<std::size_t> lengths = oracles::chain_lengths(oc);
            CHECK(lengths == maximal_chain_lengths(p));
            if (is_bounded(p)) CHECK(is_ranked(p).ranked == (lengths.size() == 1));
        }

        // intervals of a ranked poset have maximal chains of a single length
        if (is_ranked(p).ranked && p.nodes.size() <= 100) {
            for (std::size_t lo = 0; lo < p.nodes.size(); lo += 3)
                for (std::size_t hi = 0; hi < p.nodes.size(); hi += 3) {
                    if (lo == hi || !order_leq(p, p.nodes[lo], p.nodes[hi])) continue;
                    KohnertPoset sub = interval(p, p.nodes[lo], p.nodes[hi]);
                    CHECK(maximal_chain_lengths(sub).size() == 1);
                }
        }
    }
    CHECK(interesting > 10);  // the generator is actually exercising closures
}
