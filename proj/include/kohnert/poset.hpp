#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"

namespace kohnert {

struct Limits {
    int max_coordinate = kDefaultMaxCoordinate;
    std::size_t node_cap = 1'000'000;
    std::size_t chain_cap = 10'000;
};

// Adjacency lists indexed by node id; targets sorted ascending.
using AdjacencyList = std::vector<std::vector<int>>;

// A cover edge (upper, lower) violating rank(upper) = rank(lower) + 1 under
// propagation. expected/actual refer to the endpoint that was already
// assigned when the edge re-reached it.
struct RankConflict {
    int upper = 0;
    int lower = 0;
    long long expected = 0;
    long long actual = 0;
};

struct RankCertificate {
    bool ranked = false;
    std::vector<long long> ranks;          // by node id, valid iff ranked
    std::optional<RankConflict> conflict;  // present iff not ranked
};

namespace detail {

inline AdjacencyList reverse_edges(const AdjacencyList& edges) {
    AdjacencyList rev(edges.size());
    for (std::size_t u = 0; u < edges.size(); ++u)
        for (int v : edges[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    for (auto& lst : rev) std::sort(lst.begin(), lst.end());
    return rev;
}

}  // namespace detail

// Rank-function existence on an arbitrary finite cover DAG. Each cover edge
// u -> v forces rank(u) = rank(v) + 1; propagation over the undirected Hasse
// graph per connected component either assigns consistent ranks (shifted so
// every component bottoms out at 0) or reports the offending edge.
inline RankCertificate rank_covers(std::size_t node_count, const AdjacencyList& cover_edges) {
    RankCertificate cert;
    std::vector<long long> rank(node_count, 0);
    std::vector<char> seen(node_count, 0);
    AdjacencyList preds = detail::reverse_edges(cover_edges);

    for (std::size_t seed = 0; seed < node_count; ++seed) {
        if (seen[seed]) continue;
        std::vector<int> component;
        std::deque<int> queue{static_cast<int>(seed)};
        seen[seed] = 1;
        rank[seed] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            component.push_back(x);
            auto visit = [&](int y, long long expected) {
                auto yi = static_cast<std::size_t>(y);
                if (!seen[yi]) {
                    seen[yi] = 1;
                    rank[yi] = expected;
                    queue.push_back(y);
                    return true;
                }
                return rank[yi] == expected;
            };
            for (int v : cover_edges[static_cast<std::size_t>(x)]) {
                if (!visit(v, rank[static_cast<std::size_t>(x)] - 1)) {
                    cert.conflict = RankConflict{x, v, rank[static_cast<std::size_t>(x)] - 1,
                                                 rank[static_cast<std::size_t>(v)]};
                    return cert;
                }
            }
            for (int u : preds[static_cast<std::size_t>(x)]) {
                if (!visit(u, rank[static_cast<std::size_t>(x)] + 1)) {
                    cert.conflict = RankConflict{u, x, rank[static_cast<std::size_t>(x)] + 1,
                                                 rank[static_cast<std::size_t>(u)]};
                    return cert;
                }
            }
        }
        long long low = rank[static_cast<std::size_t>(component.front())];
        for (int x : component) low = std::min(low, rank[static_cast<std::size_t>(x)]);
        for (int x : component) rank[static_cast<std::size_t>(x)] -= low;
    }
    cert.ranked = true;
    cert.ranks = std::move(rank);
    return cert;
}

// Set of maximal-chain lengths (in edges) of a cover DAG, via a per-node DP
// over achievable path lengths from the maximal elements. A maximal chain is
// exactly a cover path from a source to a sink of the DAG. `topo` must list
// node ids in a topological order of cover_edges (sources first).
inline std::set<std::size_t> maximal_chain_lengths_covers(const AdjacencyList& cover_edges,
                                                          const std::vector<int>& topo) {
    const std::size_t n = cover_edges.size();
    std::vector<char> has_pred(n, 0);
    for (const auto& lst : cover_edges)
        for (int v : lst) has_pred[static_cast<std::size_t>(v)] = 1;

    std::vector<std::set<std::size_t>> lengths(n);
    for (std::size_t u = 0; u < n; ++u)
        if (!has_pred[u]) lengths[u].insert(0);

    std::set<std::size_t> result;
    for (int u : topo) {
        auto ui = static_cast<std::size_t>(u);
        if (cover_edges[ui].empty()) {
            result.insert(lengths[ui].begin(), lengths[ui].end());
            continue;
        }
        for (int v : cover_edges[ui])
            for (std::size_t len : lengths[ui]) lengths[static_cast<std::size_t>(v)].insert(len + 1);
    }
    return result;
}

// KD(D0) with its order data. Nodes are deduplicated by canonical form and
// listed deterministically: BFS layer by layer, canonical order within a
// layer, with node 0 = D0. move_edges holds every single nontrivial Kohnert
// move between closure members; cover_edges is their transitive reduction.
struct KohnertPoset {
    std::vector<Diagram> nodes;
    AdjacencyList move_edges;
    AdjacencyList cover_edges;
    std::vector<int> minimals;  // ids with no outgoing move edge, ascending
    int root = 0;

    const Diagram& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }

    std::optional<int> index_of(const Diagram& d) const {
        auto it = index_.find(d);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Node ids sorted by descending rowsum: a topological order of move_edges
    // (and hence of cover_edges), since every move strictly lowers rowsum.
    std::vector<int> topological_order() const {
        std::vector<int> order(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return rowsum(nodes[static_cast<std::size_t>(a)]) >
                   rowsum(nodes[static_cast<std::size_t>(b)]);
        });
        return order;
    }

    std::unordered_map<Diagram, int> index_;
};

namespace detail {

// Transitive reduction of the move DAG. For each node u, a multi-source BFS
// from succ(u) marks everything reachable in >= 1 step from a successor;
// marked successors are implied by a longer path and dropped. The search
// prunes below the least successor rowsum, which no path can re-enter.
inline AdjacencyList transitive_reduction(const std::vector<Diagram>& nodes,
                                          const AdjacencyList& move_edges) {
    const std::size_t n = nodes.size();
    AdjacencyList covers(n);
    std::vector<long long> sums(n);
    for (std::size_t i = 0; i < n; ++i) sums[i] = rowsum(nodes[i]);

    std::vector<int> mark(n, -1);
    std::vector<int> queue;
    for (std::size_t u = 0; u < n; ++u) {
        const auto& succ = move_edges[u];
        if (succ.empty()) continue;
        long long floor = sums[static_cast<std::size_t>(succ.front())];
        for (int w : succ) floor = std::min(floor, sums[static_cast<std::size_t>(w)]);

        queue.clear();
        for (int w : succ) queue.push_back(w);
        std::size_t head = 0;
        while (head < queue.size()) {
            int w = queue[head++];
            if (sums[static_cast<std::size_t>(w)] <= floor) continue;
            for (int x : move_edges[static_cast<std::size_t>(w)]) {
                if (mark[static_cast<std::size_t>(x)] == static_cast<int>(u)) continue;
                mark[static_cast<std::size_t>(x)] = static_cast<int>(u);
                queue.push_back(x);
            }
        }
        for (int w : succ)
            if (mark[static_cast<std::size_t>(w)] != static_cast<int>(u)) covers[u].push_back(w);
    }
    return covers;
}

}  // namespace detail

// Breadth-first closure of d0 under nontrivial Kohnert moves.
inline KohnertPoset kd_closure(const Diagram& d0, const Limits& limits = {}) {
    check_coordinate_limit(d0, limits.max_coordinate);

    KohnertPoset poset;
    poset.nodes.push_back(d0);
    poset.index_.emplace(d0, 0);

    std::vector<std::pair<int, Diagram>> pending;  // raw edges found in this layer
    std::vector<int> layer{0};
    while (!layer.empty()) {
        pending.clear();
        std::set<Diagram> fresh;
        for (int u : layer) {
            const Diagram d = poset.nodes[static_cast<std::size_t>(u)];
            const int top = d.max_row();
            for (int r = 1; r <= top; ++r) {
                MoveResult mv = kohnert_move(d, r);
                if (!mv.moved) continue;
                if (!poset.index_.contains(mv.diagram)) fresh.insert(mv.diagram);
                pending.emplace_back(u, std::move(mv.diagram));
            }
        }
        layer.clear();
        for (const Diagram& d : fresh) {
            int id = static_cast<int>(poset.nodes.size());
            poset.index_.emplace(d, id);
            poset.nodes.push_back(d);
            layer.push_back(id);
            if (poset.nodes.size() > limits.node_cap)
                throw resource_limit_error("kd_closure: node cap of " +
                                           std::to_string(limits.node_cap) + " exceeded");
        }
        poset.move_edges.resize(poset.nodes.size());
        for (const auto& [u, d] : pending)
            poset.move_edges[static_cast<std::size_t>(u)].push_back(poset.index_.at(d));
    }

    poset.move_edges.resize(poset.nodes.size());
    for (auto& lst : poset.move_edges) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    for (std::size_t i = 0; i < poset.nodes.size(); ++i)
        if (poset.move_edges[i].empty()) poset.minimals.push_back(static_cast<int>(i));

    poset.cover_edges = detail::transitive_reduction(poset.nodes, poset.move_edges);
    return poset;
}

// Diagrams fixed by all Kohnert moves, i.e. nodes with no outgoing move edge.
inline std::vector<Diagram> minimal_elements(const KohnertPoset& p) {
    std::vector<Diagram> out;
    out.reserve(p.minimals.size());
    for (int id : p.minimals) out.push_back(p.node(id));
    return out;
}

// The cover (Hasse) edges. A single nontrivial move need not be a cover:
// edges implied by a 2+-step move path have been reduced away.
inline const AdjacencyList& hasse(const KohnertPoset& p) { return p.cover_edges; }

// Bounded <=> exactly one minimal element (the maximum D0 is always unique).
inline bool is_bounded(const KohnertPoset& p) { return p.minimals.size() == 1; }

inline RankCertificate is_ranked(const KohnertPoset& p) {
    return rank_covers(p.nodes.size(), p.cover_edges);
}

namespace detail {

inline std::vector<char> reachable_from(const AdjacencyList& edges, int start) {
    std::vector<char> seen(edges.size(), 0);
    std::vector<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int v : edges[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    }
    return seen;
}

}  // namespace detail

// a <= b in the Kohnert order: a reachable from b via move edges.
inline bool order_leq(const KohnertPoset& p, const Diagram& a, const Diagram& b) {
    auto ia = p.index_of(a);
    auto ib = p.index_of(b);
    if (!ia || !ib) throw std::invalid_argument("order_leq: diagram is not a closure node");
    if (*ia == *ib) return true;
    return detail::reachable_from(p.move_edges, *ib)[static_cast<std::size_t>(*ia)] != 0;
}

// Induced subposet on [a, b] = {z : a <= z <= b}. Move paths between interval
// members never leave the interval, so reachability (and hence the cover
// structure) restricts cleanly.
inline KohnertPoset interval(const KohnertPoset& p, const Diagram& a, const Diagram& b) {
    auto ia = p.index_of(a);
    auto ib = p.index_of(b);
    if (!ia || !ib) throw std::invalid_argument("interval: diagram is not a closure node");
    if (!order_leq(p, a, b)) throw std::invalid_argument("interval: a is not below b");

    std::vector<char> down = detail::reachable_from(p.move_edges, *ib);
    std::vector<char> up = detail::reachable_from(detail::reverse_edges(p.move_edges), *ia);

    KohnertPoset sub;
    std::vector<int> old_ids;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (!(down[i] && up[i])) continue;
        int id = static_cast<int>(sub.nodes.size());
        sub.nodes.push_back(p.nodes[i]);
        sub.index_.emplace(p.nodes[i], id);
        old_ids.push_back(static_cast<int>(i));
        if (static_cast<int>(i) == *ib) sub.root = id;
    }
    sub.move_edges.resize(sub.nodes.size());
    for (std::size_t ni = 0; ni < old_ids.size(); ++ni)
        for (int v : p.move_edges[static_cast<std::size_t>(old_ids[ni])])
            if (auto target = sub.index_of(p.node(v))) sub.move_edges[ni].push_back(*target);
    for (std::size_t i = 0; i < sub.nodes.size(); ++i)
        if (sub.move_edges[i].empty()) sub.minimals.push_back(static_cast<int>(i));
    sub.cover_edges = detail::transitive_reduction(sub.nodes, sub.move_edges);
    return sub;
}

// Lengths (in edges) of all maximal chains of the poset.
inline std::set<std::size_t> maximal_chain_lengths(const KohnertPoset& p,
                                                   const Limits& limits = {}) {
    if (p.nodes.size() > limits.chain_cap)
        throw resource_limit_error("maximal_chain_lengths: poset exceeds the chain cap of " +
                                   std::to_string(limits.chain_cap) + " nodes");
    return maximal_chain_lengths_covers(p.cover_edges, p.topological_order());
}

// b(D0) = min rowsum over the minimal elements.
inline long long b_of(const KohnertPoset& p) {
    long long best = 0;
    bool first = true;
    for (int id : p.minimals) {
        long long s = rowsum(p.node(id));
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

}  // namespace kohnert
