#pragma once

// Shared test helpers: independent oracles, the graph corpus and configuration hosts.
// The oracles deliberately avoid the library's own search code.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "setcolor/coloring.hpp"
#include "setcolor/generators.hpp"
#include "setcolor/plane_graph.hpp"
#include "setcolor/reducer.hpp"

namespace testsupport {

using namespace setcolor;

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

// ---- oracles ----------------------------------------------------------------------

/// Every simple cycle of length `len` as a canonical vertex sequence (smallest vertex
/// first, then the smaller of its two neighbors on the cycle), by plain DFS.
inline std::set<std::vector<VertexId>> brute_cycles(const Graph& g, int len) {
    std::set<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::vector<char> used(at(g.size()), 0);
    std::function<void()> dfs = [&]() {
        if (static_cast<int>(path.size()) == len) {
            if (!g.adjacent(path.back(), path.front())) return;
            std::vector<VertexId> c = path;
            const auto m = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), m, c.end());
            if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
            out.insert(c);
            return;
        }
        for (VertexId u = 0; u < g.size(); ++u) {
            if (used[at(u)] || !g.adjacent(path.back(), u)) continue;
            used[at(u)] = 1;
            path.push_back(u);
            dfs();
            path.pop_back();
            used[at(u)] = 0;
        }
    };
    for (VertexId s = 0; s < g.size(); ++s) {
        path = {s};
        used.assign(at(g.size()), 0);
        used[at(s)] = 1;
        dfs();
    }
    return out;
}

/// (L:f)-colorability by enumerating f(v)-subsets of L(v) vertex by vertex in id order,
/// checking only edges to already colored vertices.
inline bool naive_colorable(const Graph& g, const ListAssignment& lists, const Demand& f) {
    const int n = g.size();
    std::vector<ColorSet> phi(at(n));
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return true;
        const std::vector<int> pool = lists[at(v)].colors();
        const int k = f[at(v)];
        if (k > static_cast<int>(pool.size())) return false;
        std::vector<int> pick(at(k));
        std::function<bool(int, int)> choose = [&](int i, int from) -> bool {
            if (i == k) {
                ColorSet s;
                for (int p : pick) s.insert(p);
                for (VertexId u : g.neighbors(v))
                    if (u < v && phi[at(u)].intersects(s)) return false;
                phi[at(v)] = s;
                return go(v + 1);
            }
            for (int j = from; j < static_cast<int>(pool.size()); ++j) {
                pick[at(i)] = pool[at(j)];
                if (choose(i + 1, j + 1)) return true;
            }
            return false;
        };
        return choose(0, 0);
    };
    return go(0);
}

/// V - E + F == 1 + components.
inline bool euler_holds(const PlaneGraph& g) {
    const auto comps = static_cast<int>(g.graph().components().size());
    return g.vertex_count() - g.edge_count() + static_cast<int>(g.faces().size()) == 1 + comps;
}

/// One representative per isomorphism class of graphs on n <= 5 vertices.
inline std::vector<Graph> graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> perm(at(n));
    std::set<unsigned> seen;
    std::vector<Graph> out;
    const auto index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<unsigned>(std::find(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
    };
    for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
        unsigned canon = mask;
        for (int i = 0; i < n; ++i) perm[at(i)] = i;
        do {
            unsigned m = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if (mask >> e & 1U) m |= 1U << index(perm[at(pairs[e].first)], perm[at(pairs[e].second)]);
            canon = std::min(canon, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (canon >> e & 1U) edges.push_back(pairs[e]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

// ---- corpus -----------------------------------------------------------------------

struct Named {
    std::string name;
    PlaneGraph graph;
};

/// Closed class members built from local patterns: 6-faces ringed by triangles, with
/// every vertex of degree 3.
inline PlaneGraph truncated_tetrahedron() {
    std::vector<std::vector<VertexId>> k4{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    return truncate_cubic(PlaneGraph::build(k4));
}

/// Connected class members for the discharging checks.
inline std::vector<Named> discharge_corpus() {
    std::vector<Named> out;
    for (const auto& [r, c] : {std::pair{2, 3}, {3, 3}, {4, 4}, {5, 6}, {6, 8}})
        out.push_back({"hex" + std::to_string(r) + "x" + std::to_string(c), hex_fragment(r, c)});
    for (const auto& [k, p] : {std::pair{1, 1}, {2, 1}, {3, 2}, {4, 3}})
        out.push_back({"chain" + std::to_string(k) + "_" + std::to_string(p), triangle_chain(k, p)});
    for (const auto& [k, p] : {std::pair{2, 2}, {3, 1}, {4, 2}, {6, 1}})
        out.push_back({"ring" + std::to_string(k) + "_" + std::to_string(p), triangle_ring(k, p)});
    out.push_back({"trunc_tetra", truncated_tetrahedron()});
    for (int s = 0; s < 4; ++s)
        out.push_back({"trunc_cubic" + std::to_string(s), truncate_cubic(random_cubic_plane(6 + 2 * s, 500 + s))});
    for (int s = 0; s < 4; ++s) {
        RandomGraphOptions o;
        o.saturate = s % 2 == 1;
        out.push_back({"random" + std::to_string(s), random_class_graph(900 + static_cast<std::uint64_t>(s), o)});
    }
    return out;
}

/// Class members with 10..60 vertices for the end-to-end runs.
inline std::vector<Named> e2e_corpus() {
    std::vector<Named> out;
    for (int s = 0; s < 24; ++s) {
        RandomGraphOptions o;
        o.saturate = s % 2 == 1;
        out.push_back({"random" + std::to_string(s), random_class_graph(1000 + static_cast<std::uint64_t>(s), o)});
    }
    for (int s = 0; s < 18; ++s) {
        const int base = 4 + 2 * (s % 9);
        out.push_back({"trunc_cubic" + std::to_string(s),
                       truncate_cubic(random_cubic_plane(base, 2000 + static_cast<std::uint64_t>(s)))});
    }
    for (const auto& [r, c] : {std::pair{2, 5}, {3, 4}, {4, 6}, {5, 5}, {6, 7}, {7, 8}})
        out.push_back({"hex" + std::to_string(r) + "x" + std::to_string(c), hex_fragment(r, c)});
    for (const auto& [k, p] : {std::pair{4, 1}, {5, 2}, {8, 3}})
        out.push_back({"chain" + std::to_string(k) + "_" + std::to_string(p), triangle_chain(k, p)});
    for (const auto& [k, p] : {std::pair{3, 2}, {6, 2}, {10, 3}})
        out.push_back({"ring" + std::to_string(k) + "_" + std::to_string(p), triangle_ring(k, p)});
    return out;
}

// ---- configuration hosts ----------------------------------------------------------

/// A host graph built around one configuration: the core edges plus pendant paths of
/// two edges that raise each core vertex to its target degree. The host has at most
/// one cycle, so any rotation embeds it in the plane.
struct Fixture {
    ConfigKind kind;
    PlaneGraph host;
    std::vector<VertexId> witness;  ///< expected witness vertex set, sorted
};

inline Fixture make_fixture(ConfigKind kind, int core, const std::vector<std::pair<VertexId, VertexId>>& edges,
                            const std::vector<int>& degree, std::vector<VertexId> witness) {
    std::vector<std::vector<VertexId>> rot(at(core));
    const auto join = [&](VertexId a, VertexId b) {
        rot[at(a)].push_back(b);
        rot[at(b)].push_back(a);
    };
    for (const auto& [a, b] : edges) join(a, b);
    for (VertexId v = 0; v < core; ++v)
        while (static_cast<int>(rot[at(v)].size()) < degree[at(v)]) {
            const auto x = static_cast<VertexId>(rot.size());
            rot.emplace_back();
            rot.emplace_back();
            join(v, x);
            join(x, x + 1);
        }
    std::sort(witness.begin(), witness.end());
    return {kind, PlaneGraph::build(std::move(rot)), std::move(witness)};
}

/// One host per configuration kind, in priority order.
inline std::vector<Fixture> config_fixtures() {
    using K = ConfigKind;
    return {
        make_fixture(K::Deg2, 3, {{0, 1}, {1, 2}}, {3, 2, 3}, {1}),
        make_fixture(K::Path33, 4, {{0, 1}, {1, 2}, {2, 3}}, {3, 3, 4, 3}, {0, 1, 2, 3}),
        make_fixture(K::Tria3, 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, {4, 3, 4, 3}, {0, 1, 2, 3}),
        make_fixture(K::Cycle6, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}, {3, 4, 4, 3, 4, 4},
                     {0, 1, 2, 3, 4, 5}),
        make_fixture(K::Vert4, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {4, 3, 3, 3, 4}, {0, 1, 2, 3}),
        make_fixture(K::Path34, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {3, 4, 3, 4, 3}, {0, 1, 2, 3, 4}),
        make_fixture(K::Vert5M, 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {3, 4}}, {5, 3, 3, 3, 3, 4},
                     {0, 1, 2, 3, 4}),
        make_fixture(K::Vert5N3, 7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}}, {5, 3, 3, 3, 4, 4, 3},
                     {0, 1, 2, 3, 6}),
        make_fixture(K::Vert5P43, 8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {2, 7}},
                     {3, 4, 5, 3, 3, 3, 4, 4}, {0, 1, 2, 3, 4, 5}),
    };
}

/// The configuration of the fixture's kind whose witness is the expected vertex set.
inline std::optional<Configuration> fixture_config(const Fixture& f) {
    for (const auto& c : find_all(f.host, {}, f.kind)) {
        std::vector<VertexId> w = c.witness;
        std::sort(w.begin(), w.end());
        if (w == f.witness) return c;
    }
    return std::nullopt;
}

}  // namespace testsupport
