#include <doctest.h>

#include <numeric>
#include <random>

#include "setcolor/generators.hpp"
#include "setcolor/hall.hpp"
#include "setcolor/solver.hpp"
#include "setcolor/venn.hpp"
#include "support.hpp"

using namespace setcolor;
using testsupport::at;

namespace {

Graph path(int k) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, e);
}
Graph triangle() { return Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {0, 2}}); }

ColorSet random_subset(std::mt19937_64& rng, int universe, int size) {
    std::vector<int> pool(at(universe));
    std::iota(pool.begin(), pool.end(), 1);
    ColorSet s;
    for (int i = 0; i < size; ++i) {
        const auto j = at(i) + uniform_below(rng, pool.size() - at(i));
        std::swap(pool[at(i)], pool[j]);
        s.insert(pool[at(i)]);
    }
    return s;
}

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(uniform_below(rng, 100)) < percent) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("color sets") {
    ColorSet s{3, 1, 64};
    CHECK(s.size() == 3);
    CHECK(s.colors() == std::vector<int>{1, 3, 64});
    CHECK(s.min() == 1);
    CHECK(s.lowest(2) == ColorSet{1, 3});
    CHECK((s - ColorSet{1}) == ColorSet{3, 64});
    CHECK(ColorSet::range(2, 4) == ColorSet{2, 3, 4});
    CHECK(ColorSet::range(5, 4).empty());
    CHECK_THROWS_AS(s.insert(65), std::out_of_range);
    CHECK_THROWS_AS(ColorSet{}.min(), std::logic_error);
    int count = 0;
    for_each_subset(ColorSet::range(1, 6), 3, [&](ColorSet) { return ++count > 0; });
    CHECK(count == 20);
}

TEST_CASE("coloring checks") {
    const Graph edge = path(2);
    const ListAssignment lists(2, ColorSet::range(1, 9));
    const Demand three = uniform_demand(2, 3);
    CHECK(check_coloring(edge, lists, three, SetColoring{{1, 2, 3}, {4, 5, 6}}));
    const Verdict shared = check_coloring(edge, lists, three, SetColoring{{1, 2, 3}, {3, 4, 5}});
    CHECK_FALSE(shared);
    CHECK(shared.vertex == 0);
    CHECK(shared.other == 1);
    const Verdict short_set = check_coloring(edge, lists, three, SetColoring{{1, 2}, {4, 5, 6}});
    CHECK_FALSE(short_set);
    CHECK(short_set.vertex == 0);
    CHECK_FALSE(check_coloring(edge, ListAssignment(2, ColorSet{1, 2, 3}), three, SetColoring{{1, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("solver examples") {
    const Demand three = uniform_demand(3, 3);
    CHECK_FALSE(solve(triangle(), ListAssignment(3, ColorSet::range(1, 5)), three));
    const ListAssignment disjoint{ColorSet{1, 2, 3}, ColorSet{4, 5, 6}, ColorSet{7, 8, 9}};
    const auto phi = solve(triangle(), disjoint, three);
    REQUIRE(phi);
    CHECK(*phi == disjoint);
    CHECK_THROWS_AS(solve(path(17), ListAssignment(17, ColorSet::range(1, 6)), uniform_demand(17, 3)), SearchGuardError);
}

TEST_CASE("path with lists of sizes 5, 8, 5 is always colorable") {
    for_each_cell_vector(std::vector<int>{5, 8, 5}, [&](const CellVector& cells) {
        const ListAssignment lists = lists_from_cells(3, cells);
        const auto phi = solve(path(3), lists, uniform_demand(3, 3));
        REQUIRE(phi);
        CHECK(check_coloring(path(3), lists, uniform_demand(3, 3), *phi));
    });
}

TEST_CASE("solver agrees with naive enumeration on random graphs up to 9 vertices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 9));
        const Graph g = random_graph(rng, n, 35);
        ListAssignment lists;
        Demand f;
        for (int v = 0; v < n; ++v) {
            const int k = 1 + static_cast<int>(uniform_below(rng, 3));
            f.push_back(k);
            lists.push_back(random_subset(rng, 9, k + static_cast<int>(uniform_below(rng, 4))));
        }
        const auto phi = solve(g, lists, f);
        CHECK(phi.has_value() == testsupport::naive_colorable(g, lists, f));
        if (phi) CHECK(check_coloring(g, lists, f, *phi));
    }
}

TEST_CASE("colorability is invariant under renaming colors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 6));
        const Graph g = random_graph(rng, n, 50);
        ListAssignment lists;
        for (int v = 0; v < n; ++v) lists.push_back(random_subset(rng, 10, 3 + static_cast<int>(uniform_below(rng, 4))));
        std::vector<int> perm(20);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        ListAssignment renamed;
        for (const auto& l : lists) {
            ColorSet r;
            for (int c : l.colors()) r.insert(perm[at(c - 1)]);
            renamed.push_back(r);
        }
        const Demand f = uniform_demand(n, 2);
        CHECK(solve(g, lists, f).has_value() == solve(g, renamed, f).has_value());
    }
}

TEST_CASE("reduce_lists") {
    const Graph edge = path(2);
    const ListAssignment lists{ColorSet::range(1, 5), ColorSet::range(1, 5)};
    const Demand f = uniform_demand(2, 3);
    const ReducedInstance same = reduce_lists(edge, lists, f, SetColoring(2));
    CHECK(same.lists == lists);
    CHECK(same.demand == f);
    const ReducedInstance r = reduce_lists(edge, lists, f, SetColoring{ColorSet{}, ColorSet{1, 2}});
    CHECK(r.lists[0] == ColorSet{3, 4, 5});
    CHECK(r.demand[0] == 3);
    CHECK(r.demand[1] == 1);
    CHECK_THROWS_AS(reduce_lists(edge, lists, f, SetColoring{ColorSet{1}, ColorSet{1}}), PreconditionError);
}

TEST_CASE("reduce_lists round trip on random instances") {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 6));
        const Graph g = random_graph(rng, n, 40);
        ListAssignment lists;
        for (int v = 0; v < n; ++v) lists.push_back(random_subset(rng, 12, 6 + static_cast<int>(uniform_below(rng, 4))));
        const Demand f = uniform_demand(n, 3);
        // psi: one color per vertex from a greedy pass, skipped where it would conflict
        SetColoring psi(at(n));
        for (int v = 0; v < n; ++v) {
            if (uniform_below(rng, 2) == 0) continue;
            for (int c : lists[at(v)].colors()) {
                bool free = true;
                for (VertexId u : g.neighbors(v)) free = free && !psi[at(u)].contains(c);
                if (free) {
                    psi[at(v)] = ColorSet{c};
                    break;
                }
            }
        }
        const ReducedInstance r = reduce_lists(g, lists, f, psi);
        const auto rest = solve(g, r.lists, r.demand);
        if (!rest) continue;
        ++checked;
        CHECK(check_coloring(g, lists, f, combine(*rest, psi)));
    }
    CHECK(checked > 100);
}

TEST_CASE("greedy coloring") {
    const Graph one = Graph::from_edges(1, std::vector<std::pair<VertexId, VertexId>>{});
    const SetColoring single = greedy_color(one, ListAssignment{ColorSet{2, 4, 6}}, Demand{3}, std::vector<VertexId>{0});
    CHECK(single[0] == ColorSet{2, 4, 6});

    const ListAssignment two{ColorSet{1, 2, 3}, ColorSet::range(1, 6)};
    const SetColoring p2 = greedy_color(path(2), two, uniform_demand(2, 3), std::vector<VertexId>{0, 1});
    CHECK(check_coloring(path(2), two, uniform_demand(2, 3), p2));

    // sizes (4, 5, 2, 3), demands (2, 2, 2, 1), order v3 v4 v2 v1
    const ListAssignment l{ColorSet{1, 2, 3, 4}, ColorSet{1, 2, 3, 4, 5}, ColorSet{1, 2}, ColorSet{1, 2, 3}};
    const Demand f{2, 2, 2, 1};
    const std::vector<VertexId> order{2, 3, 1, 0};
    CHECK_FALSE(greedy_violation(path(4), l, f, order));
    CHECK(check_coloring(path(4), l, f, greedy_color(path(4), l, f, order)));

    CHECK(greedy_violation(path(2), ListAssignment{ColorSet{1, 2, 3}, ColorSet{1, 2, 3, 4, 5}}, uniform_demand(2, 3),
                           std::vector<VertexId>{0, 1}) == 1);
    CHECK_THROWS_AS(greedy_color(path(2), ListAssignment{ColorSet{1, 2, 3}, ColorSet{1, 2, 3, 4, 5}},
                                 uniform_demand(2, 3), std::vector<VertexId>{0, 1}),
                    GreedyPreconditionError);
}

TEST_CASE("greedy never fails when its inequality holds") {
    std::mt19937_64 rng(29);
    int run = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 7));
        const Graph g = random_graph(rng, n, 40);
        Demand f;
        ListAssignment lists;
        for (int v = 0; v < n; ++v) f.push_back(1 + static_cast<int>(uniform_below(rng, 3)));
        for (int v = 0; v < n; ++v) {
            int need = f[at(v)];
            for (VertexId u : g.neighbors(v))
                if (u < v) need += f[at(u)];
            lists.push_back(random_subset(rng, 30, std::min(30, need + static_cast<int>(uniform_below(rng, 2)))));
        }
        std::vector<VertexId> order(at(n));
        std::iota(order.begin(), order.end(), 0);
        if (greedy_violation(g, lists, f, order)) continue;
        ++run;
        CHECK(check_coloring(g, lists, f, greedy_color(g, lists, f, order)));
    }
    CHECK(run > 1000);
}

TEST_CASE("triangle Hall test") {
    const auto all9 = triangle_colorable({ColorSet::range(1, 9), ColorSet::range(1, 9), ColorSet::range(1, 9)});
    CHECK(all9.colorable());
    const auto pair = triangle_colorable({ColorSet::range(1, 5), ColorSet::range(1, 5), ColorSet::range(1, 12)});
    CHECK_FALSE(pair.colorable());
    CHECK(pair.certificate.failure == HallFailure::Pair);
    CHECK(pair.certificate.witness == std::vector<int>{0, 1});
    const auto single = triangle_colorable({ColorSet{1, 2}, ColorSet::range(3, 8), ColorSet::range(9, 14)});
    CHECK(single.certificate.failure == HallFailure::Single);
    const auto triple = triangle_colorable({ColorSet::range(1, 6), ColorSet::range(3, 8), ColorSet{1, 2, 3, 6, 7, 8}});
    CHECK(triple.certificate.failure == HallFailure::Triple);
    CHECK(triple.certificate.triple_union == 8);
}

TEST_CASE("triangle Hall test agrees with search on every pattern with lists up to 5") {
    // universe is at most 15 here; the 9-color universe of the module example is a subset
    int cases = 0;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 5; ++c)
                for_each_cell_vector(std::vector<int>{a, b, c}, [&](const CellVector& cells) {
                    const ListAssignment l = lists_from_cells(3, cells);
                    const auto h = triangle_colorable({l[0], l[1], l[2]});
                    const bool naive = testsupport::naive_colorable(triangle(), l, uniform_demand(3, 3));
                    CHECK(h.colorable() == naive);
                    if (h.colorable()) CHECK(check_coloring(triangle(), l, uniform_demand(3, 3), {h.coloring->begin(), h.coloring->end()}));
                    ++cases;
                });
    CHECK(cases > 1000);
}

TEST_CASE("clique coloring by matching") {
    const auto ok = clique_coloring(std::vector<ColorSet>{ColorSet{1, 2}, ColorSet{2, 3}}, std::vector<int>{1, 2});
    REQUIRE(ok);
    CHECK((*ok)[0] == ColorSet{1});
    CHECK_FALSE(clique_coloring(std::vector<ColorSet>{ColorSet{1, 2}, ColorSet{1, 2}}, std::vector<int>{1, 2}));
}

TEST_CASE("Venn cells enumerate assignments up to renaming") {
    // two lists of size 2: overlap 0, 1 or 2
    CHECK(venn_assignments(std::vector<int>{2, 2}).size() == 3);
    int count = 0;
    for_each_cell_vector(std::vector<int>{1, 1, 1}, [&](const CellVector& cells) {
        const ListAssignment l = lists_from_cells(3, cells);
        for (const auto& s : l) CHECK(s.size() == 1);
        ++count;
    });
    // partitions of three labelled lists by shared color: 5 (Bell number)
    CHECK(count == 5);
    int bounded = 0;
    for_each_cell_vector_bounded(2, 2, [&](const CellVector&) { ++bounded; });
    // cells (a, b, ab) with a + b + ab <= 2: C(5, 3)
    CHECK(bounded == 10);
}
