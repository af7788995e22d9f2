#include "setcolor/gadgets.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "setcolor/hall.hpp"
#include "setcolor/solver.hpp"

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Edges = std::vector<std::pair<VertexId, VertexId>>;

// ---------------------------------------------------------------------------
// small helpers

[[noreturn]] void broken(const std::string& what) {
    throw std::logic_error("gadget construction step failed: " + what);
}

int first(ColorSet s, const char* what) {
    if (s.empty()) broken(std::string("no color available for ") + what);
    return s.min();
}

ColorSet one(int c) {
    ColorSet s;
    s.insert(c);
    return s;
}

/// `must` plus the lowest colors of `from` up to k colors in total.
ColorSet fill(ColorSet must, ColorSet from, int k, const char* what) {
    ColorSet out = must | (from - must).lowest(k - must.size());
    if (out.size() != k || !must.subset_of(from)) broken(std::string("cannot fill ") + what);
    return out;
}

void need_count(std::span<const ColorSet> lists, std::size_t n, const char* who) {
    if (lists.size() != n)
        throw HypothesisError(std::string(who) + ": expected " + std::to_string(n) + " lists, got " +
                              std::to_string(lists.size()));
}

void need_sizes(std::span<const ColorSet> lists, std::span<const int> sizes, const char* who) {
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (lists[i].size() < sizes[i])
            throw HypothesisError(std::string(who) + ": list of vertex " + std::to_string(i) + " has " +
                                  std::to_string(lists[i].size()) + " colors, needs " + std::to_string(sizes[i]));
}

void need_pin(ColorSet pin, ColorSet list, int max, const char* who) {
    if (pin.size() > max)
        throw HypothesisError(std::string(who) + ": pin " + pin.to_string() + " has more than " +
                              std::to_string(max) + " colors");
    if (!pin.subset_of(list))
        throw HypothesisError(std::string(who) + ": pin " + pin.to_string() + " is not in the list " +
                              list.to_string());
}

/// Cuts `list` to `size` colors: `keep` first, then `prefer`, then the lowest others.
ColorSet trim(ColorSet list, int size, ColorSet keep, ColorSet prefer = {}) {
    keep &= list;
    ColorSet out = keep.lowest(size);
    out |= ((prefer & list) - out).lowest(size - out.size());
    out |= (list - out).lowest(size - out.size());
    return out;
}

/// Colors the subgraph of g induced by `part` exactly, or throws HypothesisError.
SetColoring witness(const Graph& g, std::span<const ColorSet> lists, const std::vector<VertexId>& part,
                    const char* who, const char* what) {
    ListAssignment sub;
    for (VertexId v : part) sub.push_back(lists[idx(v)]);
    auto phi = solve(g.induced(part), sub, uniform_demand(static_cast<int>(part.size()), 3));
    if (!phi) throw HypothesisError(std::string(who) + ": " + what + " is not (L:3)-colorable");
    SetColoring full(lists.size());
    for (std::size_t i = 0; i < part.size(); ++i) full[idx(part[i])] = (*phi)[i];
    return full;
}

/// One application of the list reduction lemma, followed by cutting every reduced
/// list down to the size the proof works with.
ReducedInstance reduce_to(const Graph& g, std::span<const ColorSet> lists, std::span<const int> demand,
                          std::span<const ColorSet> psi, std::span<const int> sizes) {
    ReducedInstance r = reduce_lists(g, lists, demand, psi);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (r.lists[i].size() < sizes[i])
            broken("reduced list of vertex " + std::to_string(i) + " is " + r.lists[i].to_string() + ", expected " +
                   std::to_string(sizes[i]) + " colors");
        r.lists[i] = r.lists[i].lowest(sizes[i]);
    }
    return r;
}

SetColoring finish(const Graph& g, std::span<const ColorSet> lists, SetColoring phi, const char* who) {
    const Verdict v = check_coloring(g, lists, uniform_demand(g.size(), 3), phi);
    if (!v) broken(std::string(who) + " produced an invalid coloring: " + v.violation);
    return phi;
}

/// Disjoint 3-sets from a1 and a2 (two adjacent vertices).
std::pair<ColorSet, ColorSet> color_edge(ColorSet a1, ColorSet a2) {
    // Colors only a1 can use go to the first vertex before anything else.
    ColorSet first_set = (a1 - a2).lowest(3);
    ColorSet rest = (a1 & a2) - first_set;
    first_set |= rest.lowest(3 - first_set.size());
    const ColorSet second_set = (a2 - first_set).lowest(3);
    if (first_set.size() != 3 || second_set.size() != 3) broken("edge with lists " + a1.to_string() + " " +
                                                                a2.to_string());
    return {first_set, second_set};
}

// ---------------------------------------------------------------------------
// paths

SetColoring p3_exact(const std::vector<ColorSet>& L, ColorSet pin1, ColorSet pin3) {
    static const Graph g = path_graph(3);
    const std::array<ColorSet, 3> psi{fill(pin1, L[0], 2, "p3 v1 pins"), ColorSet{}, fill(pin3, L[2], 1, "p3 v3 pin")};
    const std::array<int, 3> f1{1, 3, 2};
    const std::array<int, 3> s1{3, 5, 4};
    const auto r = reduce_to(g, L, uniform_demand(3, 3), psi, s1);
    const auto& Lp = r.lists;
    const int g1 = first(Lp[1] - Lp[2], "p3 gamma1");
    const int g2 = first(Lp[1] - (one(g1) | Lp[0]), "p3 gamma2");
    SetColoring phi(3);
    phi[1] = fill(one(g1) | one(g2), Lp[1], 3, "p3 v2");
    phi[0] = (Lp[0] - phi[1]).lowest(f1[0]);
    phi[2] = (Lp[2] - phi[1]).lowest(f1[2]);
    return combine(phi, psi);
}

SetColoring p4_exact(const std::vector<ColorSet>& L, ColorSet pin1, ColorSet pin4) {
    static const Graph g = path_graph(4);
    if (L[2] == L[3]) throw HypothesisError("p4: L(v3) = L(v4), so v3 v4 is not colorable");
    int beta = 0;
    int beta2 = 0;
    if (!pin4.empty()) {
        beta = pin4.min();
        beta2 = L[2].contains(beta) ? first(L[3] - L[2], "p4 beta'") : first(L[3] - one(beta), "p4 beta'");
    } else {
        beta = first(L[3] - L[2], "p4 beta");
        beta2 = first(L[3] - one(beta), "p4 beta'");
    }
    const int alpha = pin1.empty() ? L[0].min() : pin1.min();
    const std::array<ColorSet, 4> psi{one(alpha), ColorSet{}, ColorSet{}, one(beta) | one(beta2)};
    const std::array<int, 4> f1{2, 3, 3, 1};
    const std::array<int, 4> s1{4, 7, 4, 3};
    const auto r1 = reduce_to(g, L, uniform_demand(4, 3), psi, s1);
    const auto& L1 = r1.lists;
    const int g3 = first(L1[2] - L1[3], "p4 gamma3");
    const int g2 = first(L1[1] - (one(g3) | L1[0]), "p4 gamma2");
    const std::array<ColorSet, 4> psi2{ColorSet{}, one(g2), one(g3), ColorSet{}};
    const std::array<int, 4> s2{4, 5, 2, 3};
    const auto r2 = reduce_to(g, L1, f1, psi2, s2);
    const std::array<VertexId, 4> order{2, 3, 1, 0};
    const SetColoring phi = greedy_color(g, r2.lists, r2.demand, order);
    return combine(combine(phi, psi2), psi);
}

SetColoring p5_exact(const std::vector<ColorSet>& L, ColorSet pin1, ColorSet pin5) {
    static const Graph g = path_graph(5);
    const ColorSet d43 = L[3] - L[2];
    int beta = 0;
    if (!pin5.empty()) {
        beta = pin5.min();
        if (d43 == one(beta))
            throw HypothesisError("p5: pinned color " + std::to_string(beta) + " equals L(v4) minus L(v3) = " +
                                  d43.to_string());
    } else {
        for (int c : L[4].colors())
            if (d43 != one(c)) {
                beta = c;
                break;
            }
        if (beta == 0) broken("p5 beta");
    }
    const int alpha = pin1.empty() ? L[0].min() : pin1.min();
    const int eps = first(L[2] - L[3], "p5 epsilon");
    const int gamma = first(d43 - one(beta), "p5 gamma");
    const int beta2 = L[3].contains(beta) ? first(L[4] - L[3], "p5 beta'")
                                          : first(L[4] - (one(beta) | one(gamma)), "p5 beta'");
    const std::array<ColorSet, 5> psi{one(alpha), ColorSet{}, one(eps), one(gamma), one(beta) | one(beta2)};
    const std::array<int, 5> f1{2, 3, 2, 2, 1};
    const std::array<int, 5> s1{4, 6, 4, 3, 2};
    const auto r1 = reduce_to(g, L, uniform_demand(5, 3), psi, s1);
    const auto& L1 = r1.lists;
    const int k3 = first(L1[2] - L1[3], "p5 kappa3");
    const int k4 = first(L1[3] - L1[4], "p5 kappa4");
    const int k2 = first(L1[1] - (one(k3) | L1[0]), "p5 kappa2");
    const std::array<ColorSet, 5> psi2{ColorSet{}, one(k2), one(k3), one(k4), ColorSet{}};
    const std::array<int, 5> s2{4, 4, 1, 2, 2};
    const auto r2 = reduce_to(g, L1, f1, psi2, s2);
    const std::array<VertexId, 5> order{2, 3, 4, 1, 0};
    const SetColoring phi = greedy_color(g, r2.lists, r2.demand, order);
    return combine(combine(phi, psi2), psi);
}

SetColoring p6_exact(const std::vector<ColorSet>& L, ColorSet pin1) {
    int beta = 0;
    const ColorSet d43 = L[3] - L[2];
    if (d43.size() == 1)
        beta = first(L[4] - (d43 | L[5]), "p6 beta");
    else
        beta = first(L[4] - L[5], "p6 beta");
    const std::vector<ColorSet> head(L.begin(), L.begin() + 5);
    SetColoring phi = p5_exact(head, pin1, one(beta));
    phi.push_back((L[5] - phi[4]).lowest(3));
    return phi;
}

// Trimming for a path v1..vk where v2 has the 8-list and the tail from v3 on must be
// colorable: returns exact-size lists.
std::vector<ColorSet> trim_path(std::span<const ColorSet> lists, ColorSet pin_first, ColorSet pin_last,
                                const char* who) {
    const int k = static_cast<int>(lists.size());
    const Graph g = path_graph(k);
    std::vector<VertexId> tail;
    for (int i = 2; i < k; ++i) tail.push_back(i);
    const SetColoring w = witness(g, lists, tail, who, "the subpath from v3");
    std::vector<ColorSet> L(lists.size());
    L[0] = trim(lists[0], 5, pin_first);
    L[1] = trim(lists[1], 8, {});
    for (int i = 2; i < k; ++i) {
        ColorSet keep = w[idx(i)];
        if (i == k - 1) keep |= pin_last;
        // Keep colors that separate consecutive lists; the pin rules depend on them.
        ColorSet prefer = lists[idx(i)] - lists[idx(i - 1)];
        if (i + 1 < k) prefer |= lists[idx(i)] - lists[idx(i + 1)];
        L[idx(i)] = trim(lists[idx(i)], 5, keep, prefer - pin_last);
    }
    return L;
}

// ---------------------------------------------------------------------------
// 6-cycle

using Six = std::array<ColorSet, 6>;

/// Proper 1-coloring of the 4-cycle c0 c1 c2 c3 from 2-lists.
std::array<int, 4> four_cycle_21(const std::array<ColorSet, 4>& L) {
    std::array<int, 4> out{};
    if (L[0] == L[1] && L[1] == L[2] && L[2] == L[3]) {
        const int a = L[0].min();
        const int b = (L[0] - one(a)).min();
        return {a, b, a, b};
    }
    int i = 0;
    while (L[idx(i)] == L[idx((i + 1) % 4)]) ++i;
    const int x = first(L[idx(i)] - L[idx((i + 1) % 4)], "4-cycle start");
    out[idx(i)] = x;
    int prev = x;
    for (int step = 1; step <= 3; ++step) {
        const int j = (i - step + 4) % 4;
        prev = first(L[idx(j)] - one(prev), "4-cycle step");
        out[idx(j)] = prev;
    }
    return out;
}

SetColoring c6_t2(const Six& L) {
    static const Graph g = cycle_graph(6);
    int beta = 0;
    for (int c : (L[3] - L[2]).colors())
        if (!(L[4] - (one(c) | L[5])).empty()) {
            beta = c;
            break;
        }
    if (beta == 0) broken("c6 t=2 beta");
    const int gamma = first(L[4] - (one(beta) | L[5]), "c6 t=2 gamma");
    ColorSet pool = L[3] - (one(beta) | one(gamma));
    if (L[4].contains(beta)) pool -= L[4];
    const int beta2 = first(pool, "c6 t=2 beta'");
    pool = L[4] - (one(beta) | one(beta2) | one(gamma));
    if (L[3].contains(gamma)) pool -= L[3];
    const int gamma2 = first(pool, "c6 t=2 gamma'");
    const int alpha = first(L[2] - L[3], "c6 t=2 alpha");
    const int eps = first(L[5] - L[4], "c6 t=2 epsilon");
    const Six psi{ColorSet{}, ColorSet{}, one(alpha), one(beta) | one(beta2), one(gamma) | one(gamma2), one(eps)};
    const std::array<int, 6> f1{3, 3, 2, 1, 1, 2};
    const std::array<int, 6> s1{7, 7, 3, 2, 2, 3};
    const auto r1 = reduce_to(g, L, uniform_demand(6, 3), psi, s1);
    const auto& L1 = r1.lists;
    const int a2 = first(L1[2] - L1[3], "c6 t=2 alpha'");
    const int e2 = first(L1[5] - L1[4], "c6 t=2 epsilon'");
    const Six psi2{ColorSet{}, ColorSet{}, one(a2), ColorSet{}, ColorSet{}, one(e2)};
    const std::array<int, 6> s2{6, 6, 2, 2, 2, 2};
    const auto r2 = reduce_to(g, L1, f1, psi2, s2);
    const auto& L2 = r2.lists;

    SetColoring phi(6);
    if (L2[0] != L2[1]) {
        const int kappa = first(L2[0] - L2[1], "c6 t=2 kappa");
        phi[5] = one(first(L2[5] - one(kappa), "c6 t=2 v6"));
        phi[4] = (L2[4] - phi[5]).lowest(1);
        phi[3] = (L2[3] - phi[4]).lowest(1);
        phi[2] = (L2[2] - phi[3]).lowest(1);
    } else {
        // v3 v4 v5 v6 closed into a 4-cycle so that phi(v3) != phi(v6).
        const auto c = four_cycle_21({L2[2], L2[3], L2[4], L2[5]});
        for (int i = 0; i < 4; ++i) phi[idx(i + 2)] = one(c[idx(i)]);
    }
    auto [p1, p2] = color_edge(L2[0] - phi[5], L2[1] - phi[2]);
    phi[0] = p1;
    phi[1] = p2;
    return combine(combine(phi, psi2), psi);
}

SetColoring c6_t3(const Six& L) {
    const ColorSet d54 = L[4] - L[3];
    auto beta_ok = [&](int c) { return d54 != one(c); };
    int alpha = 0;
    int beta = 0;
    if (!L[1].subset_of(L[0])) {
        alpha = first(L[1] - L[0], "c6 t=3 alpha");
        for (int c : L[5].colors())
            if (beta_ok(c)) {
                beta = c;
                break;
            }
    } else {
        for (int c : (L[5] - (L[0] - L[1])).colors())
            if (beta_ok(c)) {
                beta = c;
                break;
            }
        if (beta != 0) alpha = L[1].contains(beta) ? beta : L[1].min();
    }
    if (beta == 0) broken("c6 t=3 beta");
    const std::vector<ColorSet> tail(L.begin() + 1, L.end());
    const SetColoring sub = p5_exact(tail, one(alpha), one(beta));
    SetColoring phi(6);
    for (int i = 1; i < 6; ++i) phi[idx(i)] = sub[idx(i - 1)];
    phi[0] = (L[0] - (phi[1] | phi[5])).lowest(3);
    return phi;
}

SetColoring c6_t4(const Six& L) {
    static const Graph g = cycle_graph(6);
    const int alpha = first(L[1] - L[2], "c6 t=4 alpha");
    const int beta = first(L[2] - L[1], "c6 t=4 beta");
    const int gamma = first(L[4] - L[5], "c6 t=4 gamma");
    const int eps = first(L[5] - L[4], "c6 t=4 epsilon");
    const Six psi{ColorSet{}, one(alpha), one(beta), ColorSet{}, one(gamma), one(eps)};
    const std::array<int, 6> f1{3, 2, 2, 3, 2, 2};
    const std::array<int, 6> s1{6, 4, 4, 6, 4, 4};
    const auto r1 = reduce_to(g, L, uniform_demand(6, 3), psi, s1);

    // Automorphisms of the cycle that fix {v1, v4}: new index i reads old index map[i].
    static constexpr std::array<std::array<int, 6>, 4> kMaps{{
        {0, 1, 2, 3, 4, 5},
        {0, 5, 4, 3, 2, 1},
        {3, 2, 1, 0, 5, 4},
        {3, 4, 5, 0, 1, 2},
    }};
    const std::array<VertexId, 6> order{1, 2, 4, 5, 0, 3};
    for (const auto& m : kMaps) {
        Six Lc;
        for (int i = 0; i < 6; ++i) Lc[idx(i)] = r1.lists[idx(m[idx(i)])];
        if (Lc[1].subset_of(Lc[0])) continue;
        const int a2 = first(Lc[1] - Lc[0], "c6 t=4 alpha'");
        const ColorSet b_pool = Lc[2] - one(a2);
        int b2 = 0;
        int g2 = 0;
        if (const ColorSet common = b_pool & Lc[4]; !common.empty()) {
            b2 = g2 = common.min();
        } else if (!(b_pool - Lc[3]).empty()) {
            b2 = (b_pool - Lc[3]).min();
            g2 = first(Lc[4], "c6 t=4 gamma'");
        } else {
            b2 = first(b_pool, "c6 t=4 beta'");
            g2 = first(Lc[4] - Lc[3], "c6 t=4 gamma'");
        }
        const Six psi2{ColorSet{}, one(a2), one(b2), ColorSet{}, one(g2), ColorSet{}};
        const std::array<int, 6> fc{3, 2, 2, 3, 2, 2};
        const std::array<int, 6> s2{6, 2, 2, 5, 3, 3};
        const auto r2 = reduce_to(g, Lc, fc, psi2, s2);
        const SetColoring phic = combine(greedy_color(g, r2.lists, r2.demand, order), psi2);
        SetColoring phi(6);
        for (int i = 0; i < 6; ++i) phi[idx(m[idx(i)])] = phic[idx(i)];
        return combine(phi, psi);
    }
    const auto& L1 = r1.lists;
    const int a2 = first(L1[1] & L1[5], "c6 t=4 alpha' (shared)");
    const int b2 = first((L1[2] & L1[4]) - one(a2), "c6 t=4 beta' (shared)");
    const Six psi2{ColorSet{}, one(a2), one(b2), ColorSet{}, one(b2), one(a2)};
    const std::array<int, 6> s2{5, 2, 2, 5, 2, 2};
    const auto r2 = reduce_to(g, L1, f1, psi2, s2);
    const SetColoring phi = greedy_color(g, r2.lists, r2.demand, order);
    return combine(combine(phi, psi2), psi);
}

}  // namespace

// ---------------------------------------------------------------------------
// gadget graphs

Graph path_graph(int k) {
    Edges e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, e);
}

Graph cycle_graph(int k) {
    Edges e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, e);
}

Graph lollipop_graph() {
    const Edges e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    return Graph::from_edges(4, e);
}

Graph claw_graph(int leaves, bool edge_last_two) {
    Edges e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    if (edge_last_two) e.emplace_back(leaves - 1, leaves);
    return Graph::from_edges(leaves + 1, e);
}

Graph claw3_pendant_graph(PendantEdge edge) {
    Edges e{{0, 1}, {0, 2}, {0, 3}, {1, 4}};
    if (edge == PendantEdge::V1V2) e.emplace_back(1, 2);
    if (edge == PendantEdge::V2V3) e.emplace_back(2, 3);
    if (edge == PendantEdge::V1V3) e.emplace_back(1, 3);
    return Graph::from_edges(5, e);
}

Graph path_plus_leaf_graph(bool edge_v1v3) {
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
    if (edge_v1v3) e.emplace_back(1, 5);
    return Graph::from_edges(6, e);
}

// ---------------------------------------------------------------------------
// ops

SetColoring color_p3(std::span<const ColorSet> lists, ColorSet pin_v1, ColorSet pin_v3) {
    need_count(lists, 3, "p3");
    const std::array<int, 3> sizes{5, 8, 5};
    need_sizes(lists, sizes, "p3");
    need_pin(pin_v1, lists[0], 2, "p3");
    need_pin(pin_v3, lists[2], 1, "p3");
    const std::vector<ColorSet> L{trim(lists[0], 5, pin_v1), trim(lists[1], 8, {}), trim(lists[2], 5, pin_v3)};
    return finish(path_graph(3), lists, p3_exact(L, pin_v1, pin_v3), "p3");
}

SetColoring color_p4(std::span<const ColorSet> lists, ColorSet pin_v1, ColorSet pin_v4) {
    need_count(lists, 4, "p4");
    const std::array<int, 4> sizes{5, 8, 5, 5};
    need_sizes(lists, sizes, "p4");
    need_pin(pin_v1, lists[0], 1, "p4");
    need_pin(pin_v4, lists[3], 1, "p4");
    const auto L = trim_path(lists, pin_v1, pin_v4, "p4");
    return finish(path_graph(4), lists, p4_exact(L, pin_v1, pin_v4), "p4");
}

SetColoring color_p5(std::span<const ColorSet> lists, ColorSet pin_v1, ColorSet pin_v5) {
    need_count(lists, 5, "p5");
    const std::array<int, 5> sizes{5, 8, 5, 5, 5};
    need_sizes(lists, sizes, "p5");
    need_pin(pin_v1, lists[0], 1, "p5");
    need_pin(pin_v5, lists[4], 1, "p5");
    const auto L = trim_path(lists, pin_v1, pin_v5, "p5");
    return finish(path_graph(5), lists, p5_exact(L, pin_v1, pin_v5), "p5");
}

SetColoring color_p6(std::span<const ColorSet> lists, ColorSet pin_v1) {
    need_count(lists, 6, "p6");
    const std::array<int, 6> sizes{5, 8, 5, 5, 5, 5};
    need_sizes(lists, sizes, "p6");
    need_pin(pin_v1, lists[0], 1, "p6");
    const auto L = trim_path(lists, pin_v1, {}, "p6");
    return finish(path_graph(6), lists, p6_exact(L, pin_v1), "p6");
}

SetColoring color_path_v3big(std::span<const ColorSet> lists) {
    const int k = static_cast<int>(lists.size());
    if (k < 5 || k > 7) throw HypothesisError("path_v3big: path length must be 5, 6 or 7, got " + std::to_string(k));
    std::vector<int> sizes(lists.size(), 5);
    sizes[2] = 8;
    need_sizes(lists, sizes, "path_v3big");
    const Graph g = path_graph(k);
    std::vector<VertexId> rest;
    for (int i = 0; i < k; ++i)
        if (i != 2) rest.push_back(i);
    const SetColoring w = witness(g, lists, rest, "path_v3big", "P - v3");
    std::vector<ColorSet> L(lists.size());
    for (int i = 0; i < k; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], w[idx(i)]);
    const int alpha = first(L[1] - L[0], "path_v3big alpha");
    const std::vector<ColorSet> tail(L.begin() + 1, L.end());
    SetColoring sub;
    if (k == 5) sub = p4_exact(tail, one(alpha), {});
    if (k == 6) sub = p5_exact(tail, one(alpha), {});
    if (k == 7) sub = p6_exact(tail, one(alpha));
    SetColoring phi(lists.size());
    for (int i = 1; i < k; ++i) phi[idx(i)] = sub[idx(i - 1)];
    phi[0] = (L[0] - phi[1]).lowest(3);
    return finish(g, lists, phi, "path_v3big");
}

SetColoring color_triangle(std::span<const ColorSet> lists) {
    need_count(lists, 3, "triangle");
    const auto r = triangle_colorable({lists[0], lists[1], lists[2]});
    if (!r.colorable()) {
        std::string which;
        for (int v : r.certificate.witness) which += (which.empty() ? "v" : ", v") + std::to_string(v + 1);
        const auto& c = r.certificate;
        int have = 0;
        if (c.failure == HallFailure::Single) have = c.sizes[idx(c.witness[0])];
        if (c.failure == HallFailure::Pair) have = c.pair_unions[idx(c.witness[0] + c.witness[1] - 1)];
        if (c.failure == HallFailure::Triple) have = c.triple_union;
        throw HypothesisError("triangle: Hall condition fails on {" + which + "}: " + std::to_string(have) +
                              " colors, need " + std::to_string(3 * static_cast<int>(c.witness.size())));
    }
    return {(*r.coloring)[0], (*r.coloring)[1], (*r.coloring)[2]};
}

SetColoring color_lollipop(std::span<const ColorSet> lists) {
    need_count(lists, 4, "lollipop");
    const std::array<int, 4> sizes{5, 8, 8, 5};
    need_sizes(lists, sizes, "lollipop");
    const auto tri = triangle_colorable({lists[0], lists[1], lists[2]});
    if (!tri.colorable()) throw HypothesisError("lollipop: the triangle v1 v2 v3 is not (L:3)-colorable");
    std::vector<ColorSet> L(4);
    for (int i = 0; i < 3; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], (*tri.coloring)[idx(i)]);
    L[3] = trim(lists[3], 5, {});
    const int alpha = first((L[0] | L[2]) - L[1], "lollipop alpha");
    const int beta = first(L[2] - L[0], "lollipop beta");
    SetColoring phi(4);
    phi[3] = (L[3] - (one(alpha) | one(beta))).lowest(3);
    const auto t = triangle_colorable({L[0], L[1], L[2] - phi[3]});
    if (!t.colorable()) broken("lollipop triangle after coloring v4");
    for (int i = 0; i < 3; ++i) phi[idx(i)] = (*t.coloring)[idx(i)];
    return finish(lollipop_graph(), lists, phi, "lollipop");
}

SetColoring color_c6(std::span<const ColorSet> lists, std::pair<int, int> s) {
    need_count(lists, 6, "c6");
    auto [a, b] = s;
    if (a < 0 || a > 5 || b < 0 || b > 5 || a == b) throw HypothesisError("c6: S must be two distinct positions 0..5");
    std::vector<int> sizes(6, 5);
    sizes[idx(a)] = sizes[idx(b)] = 8;
    need_sizes(lists, sizes, "c6");
    const Graph g = cycle_graph(6);
    std::vector<VertexId> rest;
    for (int i = 0; i < 6; ++i)
        if (i != a && i != b) rest.push_back(i);
    const SetColoring w = witness(g, lists, rest, "c6", "C - S");

    // Dihedral relabeling with S = {v1, vt}, t in {2, 3, 4}.
    std::array<int, 6> map{};
    int t = 0;
    for (int r : {a, b}) {
        const int other = r == a ? b : a;
        for (int dir : {1, -1}) {
            const int d = ((other - r) * dir + 12) % 6;
            if (t == 0 && d >= 1 && d <= 3) {
                for (int i = 0; i < 6; ++i) map[idx(i)] = ((r + dir * i) % 6 + 6) % 6;
                t = d + 1;
            }
        }
    }
    Six L;
    for (int i = 0; i < 6; ++i) {
        const int o = map[idx(i)];
        L[idx(i)] = trim(lists[idx(o)], sizes[idx(o)], w[idx(o)]);
    }
    SetColoring canon = t == 2 ? c6_t2(L) : t == 3 ? c6_t3(L) : c6_t4(L);
    SetColoring phi(6);
    for (int i = 0; i < 6; ++i) phi[idx(map[idx(i)])] = canon[idx(i)];
    return finish(g, lists, phi, "c6");
}

SetColoring color_claw3(std::span<const ColorSet> lists) {
    need_count(lists, 4, "claw3");
    const std::array<int, 4> sizes{8, 5, 5, 5};
    need_sizes(lists, sizes, "claw3");
    std::vector<ColorSet> L(4);
    for (int i = 0; i < 4; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], {});
    ColorSet hit;
    for (int i = 1; i <= 3; ++i) hit.insert(first(L[0] - L[idx(i)], "claw3 alpha_i"));
    SetColoring phi(4);
    phi[0] = fill(hit, L[0], 3, "claw3 center");
    for (int i = 1; i <= 3; ++i) phi[idx(i)] = (L[idx(i)] - phi[0]).lowest(3);
    return finish(claw_graph(3, false), lists, phi, "claw3");
}

SetColoring color_claw4(std::span<const ColorSet> lists, bool edge_v3v4) {
    need_count(lists, 5, "claw4");
    const std::array<int, 5> sizes{8, 5, 5, edge_v3v4 ? 8 : 5, edge_v3v4 ? 8 : 5};
    need_sizes(lists, sizes, "claw4");
    const Graph g = claw_graph(4, edge_v3v4);
    SetColoring phi(5);
    if (!edge_v3v4) {
        std::vector<ColorSet> L(5);
        for (int i = 0; i < 5; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], {});
        std::array<ColorSet, 4> A;
        for (int i = 0; i < 4; ++i) A[idx(i)] = (L[0] - L[idx(i + 1)]).lowest(3);
        int shared = 0;
        for (int c : L[0].colors()) {
            int count = 0;
            for (const auto& Ai : A) count += Ai.contains(c) ? 1 : 0;
            if (count >= 2) {
                shared = c;
                break;
            }
        }
        if (shared == 0) broken("claw4 pigeonhole color");
        ColorSet center = one(shared);
        for (const auto& Ai : A)
            if (!Ai.intersects(center)) center.insert(first(Ai, "claw4 A_i"));
        phi[0] = fill(center, L[0], 3, "claw4 center");
        for (int i = 1; i <= 4; ++i) phi[idx(i)] = (L[idx(i)] - phi[0]).lowest(3);
        return finish(g, lists, phi, "claw4");
    }
    const auto tri = triangle_colorable({lists[0], lists[3], lists[4]});
    if (!tri.colorable()) throw HypothesisError("claw4: the triangle v v3 v4 is not (L:3)-colorable");
    const std::array<ColorSet, 5> keep{(*tri.coloring)[0], ColorSet{}, ColorSet{}, (*tri.coloring)[1], (*tri.coloring)[2]};
    std::vector<ColorSet> L(5);
    for (int i = 0; i < 5; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], keep[idx(i)]);
    const ColorSet l34 = L[3] | L[4];
    const int alpha = l34.size() >= 9 ? L[0].min() : first(L[0] - l34, "claw4 alpha");
    const ColorSet b1 = L[1] - one(alpha);
    const ColorSet b2 = L[2] - one(alpha);
    int beta1 = 0;
    int beta2 = 0;
    if (!(b1 & b2).empty()) {
        beta1 = beta2 = (b1 & b2).min();
    } else if (!(b1 - L[0]).empty()) {
        beta1 = (b1 - L[0]).min();
        beta2 = first(b2, "claw4 beta2");
    } else {
        beta1 = first(b1, "claw4 beta1");
        beta2 = first(b2 - L[0], "claw4 beta2");
    }
    phi[1] = fill(one(beta1), b1, 3, "claw4 v1");
    phi[2] = fill(one(beta2), b2, 3, "claw4 v2");
    const auto t = triangle_colorable({L[0] - (phi[1] | phi[2]), L[3], L[4]});
    if (!t.colorable()) broken("claw4 triangle");
    phi[0] = (*t.coloring)[0];
    phi[3] = (*t.coloring)[1];
    phi[4] = (*t.coloring)[2];
    return finish(g, lists, phi, "claw4");
}

SetColoring color_claw3_pendant(std::span<const ColorSet> lists, PendantEdge edge) {
    need_count(lists, 5, "claw3_pendant");
    if (edge == PendantEdge::V1V3) {
        // Swap the roles of v2 and v3.
        const std::vector<ColorSet> swapped{lists[0], lists[1], lists[3], lists[2], lists[4]};
        SetColoring phi = color_claw3_pendant(swapped, PendantEdge::V1V2);
        std::swap(phi[2], phi[3]);
        return phi;
    }
    const Graph g = claw3_pendant_graph(edge);
    std::array<int, 5> sizes{5, 0, 0, 0, 5};
    for (int i = 1; i <= 3; ++i) sizes[idx(i)] = 2 + 3 * g.degree(i);
    need_sizes(lists, sizes, "claw3_pendant");
    const std::vector<VertexId> rest{0, 2, 3, 4};
    const SetColoring w = witness(g, lists, rest, "claw3_pendant", "H - v1");
    std::vector<ColorSet> L(5);
    for (int i = 0; i < 5; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], w[idx(i)]);

    SetColoring phi(5);
    if (edge == PendantEdge::V1V2) {
        phi[2] = (L[2] - L[0]).lowest(3);
        // Path u1 v1 v v3 with v1's list reduced by phi(v2).
        const std::vector<ColorSet> path{L[4], L[1] - phi[2], L[0], L[3]};
        const SetColoring p = color_p4(path);
        phi[4] = p[0];
        phi[1] = p[1];
        phi[0] = p[2];
        phi[3] = p[3];
    } else if (edge == PendantEdge::V2V3) {
        const ColorSet l23 = L[2] | L[3];
        const int alpha = l23.size() >= 9 ? L[0].min() : first(L[0] - l23, "claw3_pendant alpha");
        const int beta = first(L[1] - (one(alpha) | L[4]), "claw3_pendant beta");
        const int beta2 = first(L[1] - (one(alpha) | L[0] | one(beta)), "claw3_pendant beta'");
        phi[1] = fill(one(beta) | one(beta2), L[1] - one(alpha), 3, "claw3_pendant v1");
        phi[4] = (L[4] - phi[1]).lowest(3);
        const auto t = triangle_colorable({L[0] - phi[1], L[2], L[3]});
        if (!t.colorable()) broken("claw3_pendant triangle");
        phi[0] = (*t.coloring)[0];
        phi[2] = (*t.coloring)[1];
        phi[3] = (*t.coloring)[2];
    } else {
        const int beta = first(L[0] - L[2], "claw3_pendant beta");
        const int beta2 = first(L[0] - L[3], "claw3_pendant beta'");
        const std::vector<ColorSet> path{L[0], L[1], L[4]};
        const SetColoring p = p3_exact(path, one(beta) | one(beta2), {});
        phi[0] = p[0];
        phi[1] = p[1];
        phi[4] = p[2];
        phi[2] = (L[2] - phi[0]).lowest(3);
        phi[3] = (L[3] - phi[0]).lowest(3);
    }
    return finish(g, lists, phi, "claw3_pendant");
}

SetColoring color_path_plus_leaf(std::span<const ColorSet> lists, bool edge_v1v3) {
    need_count(lists, 6, "path_plus_leaf");
    enum { U1, V1, V, V2, U2, V3 };
    const Graph g = path_plus_leaf_graph(edge_v1v3);
    std::array<int, 6> sizes{5, 3 * g.degree(V1) - 1, 5, 8, 5, 2 + 3 * g.degree(V3)};
    need_sizes(lists, sizes, "path_plus_leaf");
    const std::vector<VertexId> rest{U1, V1, V, U2, V3};
    const SetColoring w = witness(g, lists, rest, "path_plus_leaf", "H - v2");
    std::vector<ColorSet> L(6);
    for (int i = 0; i < 6; ++i) L[idx(i)] = trim(lists[idx(i)], sizes[idx(i)], w[idx(i)]);

    SetColoring phi(6);
    if (edge_v1v3) {
        const int alpha = first((L[V] | L[V1]) - L[V3], "path_plus_leaf alpha");
        const int beta = first(L[V2] - (one(alpha) | L[U2]), "path_plus_leaf beta");
        const ColorSet gammas = (L[V2] - (L[V] | one(beta))).lowest(2);
        phi[V2] = fill(one(beta) | gammas, L[V2], 3, "path_plus_leaf v2");
        phi[U2] = (L[U2] - phi[V2]).lowest(3);
        const ColorSet base = L[V].contains(alpha) ? one(alpha) : ColorSet{};
        const ColorSet A = fill(base, L[V] - phi[V2], 4, "path_plus_leaf A");
        ColorSet kappas = A.contains(alpha) ? ColorSet{} : one(alpha);
        kappas = fill(kappas, L[V1] - A, 2, "path_plus_leaf kappa");
        phi[U1] = (L[U1] - kappas).lowest(3);
        const ColorSet B = L[V1] - phi[U1];
        const auto t = triangle_colorable({A, B, L[V3]});
        if (!t.colorable()) broken("path_plus_leaf triangle");
        phi[V] = (*t.coloring)[0];
        phi[V1] = (*t.coloring)[1];
        phi[V3] = (*t.coloring)[2];
        return finish(g, lists, phi, "path_plus_leaf");
    }

    int alpha = 0;
    for (int c : (L[V] - L[V3]).colors())
        if (!(L[V1] - (one(c) | L[U1])).empty()) {
            alpha = c;
            break;
        }
    if (alpha == 0) broken("path_plus_leaf alpha");
    const int beta = first(L[V1] - (one(alpha) | L[U1]), "path_plus_leaf beta");
    const int alpha2 = L[V1].contains(alpha) ? first(L[V] - L[V1], "path_plus_leaf alpha'")
                                             : first(L[V] - (one(alpha) | one(beta)), "path_plus_leaf alpha'");
    const int beta2 = L[V].contains(beta) ? first(L[V1] - L[V], "path_plus_leaf beta'")
                                          : first(L[V1] - (one(alpha) | one(alpha2) | one(beta)), "path_plus_leaf beta'");
    const int gamma = first(L[U1] - L[V1], "path_plus_leaf gamma");
    const int eps = first(L[V3] - L[V], "path_plus_leaf epsilon");
    const int kappa = first(L[V2] - (one(alpha) | one(alpha2) | L[U2]), "path_plus_leaf kappa");
    std::array<ColorSet, 6> psi{};
    psi[U1] = one(gamma);
    psi[V1] = one(beta) | one(beta2);
    psi[V] = one(alpha) | one(alpha2);
    psi[V3] = one(eps);
    psi[V2] = one(kappa);
    std::array<int, 6> s1{};
    s1[U1] = 3;
    s1[V3] = 3;
    s1[V1] = 2;
    s1[V] = 1;
    s1[V2] = 5;
    s1[U2] = 5;
    const auto r = reduce_to(g, L, uniform_demand(6, 3), psi, s1);
    const std::array<VertexId, 6> order{V, V3, V1, U1, V2, U2};
    phi = combine(greedy_color(g, r.lists, r.demand, order), psi);
    return finish(g, lists, phi, "path_plus_leaf");
}

}  // namespace setcolor
