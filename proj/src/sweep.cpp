#include "setcolor/sweep.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "setcolor/hall.hpp"
#include "setcolor/solver.hpp"
#include "setcolor/venn.hpp"

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct LemmaInfo {
    Lemma lemma;
    std::string_view name;
};

constexpr std::array<LemmaInfo, 21> kLemmas{{
    {Lemma::P3, "p3"},
    {Lemma::P4, "p4"},
    {Lemma::P5, "p5"},
    {Lemma::P6, "p6"},
    {Lemma::PathV3Big5, "path_v3big5"},
    {Lemma::PathV3Big6, "path_v3big6"},
    {Lemma::PathV3Big7, "path_v3big7"},
    {Lemma::Triangle, "triangle"},
    {Lemma::Lollipop, "lollipop"},
    {Lemma::C6T2, "c6_t2"},
    {Lemma::C6T3, "c6_t3"},
    {Lemma::C6T4, "c6_t4"},
    {Lemma::Claw3, "claw3"},
    {Lemma::Claw4, "claw4"},
    {Lemma::Claw4Edge, "claw4_edge"},
    {Lemma::Claw3PendantNone, "claw3_pendant"},
    {Lemma::Claw3PendantV1V2, "claw3_pendant_v1v2"},
    {Lemma::Claw3PendantV2V3, "claw3_pendant_v2v3"},
    {Lemma::Claw3PendantV1V3, "claw3_pendant_v1v3"},
    {Lemma::PathPlusLeaf, "path_plus_leaf"},
    {Lemma::PathPlusLeafEdge, "path_plus_leaf_edge"},
}};

int path_length(Lemma l) {
    switch (l) {
        case Lemma::P3: return 3;
        case Lemma::P4: return 4;
        case Lemma::P5: return 5;
        case Lemma::P6: return 6;
        case Lemma::PathV3Big5: return 5;
        case Lemma::PathV3Big6: return 6;
        case Lemma::PathV3Big7: return 7;
        default: return 0;
    }
}

bool is_c6(Lemma l) { return l == Lemma::C6T2 || l == Lemma::C6T3 || l == Lemma::C6T4; }

int c6_t(Lemma l) { return l == Lemma::C6T2 ? 2 : l == Lemma::C6T3 ? 3 : 4; }

PendantEdge pendant_edge(Lemma l) {
    switch (l) {
        case Lemma::Claw3PendantV1V2: return PendantEdge::V1V2;
        case Lemma::Claw3PendantV2V3: return PendantEdge::V2V3;
        case Lemma::Claw3PendantV1V3: return PendantEdge::V1V3;
        default: return PendantEdge::None;
    }
}

bool is_pendant(Lemma l) {
    return l == Lemma::Claw3PendantNone || l == Lemma::Claw3PendantV1V2 || l == Lemma::Claw3PendantV2V3 ||
           l == Lemma::Claw3PendantV1V3;
}

/// Vertices of the sub-structure the hypothesis requires to be colorable.
std::vector<VertexId> required_part(Lemma l, const GadgetCase& c) {
    switch (l) {
        case Lemma::P4: return {2, 3};
        case Lemma::P5: return {2, 3, 4};
        case Lemma::P6: return {2, 3, 4, 5};
        case Lemma::PathV3Big5: return {0, 1, 3, 4};
        case Lemma::PathV3Big6: return {0, 1, 3, 4, 5};
        case Lemma::PathV3Big7: return {0, 1, 3, 4, 5, 6};
        case Lemma::Triangle:
        case Lemma::Lollipop: return {0, 1, 2};
        case Lemma::Claw4Edge: return {0, 3, 4};
        case Lemma::PathPlusLeaf:
        case Lemma::PathPlusLeafEdge: return {0, 1, 2, 4, 5};
        default: break;
    }
    if (is_pendant(l)) return {0, 2, 3, 4};
    if (is_c6(l)) {
        std::vector<VertexId> rest;
        for (int i = 0; i < 6; ++i)
            if (i != c.s.first && i != c.s.second) rest.push_back(i);
        return rest;
    }
    return {};
}

std::vector<int> sizes_for(Lemma l, const GadgetCase& c) {
    if (!is_c6(l)) return lemma_sizes(l);
    std::vector<int> sizes(6, 5);
    sizes[idx(c.s.first)] = sizes[idx(c.s.second)] = 8;
    return sizes;
}

std::string list_text(const ListAssignment& lists) {
    std::ostringstream os;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        os << "L " << v << ":";
        for (int col : lists[v].colors()) os << ' ' << col;
        os << '\n';
    }
    return os.str();
}

std::vector<ColorSet> subsets_up_to(ColorSet from, int k) {
    std::vector<ColorSet> out{ColorSet{}};
    for (int size = 1; size <= k; ++size)
        for_each_subset(from, size, [&](ColorSet s) {
            out.push_back(s);
            return true;
        });
    return out;
}

/// Pin choices swept exhaustively: nothing, or each admissible pin set.
std::vector<std::pair<ColorSet, ColorSet>> pin_options(Lemma l, const ListAssignment& L) {
    std::vector<std::pair<ColorSet, ColorSet>> out;
    if (l == Lemma::P3) {
        std::vector<ColorSet> firsts{ColorSet{}};
        for_each_subset(L[0], 2, [&](ColorSet s) {
            firsts.push_back(s);
            return true;
        });
        for (ColorSet a : firsts)
            for (ColorSet b : subsets_up_to(L[2], 1)) out.emplace_back(a, b);
        return out;
    }
    if (l == Lemma::P4) {
        for (ColorSet a : subsets_up_to(L[0], 1))
            for (ColorSet b : subsets_up_to(L[3], 1)) out.emplace_back(a, b);
        return out;
    }
    out.emplace_back(ColorSet{}, ColorSet{});
    return out;
}

std::mt19937_64 case_rng(std::uint64_t seed, long long index) {
    const auto i = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    return std::mt19937_64(seq);
}

ColorSet random_subset(std::mt19937_64& rng, int universe, int size) {
    std::vector<int> pool(idx(universe));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    ColorSet s;
    for (int i = 0; i < size; ++i) s.insert(pool[idx(i)]);
    return s;
}

ColorSet random_pin(std::mt19937_64& rng, ColorSet list, int max) {
    const int k = std::uniform_int_distribution<int>(0, max)(rng);
    std::vector<int> pool = list.colors();
    std::shuffle(pool.begin(), pool.end(), rng);
    ColorSet s;
    for (int i = 0; i < k; ++i) s.insert(pool[idx(i)]);
    return s;
}

}  // namespace

std::vector<Lemma> all_lemmas() {
    std::vector<Lemma> out;
    for (const auto& info : kLemmas) out.push_back(info.lemma);
    return out;
}

std::string_view lemma_name(Lemma l) {
    for (const auto& info : kLemmas)
        if (info.lemma == l) return info.name;
    return "?";
}

std::optional<Lemma> lemma_from_name(std::string_view name) {
    for (const auto& info : kLemmas)
        if (info.name == name) return info.lemma;
    return std::nullopt;
}

bool supports_exhaustive(Lemma l) {
    return l == Lemma::P3 || l == Lemma::P4 || l == Lemma::Triangle || l == Lemma::Claw3 || l == Lemma::Lollipop;
}

std::vector<int> lemma_sizes(Lemma l) {
    if (const int k = path_length(l); k > 0) {
        std::vector<int> sizes(idx(k), 5);
        sizes[l == Lemma::PathV3Big5 || l == Lemma::PathV3Big6 || l == Lemma::PathV3Big7 ? 2 : 1] = 8;
        return sizes;
    }
    switch (l) {
        case Lemma::Triangle: return {3, 3, 3};
        case Lemma::Lollipop: return {5, 8, 8, 5};
        case Lemma::Claw3: return {8, 5, 5, 5};
        case Lemma::Claw4: return {8, 5, 5, 5, 5};
        case Lemma::Claw4Edge: return {8, 5, 5, 8, 8};
        case Lemma::PathPlusLeaf: return {5, 5, 5, 8, 5, 5};
        case Lemma::PathPlusLeafEdge: return {5, 8, 5, 8, 5, 8};
        default: break;
    }
    if (is_c6(l)) {
        std::vector<int> sizes(6, 5);
        sizes[0] = sizes[idx(c6_t(l) - 1)] = 8;
        return sizes;
    }
    const Graph g = claw3_pendant_graph(pendant_edge(l));
    return {5, 2 + 3 * g.degree(1), 2 + 3 * g.degree(2), 2 + 3 * g.degree(3), 5};
}

Graph lemma_graph(Lemma l) {
    if (const int k = path_length(l); k > 0) return path_graph(k);
    switch (l) {
        case Lemma::Triangle: return cycle_graph(3);
        case Lemma::Lollipop: return lollipop_graph();
        case Lemma::Claw3: return claw_graph(3, false);
        case Lemma::Claw4: return claw_graph(4, false);
        case Lemma::Claw4Edge: return claw_graph(4, true);
        case Lemma::PathPlusLeaf: return path_plus_leaf_graph(false);
        case Lemma::PathPlusLeafEdge: return path_plus_leaf_graph(true);
        default: break;
    }
    if (is_c6(l)) return cycle_graph(6);
    return claw3_pendant_graph(pendant_edge(l));
}

SetColoring run_lemma(Lemma l, const GadgetCase& c) {
    switch (l) {
        case Lemma::P3: return color_p3(c.lists, c.pin_first, c.pin_last);
        case Lemma::P4: return color_p4(c.lists, c.pin_first, c.pin_last);
        case Lemma::P5: return color_p5(c.lists, c.pin_first, c.pin_last);
        case Lemma::P6: return color_p6(c.lists, c.pin_first);
        case Lemma::PathV3Big5:
        case Lemma::PathV3Big6:
        case Lemma::PathV3Big7: return color_path_v3big(c.lists);
        case Lemma::Triangle: return color_triangle(c.lists);
        case Lemma::Lollipop: return color_lollipop(c.lists);
        case Lemma::C6T2:
        case Lemma::C6T3:
        case Lemma::C6T4: return color_c6(c.lists, c.s);
        case Lemma::Claw3: return color_claw3(c.lists);
        case Lemma::Claw4: return color_claw4(c.lists, false);
        case Lemma::Claw4Edge: return color_claw4(c.lists, true);
        case Lemma::Claw3PendantNone:
        case Lemma::Claw3PendantV1V2:
        case Lemma::Claw3PendantV2V3:
        case Lemma::Claw3PendantV1V3: return color_claw3_pendant(c.lists, pendant_edge(l));
        case Lemma::PathPlusLeaf: return color_path_plus_leaf(c.lists, false);
        case Lemma::PathPlusLeafEdge: return color_path_plus_leaf(c.lists, true);
    }
    throw std::logic_error("run_lemma: unknown lemma");
}

bool hypothesis_holds(Lemma l, const GadgetCase& c) {
    const std::vector<int> sizes = sizes_for(l, c);
    if (c.lists.size() != sizes.size()) return false;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (c.lists[i].size() < sizes[i]) return false;
    const int k = path_length(l);
    if (l == Lemma::P3 || l == Lemma::P4 || l == Lemma::P5 || l == Lemma::P6) {
        const int max_first = l == Lemma::P3 ? 2 : 1;
        if (c.pin_first.size() > max_first || !c.pin_first.subset_of(c.lists[0])) return false;
        if (l != Lemma::P6 && (c.pin_last.size() > 1 || !c.pin_last.subset_of(c.lists[idx(k - 1)]))) return false;
    }
    if (l == Lemma::P5 && !c.pin_last.empty() && c.lists[3] - c.lists[2] == c.pin_last) return false;
    const std::vector<VertexId> part = required_part(l, c);
    if (part.empty()) return true;
    const Graph g = lemma_graph(l).induced(part);
    ListAssignment sub;
    for (VertexId v : part) sub.push_back(c.lists[idx(v)]);
    return solve(g, sub, uniform_demand(g.size(), 3)).has_value();
}

CaseOutcome check_case(Lemma l, const GadgetCase& c) {
    bool holds = false;
    try {
        holds = hypothesis_holds(l, c);
    } catch (const std::exception& e) {
        return {Outcome::Violation, std::string("hypothesis evaluation threw: ") + e.what()};
    }
    try {
        const SetColoring phi = run_lemma(l, c);
        if (!holds) return {Outcome::Violation, "hypothesis fails but the op returned a coloring"};
        const Graph g = lemma_graph(l);
        const Verdict v = check_coloring(g, c.lists, uniform_demand(g.size(), 3), phi);
        if (!v) return {Outcome::Violation, "invalid coloring: " + v.violation};
        if (!c.pin_first.subset_of(phi.front())) return {Outcome::Violation, "pin at the first vertex not honored"};
        if (!c.pin_last.subset_of(phi.back())) return {Outcome::Violation, "pin at the last vertex not honored"};
        return {Outcome::Pass, {}};
    } catch (const HypothesisError& e) {
        if (holds) return {Outcome::Violation, std::string("hypothesis holds but the op refused: ") + e.what()};
        return {Outcome::Excluded, e.what()};
    } catch (const std::exception& e) {
        return {Outcome::Violation, std::string("op threw: ") + e.what()};
    }
}

std::string describe_case(Lemma l, const GadgetCase& c) {
    std::ostringstream os;
    os << "# lemma " << lemma_name(l) << '\n' << list_text(c.lists);
    if (!c.pin_first.empty()) os << "# pin first: " << c.pin_first << '\n';
    if (!c.pin_last.empty()) os << "# pin last: " << c.pin_last << '\n';
    if (is_c6(l)) os << "# S: " << c.s.first << ' ' << c.s.second << '\n';
    return os.str();
}

SweepResult exhaustive_sweep(Lemma l, Exec exec) {
    if (!supports_exhaustive(l))
        throw std::invalid_argument(std::string(lemma_name(l)) + " has no exhaustive sweep (more than 4 vertices)");
    std::vector<ListAssignment> assignments;
    if (l == Lemma::Triangle) {
        // No size hypothesis: every size triple up to 8.
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b)
                for (int c = 0; c <= 8; ++c) {
                    const std::array<int, 3> sizes{a, b, c};
                    for (auto& L : venn_assignments(sizes)) assignments.push_back(std::move(L));
                }
    } else {
        const std::vector<int> sizes = lemma_sizes(l);
        assignments = venn_assignments(sizes);
    }
    return run_sweep(static_cast<long long>(assignments.size()), exec, [&](long long i, SweepResult& acc) {
        const ListAssignment& L = assignments[static_cast<std::size_t>(i)];
        for (const auto& [a, b] : pin_options(l, L)) {
            const GadgetCase c{L, a, b, {0, 1}};
            const CaseOutcome out = check_case(l, c);
            if (out.outcome == Outcome::Pass) ++acc.passed;
            if (out.outcome == Outcome::Excluded) ++acc.excluded;
            if (out.outcome == Outcome::Violation) acc.record_violation(i, out.detail + '\n' + describe_case(l, c));
        }
    });
}

GadgetCase random_case(Lemma l, std::uint64_t seed, long long index) {
    std::mt19937_64 rng = case_rng(seed, index);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        GadgetCase c;
        if (is_c6(l)) {
            // Random dihedral image of S = {v1, vt}.
            const int r = std::uniform_int_distribution<int>(0, 5)(rng);
            const int dir = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1 : -1;
            c.s = {r, ((r + dir * (c6_t(l) - 1)) % 6 + 6) % 6};
        }
        const std::vector<int> sizes = sizes_for(l, c);
        const int max_size = *std::max_element(sizes.begin(), sizes.end());
        const int universe = max_size + std::uniform_int_distribution<int>(0, 7)(rng);
        for (int s : sizes) c.lists.push_back(random_subset(rng, universe, s));
        const int k = path_length(l);
        if (l == Lemma::P3 || l == Lemma::P4 || l == Lemma::P5 || l == Lemma::P6) {
            c.pin_first = random_pin(rng, c.lists[0], l == Lemma::P3 ? 2 : 1);
            if (l != Lemma::P6) c.pin_last = random_pin(rng, c.lists[idx(k - 1)], 1);
        }
        if (hypothesis_holds(l, c)) return c;
    }
    throw std::runtime_error("random_case: no hypothesis-satisfying instance found for " +
                             std::string(lemma_name(l)));
}

SweepResult random_sweep(Lemma l, long long count, std::uint64_t seed, Exec exec) {
    return run_sweep(count, exec, [&](long long i, SweepResult& acc) {
        GadgetCase c;
        try {
            c = random_case(l, seed, i);
        } catch (const std::exception& e) {
            acc.record_violation(i, e.what());
            return;
        }
        const CaseOutcome out = check_case(l, c);
        if (out.outcome == Outcome::Pass) ++acc.passed;
        if (out.outcome == Outcome::Excluded) ++acc.excluded;
        if (out.outcome == Outcome::Violation) acc.record_violation(i, out.detail + '\n' + describe_case(l, c));
    });
}

SweepResult triangle_hall_sweep(int max_size, Exec exec) {
    std::vector<ListAssignment> assignments;
    for (int a = 0; a <= max_size; ++a)
        for (int b = 0; b <= max_size; ++b)
            for (int c = 0; c <= max_size; ++c) {
                const std::array<int, 3> sizes{a, b, c};
                for (auto& L : venn_assignments(sizes)) assignments.push_back(std::move(L));
            }
    const Graph tri = cycle_graph(3);
    return run_sweep(static_cast<long long>(assignments.size()), exec, [&](long long i, SweepResult& acc) {
        const ListAssignment& L = assignments[static_cast<std::size_t>(i)];
        try {
            const TriangleResult hall = triangle_colorable({L[0], L[1], L[2]});
            const auto exact = solve(tri, L, uniform_demand(3, 3));
            if (hall.colorable() != exact.has_value()) {
                acc.record_violation(i, "Hall test and exact search disagree\n" + list_text(L));
                return;
            }
            if (hall.colorable()) {
                const SetColoring phi{(*hall.coloring)[0], (*hall.coloring)[1], (*hall.coloring)[2]};
                if (!check_coloring(tri, L, uniform_demand(3, 3), phi)) {
                    acc.record_violation(i, "Hall coloring invalid\n" + list_text(L));
                    return;
                }
            }
            ++acc.passed;
        } catch (const std::exception& e) {
            acc.record_violation(i, std::string("threw: ") + e.what() + '\n' + list_text(L));
        }
    });
}

}  // namespace setcolor
