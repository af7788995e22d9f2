#include "setcolor/reducer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "setcolor/discharging.hpp"
#include "setcolor/io.hpp"
#include "setcolor/solver.hpp"

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool contains(std::span<const VertexId> s, VertexId v) { return std::find(s.begin(), s.end(), v) != s.end(); }

int induced_edges(const Graph& g, std::span<const VertexId> vs) {
    int e = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t k = i + 1; k < vs.size(); ++k) e += g.adjacent(vs[i], vs[k]);
    return e;
}

bool distinct(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

class Finder {
public:
    Finder(const PlaneGraph& pg, std::span<const VertexId> z) : g_(pg.graph()), z_(z) {}

    std::vector<Configuration> all(ConfigKind k, bool first_only) {
        out_.clear();
        first_only_ = first_only;
        switch (k) {
        case ConfigKind::Deg2: deg2(); break;
        case ConfigKind::Path33:
            for (int len = 3; len <= 6 && !done(); ++len) paths(k, pattern33(len));
            break;
        case ConfigKind::Tria3: tria3(); break;
        case ConfigKind::Cycle6: cycle6(); break;
        case ConfigKind::Vert4: vert4(); break;
        case ConfigKind::Path34:
            for (int len = 5; len <= 7 && !done(); ++len) paths(k, pattern34(len));
            break;
        case ConfigKind::Vert5M: vert5m(); break;
        case ConfigKind::Vert5N3: vert5n3(); break;
        case ConfigKind::Vert5P43: vert5p43(); break;
        }
        return out_;
    }

private:
    const Graph& g_;
    std::span<const VertexId> z_;
    std::vector<Configuration> out_;
    bool first_only_ = false;

    bool done() const { return first_only_ && !out_.empty(); }
    bool internal(VertexId v) const { return !contains(z_, v); }
    bool kv(VertexId v, int k) const { return internal(v) && g_.degree(v) == k; }
    int n() const { return g_.size(); }

    void add(Configuration c) {
        if (!done()) out_.push_back(std::move(c));
    }

    std::vector<VertexId> deg3_nbrs(VertexId v) const {
        std::vector<VertexId> out;
        for (VertexId u : g_.neighbors(v))
            if (kv(u, 3)) out.push_back(u);
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::vector<int> pattern33(int k) {
        std::vector<int> p(idx(k), 4);
        p[0] = p[1] = p[idx(k - 1)] = 3;
        return p;
    }
    static std::vector<int> pattern34(int k) {
        std::vector<int> p(idx(k), 4);
        p[0] = p[2] = p[idx(k - 1)] = 3;
        return p;
    }

    void deg2() {
        for (VertexId v = 0; v < n() && !done(); ++v)
            if (internal(v) && g_.degree(v) <= 2) add({ConfigKind::Deg2, {v}, {v}});
    }

    // Induced paths whose degree sequence is `want`.
    void paths(ConfigKind kind, const std::vector<int>& want) {
        const int k = static_cast<int>(want.size());
        std::vector<VertexId> path;
        std::function<void()> grow = [&]() {
            if (done()) return;
            if (static_cast<int>(path.size()) == k) {
                if (induced_edges(g_, path) != k - 1) return;
                Configuration c{kind, path, {}};
                c.delete_set = kind == ConfigKind::Path33 ? std::vector<VertexId>{path[0], path[1]}
                                                          : std::vector<VertexId>{path[2]};
                add(std::move(c));
                return;
            }
            const int want_deg = want[path.size()];
            std::vector<VertexId> next(g_.neighbors(path.back()).begin(), g_.neighbors(path.back()).end());
            std::sort(next.begin(), next.end());
            for (VertexId u : next) {
                if (!kv(u, want_deg) || contains(path, u)) continue;
                path.push_back(u);
                grow();
                path.pop_back();
            }
        };
        for (VertexId s = 0; s < n() && !done(); ++s) {
            if (!kv(s, want[0])) continue;
            path = {s};
            grow();
        }
    }

    void tria3() {
        for (const auto& t : triangles(g_)) {
            for (int r = 0; r < 3 && !done(); ++r) {
                const VertexId v2 = t[idx(r)];
                const VertexId a = t[idx((r + 1) % 3)], b = t[idx((r + 2) % 3)];
                if (!kv(v2, 3)) continue;
                for (const auto& [v1, v3] : {std::pair{a, b}, std::pair{b, a}}) {
                    if (!internal(v1) || !internal(v3) || g_.degree(v1) > 4 || g_.degree(v3) > 4) continue;
                    for (VertexId v4 : deg3_nbrs(v3)) {
                        if (v4 == v1 || v4 == v2 || g_.adjacent(v4, v1) || g_.adjacent(v4, v2)) continue;
                        add({ConfigKind::Tria3, {v1, v2, v3, v4}, {v4}});
                    }
                }
            }
        }
    }

    void cycle6() {
        std::vector<VertexId> cyc;
        const auto ok = [&](VertexId v) { return internal(v) && g_.degree(v) <= 4; };
        std::function<void(VertexId)> grow = [&](VertexId s) {
            if (done()) return;
            const VertexId last = cyc.back();
            if (cyc.size() == 6) {
                if (!g_.adjacent(last, s) || cyc[1] > cyc[5] || induced_edges(g_, cyc) != 6) return;
                std::vector<int> threes;
                for (int i = 0; i < 6; ++i)
                    if (g_.degree(cyc[idx(i)]) == 3) threes.push_back(i);
                if (threes.size() < 2) return;
                Configuration c{ConfigKind::Cycle6, cyc, {cyc[idx(threes[0])], cyc[idx(threes[1])]}};
                c.pair = {threes[0], threes[1]};
                add(std::move(c));
                return;
            }
            std::vector<VertexId> next(g_.neighbors(last).begin(), g_.neighbors(last).end());
            std::sort(next.begin(), next.end());
            for (VertexId u : next) {
                if (u <= s || !ok(u) || contains(cyc, u)) continue;
                cyc.push_back(u);
                grow(s);
                cyc.pop_back();
            }
        };
        for (VertexId s = 0; s < n() && !done(); ++s) {
            if (!ok(s)) continue;
            cyc = {s};
            grow(s);
        }
    }

    void vert4() {
        for (VertexId v = 0; v < n() && !done(); ++v) {
            if (!kv(v, 4)) continue;
            const auto nb = deg3_nbrs(v);
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    for (std::size_t c = b + 1; c < nb.size(); ++c) {
                        const std::vector<VertexId> leaves{nb[a], nb[b], nb[c]};
                        if (induced_edges(g_, leaves) != 0) continue;
                        add({ConfigKind::Vert4, {v, nb[a], nb[b], nb[c]}, {v, nb[a], nb[b], nb[c]}});
                    }
        }
    }

    void vert5m() {
        for (VertexId v = 0; v < n() && !done(); ++v) {
            if (!kv(v, 5)) continue;
            const auto nb = deg3_nbrs(v);
            const std::size_t m = nb.size();
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b)
                    for (std::size_t c = b + 1; c < m; ++c)
                        for (std::size_t d = c + 1; d < m; ++d) four_leaves(v, {nb[a], nb[b], nb[c], nb[d]});
        }
    }

    // Leaves with no edge, or one edge (labelled v3 v4); a perfect matching does not qualify.
    void four_leaves(VertexId v, const std::vector<VertexId>& four) {
        const int e = induced_edges(g_, four);
        if (e > 1) return;
        std::vector<VertexId> order = four;
        if (e == 1) {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = i + 1; k < 4; ++k)
                    if (g_.adjacent(four[i], four[k])) {
                        order.clear();
                        for (std::size_t m = 0; m < 4; ++m)
                            if (m != i && m != k) order.push_back(four[m]);
                        order.push_back(four[i]);
                        order.push_back(four[k]);
                    }
        }
        Configuration c{ConfigKind::Vert5M, {v, order[0], order[1], order[2], order[3]}, {order[0], order[1]}};
        c.edge = e == 1;
        add(std::move(c));
    }

    void vert5n3() {
        for (VertexId v = 0; v < n() && !done(); ++v) {
            if (!kv(v, 5)) continue;
            const auto nb = deg3_nbrs(v);
            for (VertexId v1 : nb)
                for (std::size_t a = 0; a < nb.size(); ++a)
                    for (std::size_t b = a + 1; b < nb.size(); ++b) {
                        const VertexId v2 = nb[a], v3 = nb[b];
                        if (v2 == v1 || v3 == v1) continue;
                        for (VertexId u1 : deg3_nbrs(v1)) {
                            if (u1 == v || g_.adjacent(u1, v) || g_.adjacent(u1, v2) || g_.adjacent(u1, v3)) continue;
                            const bool e12 = g_.adjacent(v1, v2), e23 = g_.adjacent(v2, v3), e13 = g_.adjacent(v1, v3);
                            if (e12 + e23 + e13 > 1) continue;
                            Configuration c{ConfigKind::Vert5N3, {v, v1, v2, v3, u1}, {v1}};
                            c.pendant = e12 ? PendantEdge::V1V2 : e23 ? PendantEdge::V2V3 : e13 ? PendantEdge::V1V3
                                                                                                : PendantEdge::None;
                            add(std::move(c));
                        }
                    }
        }
    }

    void vert5p43() {
        for (VertexId v = 0; v < n() && !done(); ++v) {
            if (!kv(v, 5)) continue;
            const auto nb3 = deg3_nbrs(v);
            for (VertexId v1 : g_.neighbors(v)) {
                if (!kv(v1, 4)) continue;
                for (VertexId u1 : deg3_nbrs(v1)) {
                    if (u1 == v) continue;
                    for (VertexId v2 : nb3) {
                        for (VertexId u2 : deg3_nbrs(v2)) {
                            if (u2 == v || g_.adjacent(u2, v)) continue;
                            for (VertexId v3 : nb3) {
                                const std::vector<VertexId> h{u1, v1, v, v2, u2, v3};
                                if (!distinct(h)) continue;
                                const bool e13 = g_.adjacent(v1, v3);
                                if (induced_edges(g_, h) != 5 + static_cast<int>(e13)) continue;
                                if (!g_.adjacent(u1, v1) || !g_.adjacent(v2, u2) || !g_.adjacent(v, v3)) continue;
                                Configuration c{ConfigKind::Vert5P43, h, {v2}};
                                c.edge = e13;
                                add(std::move(c));
                            }
                        }
                    }
                }
            }
        }
    }
};

// ---- recursion ------------------------------------------------------------------

class ReductionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Reducer {
    ReduceStats stats;

    [[noreturn]] void fail(const PlaneGraph& g, const ListAssignment& lists, const std::vector<VertexId>& z,
                           const std::string& reason) {
        std::ostringstream os;
        os << "FAILURE " << reason << '\n';
        std::optional<PrecoloredClique> clique;
        if (!z.empty()) {
            clique = PrecoloredClique{};
            for (VertexId v : z) {
                clique->vertices.push_back(v);
                clique->colors.push_back(lists[idx(v)]);
            }
        }
        os << "# graph\n" << format_graph(g, clique);
        os << "# lists\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (contains(z, v)) continue;
            os << "L " << v << ':';
            for (int c : lists[idx(v)].colors()) os << ' ' << c;
            os << '\n';
        }
        os << "# audit\n";
        try {
            os << audit(g, z).text;
        } catch (const std::exception& e) {
            os << "audit unavailable: " << e.what() << '\n';
        }
        throw ReductionFailure(os.str());
    }

    static ListAssignment pick(const ListAssignment& lists, std::span<const VertexId> map) {
        ListAssignment out;
        out.reserve(map.size());
        for (VertexId v : map) out.push_back(lists[idx(v)]);
        return out;
    }

    static std::vector<VertexId> local_z(std::span<const VertexId> z, std::span<const VertexId> map) {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < map.size(); ++i)
            if (contains(z, map[i])) out.push_back(static_cast<VertexId>(i));
        return out;
    }

    SetColoring color(const PlaneGraph& g, ListAssignment lists, std::vector<VertexId> z, int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        const int n = g.vertex_count();
        if (n == 0) return {};
        const Demand demand = uniform_demand(n, 3);

        const auto comps = g.graph().components();
        if (comps.size() > 1) {
            SetColoring phi(idx(n));
            for (const auto& comp : comps) {
                const PlaneGraph sub = g.induced(comp);
                ListAssignment sub_lists = pick(lists, comp);
                std::vector<VertexId> sub_z = local_z(z, comp);
                if (sub_z.empty()) {
                    sub_lists[0] = sub_lists[0].lowest(3);
                    sub_z = {0};
                }
                const SetColoring part = color(sub, std::move(sub_lists), std::move(sub_z), depth + 1);
                for (std::size_t i = 0; i < comp.size(); ++i) phi[idx(comp[i])] = part[i];
            }
            return phi;
        }
        if (z.empty()) {
            lists[0] = lists[0].lowest(3);
            z = {0};
        }

        if (n <= kBaseCaseVertices) {
            ++stats.base_cases;
            auto phi = solve(g.graph(), lists, demand, SolveOptions{kBaseCaseVertices});
            if (!phi) fail(g, lists, z, "base case has no coloring");
            return *phi;
        }

        if (const auto cuts = cut_vertices(g.graph()); !cuts.empty()) {
            ++stats.cut_splits;
            return split(g, lists, z, std::vector<VertexId>{cuts.front()}, depth);
        }
        if (const auto tris = nonfacial_triangles(g); !tris.empty()) {
            ++stats.triangle_splits;
            return split(g, lists, z, tris.front(), depth);
        }

        const auto config = find_configuration(g, z);
        if (!config) fail(g, lists, z, "no reducible configuration found");
        return reduce_step(g, lists, z, *config, depth);
    }

    // Delete the configuration's delete set, color the rest, extend over the witness.
    SetColoring reduce_step(const PlaneGraph& g, const ListAssignment& lists, const std::vector<VertexId>& z,
                            const Configuration& c, int depth) {
        const int n = g.vertex_count();
        const Demand demand = uniform_demand(n, 3);
        if (const std::string why = check_configuration(g.graph(), z, c); !why.empty())
            fail(g, lists, z, "configuration " + c.describe() + " fails re-check: " + why);
        ++stats.uses[idx(static_cast<int>(c.kind))];

        std::vector<VertexId> keep;
        for (VertexId v = 0; v < n; ++v)
            if (!contains(c.delete_set, v)) keep.push_back(v);
        const SetColoring psi0 = color(g.induced(keep), pick(lists, keep), local_z(z, keep), depth + 1);

        SetColoring psi(idx(n));
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (!contains(c.witness, keep[i])) psi[idx(keep[i])] = psi0[i];

        SetColoring phi = psi;
        try {
            const RestrictedLists r = restrict_lists(g.graph(), lists, c.witness, psi);
            const SetColoring local = extend_configuration(c, r.lists);
            for (std::size_t i = 0; i < c.witness.size(); ++i) phi[idx(c.witness[i])] = local[i];
        } catch (const std::exception& e) {
            fail(g, lists, z, "extension over " + c.describe() + " failed: " + e.what());
        }
        if (const Verdict v = check_coloring(g.graph(), lists, demand, phi); !v)
            fail(g, lists, z, "extension over " + c.describe() + " is invalid: " + v.violation);
        return phi;
    }

    SetColoring split(const PlaneGraph& g, const ListAssignment& lists, const std::vector<VertexId>& z,
                      const std::vector<VertexId>& sep, int depth) {
        const Split s = split_at(g, sep, z);
        const SetColoring phi1 = color(s.first, pick(lists, s.first_map), local_z(z, s.first_map), depth + 1);

        ListAssignment lists2 = pick(lists, s.second_map);
        std::vector<VertexId> z2;
        for (std::size_t i = 0; i < s.second_map.size(); ++i) {
            if (!contains(sep, s.second_map[i])) continue;
            const auto at = std::find(s.first_map.begin(), s.first_map.end(), s.second_map[i]) - s.first_map.begin();
            lists2[i] = phi1[static_cast<std::size_t>(at)];
            z2.push_back(static_cast<VertexId>(i));
        }
        const SetColoring phi2 = color(s.second, std::move(lists2), std::move(z2), depth + 1);

        SetColoring phi(idx(g.vertex_count()));
        for (std::size_t i = 0; i < s.first_map.size(); ++i) phi[idx(s.first_map[i])] = phi1[i];
        for (std::size_t i = 0; i < s.second_map.size(); ++i) phi[idx(s.second_map[i])] = phi2[i];
        return phi;
    }
};

}  // namespace

std::string_view config_name(ConfigKind k) {
    switch (k) {
    case ConfigKind::Deg2: return "DEG2";
    case ConfigKind::Path33: return "PATH33";
    case ConfigKind::Tria3: return "TRIA3";
    case ConfigKind::Cycle6: return "CYCLE6";
    case ConfigKind::Vert4: return "VERT4";
    case ConfigKind::Path34: return "PATH34";
    case ConfigKind::Vert5M: return "VERT5M";
    case ConfigKind::Vert5N3: return "VERT5N3";
    case ConfigKind::Vert5P43: return "VERT5P43";
    }
    return "?";
}

std::string Configuration::describe() const {
    std::ostringstream os;
    os << config_name(kind) << " [";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? " " : "") << witness[i];
    os << "] delete [";
    for (std::size_t i = 0; i < delete_set.size(); ++i) os << (i ? " " : "") << delete_set[i];
    os << ']';
    if (kind == ConfigKind::Cycle6) os << " pair " << pair.first << ',' << pair.second;
    if ((kind == ConfigKind::Vert5M || kind == ConfigKind::Vert5P43) && edge) os << " edge";
    if (kind == ConfigKind::Vert5N3 && pendant != PendantEdge::None)
        os << (pendant == PendantEdge::V1V2 ? " v1v2" : pendant == PendantEdge::V2V3 ? " v2v3" : " v1v3");
    return os.str();
}

std::optional<Configuration> find_configuration(const PlaneGraph& g, std::span<const VertexId> z) {
    Finder f(g, z);
    for (ConfigKind k : kAllConfigKinds) {
        auto found = f.all(k, true);
        if (!found.empty()) return found.front();
    }
    return std::nullopt;
}

std::vector<Configuration> find_all(const PlaneGraph& g, std::span<const VertexId> z, ConfigKind kind) {
    return Finder(g, z).all(kind, false);
}

std::string check_configuration(const Graph& g, std::span<const VertexId> z, const Configuration& c) {
    const auto& w = c.witness;
    const auto deg = [&](std::size_t i) { return g.degree(w[i]); };
    const auto adj = [&](std::size_t i, std::size_t k) { return g.adjacent(w[i], w[k]); };
    const auto sizes = [&](std::size_t k) { return w.size() == k; };
    for (VertexId v : w) {
        if (v < 0 || v >= g.size()) return "witness vertex out of range";
        if (contains(z, v)) return "witness vertex " + std::to_string(v) + " is precolored";
    }
    if (!distinct(w)) return "witness repeats a vertex";
    for (VertexId v : c.delete_set)
        if (!contains(w, v)) return "deleted vertex outside the witness";
    const int e = induced_edges(g, w);

    switch (c.kind) {
    case ConfigKind::Deg2:
        if (!sizes(1) || deg(0) > 2) return "vertex degree exceeds 2";
        return {};
    case ConfigKind::Path33:
    case ConfigKind::Path34: {
        const bool p33 = c.kind == ConfigKind::Path33;
        const std::size_t k = w.size();
        if (p33 ? (k < 3 || k > 6) : (k < 5 || k > 7)) return "path length out of range";
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (!adj(i, i + 1)) return "consecutive path vertices not adjacent";
        if (e != static_cast<int>(k) - 1) return "path is not induced";
        for (std::size_t i = 0; i < k; ++i) {
            const bool three = i == 0 || i == k - 1 || (p33 ? i == 1 : i == 2);
            if (deg(i) != (three ? 3 : 4)) return "degree pattern violated at position " + std::to_string(i + 1);
        }
        return {};
    }
    case ConfigKind::Tria3:
        if (!sizes(4)) return "needs four vertices";
        if (!adj(0, 1) || !adj(1, 2) || !adj(0, 2) || !adj(2, 3) || e != 4) return "not a triangle with a pendant edge";
        if (deg(1) != 3 || deg(3) != 3 || deg(0) > 4 || deg(2) > 4) return "degree condition violated";
        return {};
    case ConfigKind::Cycle6: {
        if (!sizes(6)) return "needs six vertices";
        for (std::size_t i = 0; i < 6; ++i)
            if (!adj(i, (i + 1) % 6)) return "not a cycle";
        if (e != 6) return "cycle has a chord";
        for (std::size_t i = 0; i < 6; ++i)
            if (deg(i) > 4) return "cycle vertex of degree above 4";
        const auto [a, b] = c.pair;
        if (a == b || a < 0 || b < 0 || a > 5 || b > 5 || deg(idx(a)) != 3 || deg(idx(b)) != 3)
            return "pair is not two 3-vertices";
        if (c.delete_set != std::vector<VertexId>{w[idx(a)], w[idx(b)]}) return "delete set is not the pair";
        return {};
    }
    case ConfigKind::Vert4:
        if (!sizes(4) || deg(0) != 4) return "center is not a 4-vertex";
        for (std::size_t i = 1; i < 4; ++i)
            if (!adj(0, i) || deg(i) != 3) return "leaf is not a 3-neighbor";
        if (e != 3) return "leaves are not independent";
        return {};
    case ConfigKind::Vert5M:
        if (!sizes(5) || deg(0) != 5) return "center is not a 5-vertex";
        for (std::size_t i = 1; i < 5; ++i)
            if (!adj(0, i) || deg(i) != 3) return "leaf is not a 3-neighbor";
        if (e != 4 + static_cast<int>(c.edge) || (c.edge && !adj(3, 4))) return "leaf edges do not match";
        return {};
    case ConfigKind::Vert5N3: {
        if (!sizes(5) || deg(0) != 5) return "center is not a 5-vertex";
        for (std::size_t i = 1; i < 4; ++i)
            if (!adj(0, i) || deg(i) != 3) return "leaf is not a 3-neighbor";
        if (deg(4) != 3 || !adj(1, 4) || adj(0, 4) || adj(2, 4) || adj(3, 4)) return "pendant u1 misplaced";
        const bool want12 = c.pendant == PendantEdge::V1V2, want23 = c.pendant == PendantEdge::V2V3,
                   want13 = c.pendant == PendantEdge::V1V3;
        if (adj(1, 2) != want12 || adj(2, 3) != want23 || adj(1, 3) != want13) return "leaf edge does not match";
        return {};
    }
    case ConfigKind::Vert5P43:
        if (!sizes(6)) return "needs six vertices";
        if (deg(2) != 5 || deg(1) != 4 || deg(0) != 3 || deg(3) != 3 || deg(4) != 3 || deg(5) != 3)
            return "degree condition violated";
        if (!adj(0, 1) || !adj(1, 2) || !adj(2, 3) || !adj(3, 4) || !adj(2, 5)) return "path or leaf edge missing";
        if (adj(1, 5) != c.edge || e != 5 + static_cast<int>(c.edge)) return "extra edges in H";
        return {};
    }
    return "unknown kind";
}

RestrictedLists restrict_lists(const Graph& g, std::span<const ColorSet> lists, std::span<const VertexId> h,
                               std::span<const ColorSet> psi) {
    const int n = g.size();
    if (lists.size() != idx(n) || psi.size() != idx(n))
        throw PreconditionError("restrict_lists: per-vertex data does not match the vertex count");
    std::vector<char> in_h(idx(n), 0);
    for (VertexId v : h) {
        if (v < 0 || v >= n) throw PreconditionError("restrict_lists: H vertex out of range");
        in_h[idx(v)] = 1;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (in_h[idx(v)]) continue;
        if (psi[idx(v)].size() != 3 || !psi[idx(v)].subset_of(lists[idx(v)]))
            throw PreconditionError("restrict_lists: psi(" + std::to_string(v) + ") is not a 3-subset of its list");
        for (VertexId u : g.neighbors(v))
            if (!in_h[idx(u)] && psi[idx(u)].intersects(psi[idx(v)]))
                throw PreconditionError("restrict_lists: psi conflicts on edge " + std::to_string(v) + "-" +
                                        std::to_string(u));
    }
    RestrictedLists r;
    r.vertices.assign(h.begin(), h.end());
    for (VertexId v : h) {
        ColorSet l = lists[idx(v)];
        int deg_h = 0;
        for (VertexId u : g.neighbors(v)) {
            if (in_h[idx(u)]) ++deg_h;
            else l -= psi[idx(u)];
        }
        if (l.size() < lists[idx(v)].size() - 3 * (g.degree(v) - deg_h))
            throw std::logic_error("restrict_lists: size bound violated");
        r.lists.push_back(l);
    }
    return r;
}

SetColoring extend_configuration(const Configuration& c, std::span<const ColorSet> lists) {
    switch (c.kind) {
    case ConfigKind::Deg2: {
        const Graph single(std::vector<std::vector<VertexId>>(1));
        const std::vector<VertexId> order{0};
        return greedy_color(single, lists, uniform_demand(1, 3), order);
    }
    case ConfigKind::Path33:
        switch (lists.size()) {
        case 3: return color_p3(lists);
        case 4: return color_p4(lists);
        case 5: return color_p5(lists);
        default: return color_p6(lists);
        }
    case ConfigKind::Tria3: return color_lollipop(lists);
    case ConfigKind::Cycle6: return color_c6(lists, c.pair);
    case ConfigKind::Vert4: return color_claw3(lists);
    case ConfigKind::Path34: return color_path_v3big(lists);
    case ConfigKind::Vert5M: return color_claw4(lists, c.edge);
    case ConfigKind::Vert5N3: return color_claw3_pendant(lists, c.pendant);
    case ConfigKind::Vert5P43: return color_path_plus_leaf(lists, c.edge);
    }
    throw std::logic_error("extend_configuration: unknown kind");
}

namespace {

void validate_input(const PlaneGraph& g, std::span<const ColorSet> lists, std::span<const VertexId> z) {
    const int n = g.vertex_count();
    if (lists.size() != idx(n)) throw PreconditionError("reduce_and_extend: one list per vertex required");
    if (!in_class(g.graph())) throw GraphError("graph contains a 4- or 5-cycle");
    if (!z.empty()) {
        PrecoloredClique clique;
        for (VertexId v : z) {
            if (v < 0 || v >= n) throw GraphError("precolored vertex out of range");
            clique.vertices.push_back(v);
            clique.colors.push_back(lists[idx(v)]);
        }
        clique.validate(g.graph());
    }
    for (VertexId v = 0; v < n; ++v)
        if (!contains(z, v) && lists[idx(v)].size() < 11)
            throw PreconditionError("vertex " + std::to_string(v) + " has fewer than 11 colors");
}

template <class Run>
ReduceOutcome run_reducer(const PlaneGraph& g, std::span<const ColorSet> lists, Run run) {
    const int n = g.vertex_count();
    Reducer r;
    ReduceOutcome out;
    try {
        out.coloring = run(r);
        const Verdict v = check_coloring(g.graph(), lists, uniform_demand(n, 3), out.coloring);
        out.ok = static_cast<bool>(v);
        if (!out.ok) out.failure = "FAILURE final coloring invalid: " + v.violation + '\n';
    } catch (const ReductionFailure& e) {
        out.ok = false;
        out.coloring.clear();
        out.failure = e.what();
    }
    out.stats = r.stats;
    return out;
}

}  // namespace

ReduceOutcome reduce_and_extend(const PlaneGraph& g, std::span<const ColorSet> lists, std::span<const VertexId> z) {
    validate_input(g, lists, z);
    return run_reducer(g, lists, [&](Reducer& r) {
        return r.color(g, ListAssignment(lists.begin(), lists.end()), std::vector<VertexId>(z.begin(), z.end()), 0);
    });
}

ReduceOutcome reduce_with(const PlaneGraph& g, std::span<const ColorSet> lists, std::span<const VertexId> z,
                          const Configuration& c) {
    validate_input(g, lists, z);
    return run_reducer(g, lists, [&](Reducer& r) {
        return r.reduce_step(g, ListAssignment(lists.begin(), lists.end()), std::vector<VertexId>(z.begin(), z.end()),
                             c, 0);
    });
}

IndependentSet independence_ratio(const Graph& g, std::span<const ColorSet> phi) {
    const int n = g.size();
    if (phi.size() != idx(n)) throw PreconditionError("independence_ratio: one color set per vertex required");
    const Demand three = uniform_demand(n, 3);
    if (const Verdict v = check_set_coloring(g, three, phi); !v)
        throw PreconditionError("independence_ratio: not a 3-fold coloring: " + v.violation);
    IndependentSet best;
    best.n = n;
    for (int c = 1; c <= ColorSet::kMaxColor; ++c) {
        std::vector<VertexId> cls;
        for (VertexId v = 0; v < n; ++v)
            if (phi[idx(v)].contains(c)) cls.push_back(v);
        if (cls.size() > best.vertices.size()) {
            best.vertices = std::move(cls);
            best.color = c;
        }
    }
    return best;
}

}  // namespace setcolor
