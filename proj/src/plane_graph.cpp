#include "setcolor/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

PlaneGraph PlaneGraph::build(std::vector<std::vector<VertexId>> rotation) {
    PlaneGraph pg;
    pg.graph_ = Graph(std::move(rotation));
    const Graph& g = pg.graph_;
    const int n = g.size();

    // dart (v, i) is the directed edge v -> rotation(v)[i]
    std::vector<std::vector<int>> dart_face(idx(n));
    pg.corner_face_.assign(idx(n), {});
    for (int v = 0; v < n; ++v) {
        dart_face[idx(v)].assign(idx(g.degree(v)), -1);
        pg.corner_face_[idx(v)].assign(idx(g.degree(v)), -1);
    }

    for (int s = 0; s < n; ++s) {
        if (g.degree(s) == 0) {
            Face f;
            f.id = static_cast<int>(pg.faces_.size());
            pg.faces_.push_back(std::move(f));
            continue;
        }
        for (int si = 0; si < g.degree(s); ++si) {
            if (dart_face[idx(s)][idx(si)] >= 0) continue;
            Face f;
            f.id = static_cast<int>(pg.faces_.size());
            int u = s, i = si;
            std::vector<int> arrive;  // corner index at the head of each dart
            do {
                dart_face[idx(u)][idx(i)] = f.id;
                const VertexId v = g.neighbors(u)[idx(i)];
                const int j = pg.position(v, u);
                f.walk.push_back(u);
                arrive.push_back(j);
                pg.corner_face_[idx(v)][idx(j)] = f.id;
                u = v;
                i = (j + 1) % g.degree(v);
            } while (u != s || i != si);
            // the corner at walk[k] is the arrival corner of dart k-1
            const std::size_t len = f.walk.size();
            f.corner.resize(len);
            for (std::size_t k = 0; k < len; ++k) f.corner[(k + 1) % len] = arrive[k];
            pg.faces_.push_back(std::move(f));
        }
    }

    // Euler's formula per component (isolated vertices carry their own empty face).
    const auto comps = g.components();
    std::vector<int> comp_of(idx(n), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[idx(v)] = static_cast<int>(c);
    std::vector<long> vcount(comps.size(), 0), ecount(comps.size(), 0), fcount(comps.size(), 0);
    for (int v = 0; v < n; ++v) {
        ++vcount[idx(comp_of[idx(v)])];
        ecount[idx(comp_of[idx(v)])] += g.degree(v);
    }
    int next_isolated = 0;
    for (const Face& f : pg.faces_) {
        if (f.walk.empty()) {
            while (g.degree(next_isolated) != 0) ++next_isolated;
            ++fcount[idx(comp_of[idx(next_isolated)])];
            ++next_isolated;
        } else {
            ++fcount[idx(comp_of[idx(f.walk.front())])];
        }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const long euler = vcount[c] - ecount[c] / 2 + fcount[c];
        if (euler != 2)
            throw GraphError("rotation system is not plane: component containing vertex " +
                             std::to_string(comps[c].front()) + " has V - E + F = " + std::to_string(euler));
    }
    return pg;
}

int PlaneGraph::position(VertexId v, VertexId u) const {
    const auto rot = rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return static_cast<int>(i);
    return -1;
}

int PlaneGraph::dart_face(VertexId u, VertexId v) const {
    const int i = position(u, v);
    if (i < 0) throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    const int d = degree(u);
    return corner_face(u, (i - 1 + d) % d);
}

std::vector<std::vector<VertexId>> PlaneGraph::rotations() const {
    std::vector<std::vector<VertexId>> out(idx(vertex_count()));
    for (int v = 0; v < vertex_count(); ++v) {
        auto r = rotation(v);
        out[idx(v)].assign(r.begin(), r.end());
    }
    return out;
}

PlaneGraph PlaneGraph::induced(std::span<const VertexId> keep) const {
    std::vector<int> index(idx(vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[idx(keep[i])] = static_cast<int>(i);
    std::vector<std::vector<VertexId>> rot(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (VertexId u : rotation(keep[i]))
            if (index[idx(u)] >= 0) rot[i].push_back(index[idx(u)]);
    return build(std::move(rot));
}

PlaneGraph PlaneGraph::mirrored() const {
    auto rot = rotations();
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return build(std::move(rot));
}

bool PrecoloredClique::contains(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void PrecoloredClique::validate(const Graph& g) const {
    if (vertices.empty() || vertices.size() > 3)
        throw GraphError("precolored clique must have 1 to 3 vertices");
    if (colors.size() != vertices.size()) throw GraphError("precolored clique needs one color set per vertex");
    ColorSet seen;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.size())
            throw GraphError("precolored vertex " + std::to_string(vertices[i]) + " out of range");
        if (colors[i].size() != 3)
            throw GraphError("precolored vertex " + std::to_string(vertices[i]) + " needs exactly 3 colors");
        if (seen.intersects(colors[i])) throw GraphError("precolored color sets are not pairwise disjoint");
        seen |= colors[i];
        for (std::size_t j = 0; j < i; ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                throw GraphError("precolored vertices do not form a clique");
    }
}

std::vector<std::vector<VertexId>> forbidden_cycles(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::vector<char> on(idx(g.size()), 0);
    // cycles are rooted at their smallest vertex s; only larger vertices are visited
    std::function<void(VertexId)> extend = [&](VertexId s) {
        const VertexId last = path.back();
        for (VertexId u : g.neighbors(last)) {
            if (u == s && (path.size() == 4 || path.size() == 5) && path[1] < path.back()) out.push_back(path);
            if (u <= s || on[idx(u)] || path.size() >= 5) continue;
            on[idx(u)] = 1;
            path.push_back(u);
            extend(s);
            path.pop_back();
            on[idx(u)] = 0;
        }
    };
    for (VertexId s = 0; s < g.size(); ++s) {
        path.assign(1, s);
        on[idx(s)] = 1;
        extend(s);
        on[idx(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_class(const Graph& g) { return forbidden_cycles(g).empty(); }

bool is_internal(VertexId v, std::span<const VertexId> z) {
    return std::find(z.begin(), z.end(), v) == z.end();
}

VertexClass vertex_class(const Graph& g, VertexId v, std::span<const VertexId> z, int k) {
    if (is_internal(v, z) && g.degree(v) == k) return VertexClass::KVertex;
    if (!is_internal(v, z) || g.degree(v) > k) return VertexClass::KPlusOnly;
    return VertexClass::Neither;
}

bool is_k_vertex(const Graph& g, VertexId v, std::span<const VertexId> z, int k) {
    return vertex_class(g, v, z, k) == VertexClass::KVertex;
}

bool is_k_plus_vertex(const Graph& g, VertexId v, std::span<const VertexId> z, int k) {
    return vertex_class(g, v, z, k) != VertexClass::Neither;
}

std::vector<VertexId> cut_vertices(const Graph& g) {
    const int n = g.size();
    std::vector<int> disc(idx(n), -1), low(idx(n), 0);
    std::vector<char> cut(idx(n), 0);
    int timer = 0;
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[idx(v)] = low[idx(v)] = timer++;
        int children = 0;
        for (VertexId u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[idx(u)] >= 0) {
                low[idx(v)] = std::min(low[idx(v)], disc[idx(u)]);
                continue;
            }
            ++children;
            dfs(u, v);
            low[idx(v)] = std::min(low[idx(v)], low[idx(u)]);
            if (parent >= 0 && low[idx(u)] >= disc[idx(v)]) cut[idx(v)] = 1;
        }
        if (parent < 0 && children > 1) cut[idx(v)] = 1;
    };
    for (int v = 0; v < n; ++v)
        if (disc[idx(v)] < 0) dfs(v, -1);
    std::vector<VertexId> out;
    for (int v = 0; v < n; ++v)
        if (cut[idx(v)]) out.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> triangles(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b : g.neighbors(a)) {
            if (b <= a) continue;
            for (VertexId c : g.neighbors(b))
                if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> nonfacial_triangles(const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> facial;
    for (const Face& f : g.faces())
        if (f.length() == 3) {
            std::vector<VertexId> t = f.walk;
            std::sort(t.begin(), t.end());
            facial.push_back(std::move(t));
        }
    std::sort(facial.begin(), facial.end());
    std::vector<std::vector<VertexId>> out;
    for (auto& t : triangles(g.graph()))
        if (!std::binary_search(facial.begin(), facial.end(), t)) out.push_back(t);
    return out;
}

Split split_at(const PlaneGraph& g, std::span<const VertexId> separator, std::span<const VertexId> z) {
    const int n = g.vertex_count();
    std::vector<char> in_sep(idx(n), 0);
    for (VertexId s : separator) in_sep[idx(s)] = 1;
    std::vector<VertexId> rest;
    for (int v = 0; v < n; ++v)
        if (!in_sep[idx(v)]) rest.push_back(v);
    const auto comps_local = g.graph().induced(rest).components();
    if (comps_local.size() < 2) throw GraphError("separator does not separate the graph");

    std::vector<char> first_side(comps_local.size(), 0);
    bool any = false;
    for (std::size_t c = 0; c < comps_local.size(); ++c)
        for (VertexId local : comps_local[c])
            if (!is_internal(rest[idx(local)], z)) first_side[c] = 1, any = true;
    if (!any) first_side[0] = 1;

    std::vector<VertexId> a(separator.begin(), separator.end()), b(separator.begin(), separator.end());
    for (std::size_t c = 0; c < comps_local.size(); ++c)
        for (VertexId local : comps_local[c]) (first_side[c] ? a : b).push_back(rest[idx(local)]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Split s;
    s.first = g.induced(a);
    s.first_map = std::move(a);
    s.second = g.induced(b);
    s.second_map = std::move(b);
    return s;
}

}  // namespace setcolor
