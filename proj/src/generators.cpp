#include "setcolor/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Drawing {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<VertexId, VertexId>> edges;

    VertexId add(double x, double y) {
        pts.emplace_back(x, y);
        return static_cast<VertexId>(pts.size() - 1);
    }
    void edge(VertexId a, VertexId b) { edges.emplace_back(a, b); }

    // Path of `k` edges from a to b through new points on the segment.
    void path(VertexId a, VertexId b, int k) {
        VertexId prev = a;
        const auto [ax, ay] = pts[idx(a)];
        const auto [bx, by] = pts[idx(b)];
        for (int i = 1; i < k; ++i) {
            const double t = static_cast<double>(i) / k;
            const VertexId m = add(ax + t * (bx - ax), ay + t * (by - ay));
            edge(prev, m);
            prev = m;
        }
        edge(prev, b);
    }
};

}  // namespace

PlaneGraph from_drawing(const std::vector<std::pair<double, double>>& points,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<VertexId>> rot(idx(n));
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw GraphError("from_drawing: edge endpoint out of range");
        rot[idx(a)].push_back(b);
        rot[idx(b)].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        const auto [x, y] = points[idx(v)];
        auto angle = [&](VertexId u) { return std::atan2(points[idx(u)].second - y, points[idx(u)].first - x); };
        std::sort(rot[idx(v)].begin(), rot[idx(v)].end(), [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
    }
    return PlaneGraph::build(std::move(rot));
}

PlaneGraph hex_fragment(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("hex_fragment: needs at least 2 rows and 2 columns");
    Drawing d;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) d.add(c, -r);
    const auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) d.edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows && (r + c) % 2 == 0) d.edge(id(r, c), id(r + 1, c));
        }
    return from_drawing(d.pts, d.edges);
}

PlaneGraph triangle_chain(int count, int path_edges) {
    if (count < 1 || path_edges < 1) throw std::invalid_argument("triangle_chain: bad parameters");
    Drawing d;
    VertexId prev_right = -1;
    for (int i = 0; i < count; ++i) {
        const double x = i * (path_edges + 2.0);
        const VertexId a = d.add(x, 0), b = d.add(x + 1, 0), c = d.add(x + 0.5, 1);
        d.edge(a, b);
        d.edge(b, c);
        d.edge(a, c);
        if (prev_right >= 0) d.path(prev_right, a, path_edges);
        prev_right = b;
    }
    return from_drawing(d.pts, d.edges);
}

PlaneGraph triangle_ring(int count, int path_edges) {
    if (count < 2 || path_edges < 1) throw std::invalid_argument("triangle_ring: bad parameters");
    Drawing d;
    const double pi = std::acos(-1.0);
    const double radius = count * (path_edges + 2.0);
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (int i = 0; i < count; ++i) {
        const double t = 2 * pi * i / count;
        const double dt = 0.6 / radius;
        const VertexId a = d.add(radius * std::cos(t - dt), radius * std::sin(t - dt));
        const VertexId b = d.add(radius * std::cos(t + dt), radius * std::sin(t + dt));
        const VertexId c = d.add((radius + 1) * std::cos(t), (radius + 1) * std::sin(t));
        d.edge(a, b);
        d.edge(b, c);
        d.edge(a, c);
        ends.emplace_back(a, b);
    }
    for (int i = 0; i < count; ++i) d.path(ends[idx(i)].second, ends[idx((i + 1) % count)].first, path_edges);
    return from_drawing(d.pts, d.edges);
}

PlaneBuilder::PlaneBuilder(int cycle_length) {
    if (cycle_length < 3) throw std::invalid_argument("PlaneBuilder: cycle needs at least 3 vertices");
    for (int i = 0; i < cycle_length; ++i)
        rot_.push_back({(i + cycle_length - 1) % cycle_length, (i + 1) % cycle_length});
}

void PlaneBuilder::insert_at_corner(VertexId v, int corner, VertexId u) {
    auto& r = rot_[idx(v)];
    if (corner < 0 || corner >= static_cast<int>(std::max<std::size_t>(r.size(), 1)))
        throw std::invalid_argument("PlaneBuilder: no such corner");
    r.insert(r.begin() + (r.empty() ? 0 : corner + 1), u);
}

VertexId PlaneBuilder::add_pendant(VertexId v, int corner) {
    const VertexId w = vertex_count();
    rot_.push_back({v});
    insert_at_corner(v, corner, w);
    return w;
}

std::vector<VertexId> PlaneBuilder::add_ear(VertexId a, int ca, VertexId b, int cb, int edges) {
    if (a == b || edges < 1) throw std::invalid_argument("PlaneBuilder: bad ear");
    std::vector<VertexId> inner;
    for (int i = 1; i < edges; ++i) inner.push_back(vertex_count() + i - 1);
    std::vector<VertexId> chain{a};
    chain.insert(chain.end(), inner.begin(), inner.end());
    chain.push_back(b);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) rot_.push_back({chain[i - 1], chain[i + 1]});
    insert_at_corner(a, ca, chain[1]);
    insert_at_corner(b, cb, chain[chain.size() - 2]);
    return inner;
}

VertexId PlaneBuilder::add_triangle(VertexId u, VertexId v) {
    auto& ru = rot_[idx(u)];
    auto& rv = rot_[idx(v)];
    const auto pu = std::find(ru.begin(), ru.end(), v);
    const auto pv = std::find(rv.begin(), rv.end(), u);
    if (pu == ru.end() || pv == rv.end()) throw std::invalid_argument("PlaneBuilder: add_triangle needs an edge");
    const VertexId w = vertex_count();
    ru.insert(pu, w);                        // just before v at u
    rv.insert(pv + 1, w);                    // just after u at v
    rot_.push_back({v, u});
    return w;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

PlaneGraph random_class_graph(std::uint64_t seed, const RandomGraphOptions& o) {
    if (o.min_vertices < 3 || o.max_vertices < o.min_vertices)
        throw std::invalid_argument("random_class_graph: bad vertex range");
    std::mt19937_64 rng(seed);
    const auto unit = [&]() { return static_cast<double>(uniform_below(rng, 1'000'000)) / 1e6; };
    const int target =
        o.min_vertices + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(o.max_vertices - o.min_vertices + 1)));
    const int start = target >= 6 && uniform_below(rng, 2) == 0 ? 6 : 3;
    PlaneBuilder b(start);
    const double total = o.triangle_weight + o.ear_weight + o.pendant_weight;

    for (int attempts = 0; b.vertex_count() < target && attempts < 200 * target; ++attempts) {
        PlaneBuilder trial = b;
        const PlaneGraph g = b.build();
        const double r = unit() * total;
        const int room = target - b.vertex_count();
        if (r < o.triangle_weight) {
            const auto edges = g.graph().edges();
            auto [u, v] = edges[uniform_below(rng, edges.size())];
            if (uniform_below(rng, 2)) std::swap(u, v);
            trial.add_triangle(u, v);
        } else if (r < o.triangle_weight + o.ear_weight) {
            const Face& f = g.face(static_cast<int>(uniform_below(rng, g.faces().size())));
            if (f.length() < 2) continue;
            const auto i = uniform_below(rng, static_cast<std::uint64_t>(f.length()));
            const auto k = uniform_below(rng, static_cast<std::uint64_t>(f.length()));
            if (f.walk[i] == f.walk[k]) continue;
            const int max_edges = std::min(o.max_ear_edges, room + 1);
            const int edges = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_edges)));
            if (edges == 1 && g.adjacent(f.walk[i], f.walk[k])) continue;
            trial.add_ear(f.walk[i], f.corner[i], f.walk[k], f.corner[k], edges);
        } else {
            const VertexId v = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(b.vertex_count())));
            trial.add_pendant(v, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.degree(v)))));
        }
        if (trial.vertex_count() > target) continue;
        if (!in_class(trial.build().graph())) continue;
        b = std::move(trial);
    }
    if (!o.saturate) return b.build();

    // chords inside faces, in random order, while the class allows
    for (bool grew = true; grew;) {
        grew = false;
        const PlaneGraph g = b.build();
        std::vector<std::array<int, 3>> cand;  // face, i, k
        for (const Face& f : g.faces())
            for (int i = 0; i < f.length(); ++i)
                for (int k = i + 1; k < f.length(); ++k)
                    if (f.walk[idx(i)] != f.walk[idx(k)] && !g.adjacent(f.walk[idx(i)], f.walk[idx(k)]))
                        cand.push_back({f.id, i, k});
        for (std::size_t i = cand.size(); i > 1; --i) std::swap(cand[i - 1], cand[uniform_below(rng, i)]);
        for (const auto& [fid, i, k] : cand) {
            const Face& f = g.face(fid);
            PlaneBuilder trial = b;
            trial.add_ear(f.walk[idx(i)], f.corner[idx(i)], f.walk[idx(k)], f.corner[idx(k)], 1);
            if (!in_class(trial.build().graph())) continue;
            b = std::move(trial);
            grew = true;
            break;
        }
    }
    return b.build();
}

PlaneGraph random_cubic_plane(int vertices, std::uint64_t seed) {
    if (vertices < 4 || vertices % 2 != 0) throw std::invalid_argument("random_cubic_plane: needs an even count >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<VertexId>> rot{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    PlaneGraph g = PlaneGraph::build(rot);
    const auto replace = [&](VertexId v, VertexId from, VertexId to) {
        *std::find(rot[idx(v)].begin(), rot[idx(v)].end(), from) = to;
    };
    while (static_cast<int>(rot.size()) < vertices) {
        const Face& f = g.face(static_cast<int>(uniform_below(rng, g.faces().size())));
        const auto len = static_cast<std::uint64_t>(f.length());
        const auto i = static_cast<int>(uniform_below(rng, len));
        const auto k = static_cast<int>(uniform_below(rng, len));
        if (i == k) continue;
        // darts a -> b and c -> d of f; subdivide with x and y, join x y inside f
        const VertexId a = f.walk[idx(i)], b = f.walk[idx((i + 1) % f.length())];
        const VertexId c = f.walk[idx(k)], d = f.walk[idx((k + 1) % f.length())];
        if ((a == d && b == c) || (a == c && b == d)) continue;
        const VertexId x = static_cast<VertexId>(rot.size()), y = x + 1;
        replace(a, b, x);
        replace(b, a, x);
        replace(c, d, y);
        replace(d, c, y);
        rot.push_back({a, y, b});
        rot.push_back({c, x, d});
        g = PlaneGraph::build(rot);
    }
    return g;
}

PlaneGraph truncate_cubic(const PlaneGraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3) throw GraphError("truncate_cubic: graph is not 3-regular");
    // vertex (v, i) sits on the edge to rotation(v)[i]
    const auto id = [](VertexId v, int i) { return 3 * v + i; };
    std::vector<std::vector<VertexId>> rot(idx(3 * n));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) {
            const VertexId u = g.rotation(v)[idx(i)];
            rot[idx(id(v, i))] = {id(u, g.position(u, v)), id(v, (i + 1) % 3), id(v, (i + 2) % 3)};
        }
    return PlaneGraph::build(std::move(rot));
}

ListAssignment random_lists(int n, std::uint64_t seed, int size, int universe) {
    if (size < 0 || universe > ColorSet::kMaxColor || size > universe)
        throw std::invalid_argument("random_lists: bad size or universe");
    std::mt19937_64 rng(seed);
    ListAssignment out;
    for (int v = 0; v < n; ++v) {
        std::vector<int> pool(idx(universe));
        for (int c = 0; c < universe; ++c) pool[idx(c)] = c + 1;
        ColorSet s;
        // partial Fisher-Yates
        for (int i = 0; i < size; ++i) {
            const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(universe - i)));
            std::swap(pool[idx(i)], pool[idx(j)]);
            s.insert(pool[idx(i)]);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace setcolor
