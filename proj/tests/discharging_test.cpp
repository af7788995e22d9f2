#include <doctest.h>

#include <algorithm>

#include <map>

#include "setcolor/discharging.hpp"
#include "setcolor/generators.hpp"
#include "support.hpp"

using namespace setcolor;
using testsupport::at;

namespace {

const HalfInt kMinus12 = HalfInt::whole(-12);

HalfInt sum(const std::vector<HalfInt>& v) {
    HalfInt s;
    for (HalfInt h : v) s += h;
    return s;
}

// Degree-4 vertex 0 with rotation v1=1, v2=2, x=3, y=4 and the triangle 0 4 1; v1 is
// raised to degree 4, v2 to degree 5 and x to degree 3 by leaves.
PlaneGraph type_i1_pattern() {
    std::vector<std::pair<double, double>> pts{{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}};
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 1}};
    const auto leaf = [&](VertexId v, double x, double y) {
        edges.emplace_back(v, static_cast<VertexId>(pts.size()));
        pts.emplace_back(x, y);
    };
    leaf(1, -0.5, 2);
    leaf(1, 0.5, 2);
    for (double y : {1.0, 0.3, -0.3, -1.0}) leaf(2, 2, y);
    leaf(3, -0.5, -2);
    leaf(3, 0.5, -2);
    return from_drawing(pts, edges);
}

PlaneGraph bowtie() { return PlaneGraph::build({{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("half integers") {
    CHECK(HalfInt::from_twice(3).to_string() == "3/2");
    CHECK(HalfInt::from_twice(-1).to_string() == "-1/2");
    CHECK(HalfInt::whole(-12).to_string() == "-12");
    CHECK(HalfInt::from_twice(1) + HalfInt::from_twice(1) == HalfInt::whole(1));
    CHECK(HalfInt::from_twice(-1) < HalfInt{});
}

TEST_CASE("initial charges") {
    const PlaneGraph g = triangle_chain(2, 1);
    const ChargeState s = initial_charges(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(s.vertex_charge[at(v)] == HalfInt::whole(2L * g.degree(v) - 6));
    for (const Face& f : g.faces()) CHECK(s.face_charge[at(f.id)] == HalfInt::whole(f.length() - 6L));
    CHECK(s.total() == kMinus12);
    // 5-vertex -> 4, 3-face -> -3, 7-face -> 1
    const PlaneGraph star = PlaneGraph::build({{1, 2, 3, 4, 5}, {0}, {0}, {0}, {0}, {0}});
    CHECK(initial_charges(star).vertex_charge[0] == HalfInt::whole(4));
    CHECK(initial_charges(star).vertex_charge[1] == HalfInt::whole(-4));
    std::vector<std::vector<VertexId>> c7(7);
    for (int i = 0; i < 7; ++i) c7[at(i)] = {(i + 6) % 7, (i + 1) % 7};
    for (HalfInt h : initial_charges(PlaneGraph::build(c7)).face_charge) CHECK(h == HalfInt::whole(1));
}

TEST_CASE("charge is conserved on the corpus, in both orientations") {
    for (const auto& named : testsupport::discharge_corpus()) {
        CAPTURE(named.name);
        for (const PlaneGraph& g : {named.graph, named.graph.mirrored()}) {
            const DischargeResult r = apply_rules(g, {});
            CHECK(r.initial.total() == kMinus12);
            CHECK(r.final_state.total() == kMinus12);
        }
    }
}

TEST_CASE("ledger explains every change of charge") {
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        const DischargeResult r = apply_rules(g, std::vector<VertexId>{0});
        std::vector<HalfInt> dv(at(g.vertex_count())), df(g.faces().size());
        for (const Transfer& t : r.final_state.transfers) {
            CHECK(t.amount > HalfInt{});
            (t.from_face ? df : dv)[at(t.source)] -= t.amount;
            df[at(t.sink)] += t.amount;
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(r.final_state.vertex_charge[at(v)] - r.initial.vertex_charge[at(v)] == dv[at(v)]);
        for (const Face& f : g.faces())
            CHECK(r.final_state.face_charge[at(f.id)] - r.initial.face_charge[at(f.id)] == df[at(f.id)]);
    }
}

TEST_CASE("Rt moves one unit per edge between a 6+-face and a 3-face") {
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        std::map<std::pair<int, int>, long> expect;
        for (const auto& [u, v] : g.graph().edges()) {
            const int a = g.dart_face(u, v), b = g.dart_face(v, u);
            const int la = g.face(a).length(), lb = g.face(b).length();
            if (la >= 6 && lb == 3) ++expect[{a, b}];
            if (lb >= 6 && la == 3) ++expect[{b, a}];
        }
        std::map<std::pair<int, int>, long> got;
        for (const Transfer& t : apply_rules(g, {}).final_state.transfers)
            if (t.rule == "Rt") got[{t.source, t.sink}] += t.amount.twice() / 2;
        CHECK(got == expect);
    }
}

TEST_CASE("3-faces among 6-faces end at zero; 1-segments of 3-vertices carry -1") {
    const PlaneGraph g = testsupport::truncated_tetrahedron();
    const DischargeResult r = apply_rules(g, {});
    for (const Face& f : g.faces()) {
        if (f.length() == 3) {
            CHECK(r.final_state.face_charge[at(f.id)] == HalfInt{});
            continue;
        }
        CHECK(f.length() == 6);
        const auto segs = segments_of(g, r, f.id);
        REQUIRE(segs.size() == 3);
        for (const Segment& s : segs) {
            CHECK(s.edges() == 1);
            CHECK(s.charge == HalfInt::whole(-1));
        }
    }
    for (HalfInt h : r.final_state.vertex_charge) CHECK(h == HalfInt{});
    CHECK(sum(r.final_state.face_charge) == kMinus12);
}

TEST_CASE("segments are vertex-disjoint and absent on triangle-free faces") {
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        const DischargeResult r = apply_rules(g, {});
        for (const Face& f : g.faces()) {
            if (f.length() < 6) continue;
            const auto segs = segments_of(g, r, f.id);
            std::multiset<VertexId> seen;
            bool any_tri = false;
            for (int i = 0; i < f.length(); ++i) {
                const int other = g.dart_face(f.walk[at((i + 1) % f.length())], f.walk[at(i)]);
                any_tri = any_tri || g.face(other).length() == 3;
            }
            if (!any_tri) CHECK(segs.empty());
            for (const Segment& s : segs)
                for (VertexId v : s.path) seen.insert(v);
            // a vertex can repeat only when the walk itself repeats it
            for (VertexId v : seen) {
                const auto on_walk = std::count(f.walk.begin(), f.walk.end(), v);
                CHECK(static_cast<long>(seen.count(v)) <= on_walk);
            }
        }
    }
}

TEST_CASE("hexagonal fragment: interior faces and 3-vertices keep zero") {
    const PlaneGraph g = hex_fragment(6, 8);
    const DischargeResult r = apply_rules(g, std::vector<VertexId>{0});
    // the precolored corner counts as a 6+-vertex and feeds its own hexagon
    for (const Face& f : g.faces()) {
        if (f.length() != 6) continue;
        const bool touches_z = std::find(f.walk.begin(), f.walk.end(), 0) != f.walk.end();
        CHECK(r.final_state.face_charge[at(f.id)] == HalfInt::whole(touches_z ? 1 : 0));
    }
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) CHECK(r.final_state.vertex_charge[at(v)] == HalfInt{});
    CHECK(r.final_state.total() == kMinus12);
}

TEST_CASE("6+-vertices end at deg - 6 whenever the bookkeeping identity holds") {
    int seen = 0;
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        for (VertexId z = 0; z < std::min(g.vertex_count(), 6); ++z) {
            const DischargeResult r = apply_rules(g, std::vector<VertexId>{z});
            for (const R6Check& c : r.r6_checks) {
                int tri = 0, big = 0;
                for (int j = 0; j < g.degree(c.vertex); ++j) {
                    const int len = g.face(g.corner_face(c.vertex, j)).length();
                    tri += len == 3;
                    big += len >= 6;
                }
                CHECK(c.t == tri);
                CHECK(c.d_ii + c.d_i + c.d_0 == big);
                if (tri + big != g.degree(c.vertex) || tri == g.degree(c.vertex)) continue;
                CHECK(c.holds());
                CHECK(r.final_state.vertex_charge[at(c.vertex)] == HalfInt::whole(g.degree(c.vertex) - 6L));
                ++seen;
            }
        }
    }
    CHECK(seen > 50);
}

TEST_CASE("a lone triangle breaks the bookkeeping identity") {
    // both faces of K3 are 3-faces, so t = 2 with no typed incidence
    const PlaneGraph k3 = PlaneGraph::build({{1, 2}, {2, 0}, {0, 1}});
    const DischargeResult r = apply_rules(k3, std::vector<VertexId>{0});
    REQUIRE(r.r6_violations().size() == 1);
    CHECK(r.r6_violations()[0].t == 2);
}

TEST_CASE("incidence types") {
    // bowtie: every corner of the outer 6-face sees a triangle across both edges,
    // including the 2-vertices whose two sides are the same triangle
    const PlaneGraph b = bowtie();
    int ii = 0;
    for (const Face& f : b.faces()) {
        if (f.length() != 6) continue;
        for (int i = 0; i < 6; ++i) ii += classify_corner(b, {}, f.walk[at(i)], f.corner[at(i)]).base == BaseType::II;
    }
    CHECK(ii == 6);

    const PlaneGraph h = hex_fragment(4, 4);
    for (const Face& f : h.faces())
        if (f.length() >= 6) CHECK(classify_incidence(h, {}, f.walk[0], f.id).base == BaseType::Zero);

    const PlaneGraph p = type_i1_pattern();
    REQUIRE(p.degree(0) == 4);
    // corner between 1 and 2; the triangle 0 4 1 lies across the edge to 1
    const int j = p.position(0, 1);
    REQUIRE(p.rotation(0)[at((j + 1) % 4)] == 2);
    REQUIRE(p.face(p.corner_face(0, (j + 3) % 4)).length() == 3);
    const IncidenceType t = classify_corner(p, {}, 0, j);
    CHECK(t.base == BaseType::I);
    CHECK(t.has(kI1));
    CHECK(t.to_string() == "I[I-1]");
    // x = 3 stops being a 3-vertex once precolored
    CHECK_FALSE(classify_corner(p, std::vector<VertexId>{3}, 0, j).has(kI1));

    for (const Face& f : b.faces())
        if (f.length() == 3) CHECK_THROWS_AS(classify_incidence(b, {}, f.walk[0], f.id), std::invalid_argument);
    CHECK_THROWS_AS(classify_incidence(b, {}, 0, 99), std::invalid_argument);
}

TEST_CASE("base type counts triangles across the two flanking edges") {
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const int d = g.degree(v);
            for (int j = 0; j < d; ++j) {
                const int f = g.corner_face(v, j);
                if (g.face(f).length() < 6) continue;
                const VertexId a = g.rotation(v)[at(j)], b = g.rotation(v)[at((j + 1) % d)];
                // faces on the far side of edges v-a and v-b
                const int fa = g.dart_face(a, v) == f ? g.dart_face(v, a) : g.dart_face(a, v);
                const int fb = g.dart_face(v, b) == f ? g.dart_face(b, v) : g.dart_face(v, b);
                const int tris = (fa != f && g.face(fa).length() == 3) + (fb != f && g.face(fb).length() == 3);
                const BaseType want = tris == 2 ? BaseType::II : tris == 1 ? BaseType::I : BaseType::Zero;
                CHECK(classify_corner(g, {}, v, j).base == want);
            }
        }
    }
}

TEST_CASE("mirroring changes no charge") {
    for (const auto& named : testsupport::discharge_corpus()) {
        const PlaneGraph& g = named.graph;
        const PlaneGraph m = g.mirrored();
        const DischargeResult a = apply_rules(g, {}), b = apply_rules(m, {});
        CHECK(a.final_state.vertex_charge == b.final_state.vertex_charge);
        // faces are re-numbered; compare by vertex set and length
        std::map<std::vector<VertexId>, std::vector<HalfInt>> fa, fb;
        for (const Face& f : g.faces()) {
            std::vector<VertexId> key = f.walk;
            std::sort(key.begin(), key.end());
            fa[key].push_back(a.final_state.face_charge[at(f.id)]);
        }
        for (const Face& f : m.faces()) {
            std::vector<VertexId> key = f.walk;
            std::sort(key.begin(), key.end());
            fb[key].push_back(b.final_state.face_charge[at(f.id)]);
        }
        for (auto& [k, v] : fa) std::sort(v.begin(), v.end());
        for (auto& [k, v] : fb) std::sort(v.begin(), v.end());
        CHECK(fa == fb);
    }
}

TEST_CASE("audit report") {
    const PlaneGraph g = testsupport::truncated_tetrahedron();
    const AuditReport rep = audit(g, {});
    CHECK(rep.negative_vertices.empty());
    CHECK(rep.negative_faces.size() == 4);
    CHECK(rep.negative_segments.size() == 12);
    CHECK(rep.text.find("NEGATIVE-SEGMENT") != std::string::npos);
    CHECK(rep.text.find("XFER") != std::string::npos);
    CHECK(rep.text.substr(rep.text.rfind("TOTAL")) == "TOTAL -12\n");
    const std::string table = charge_table(g, rep.result);
    CHECK(table.substr(table.rfind("TOTAL")) == "TOTAL -12\n");
}

TEST_CASE("rejects inputs outside the class") {
    const PlaneGraph two = PlaneGraph::build({{1}, {0}, {3}, {2}});
    CHECK_THROWS_AS(apply_rules(two, {}), GraphError);
    CHECK_THROWS_AS(initial_charges(two), GraphError);
    const PlaneGraph k4 = PlaneGraph::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
    CHECK_THROWS_AS(apply_rules(k4, {}), GraphError);
}
