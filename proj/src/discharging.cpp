#include "setcolor/discharging.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace setcolor {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int mod(int a, int m) { return ((a % m) + m) % m; }

struct Ctx {
    const PlaneGraph& g;
    std::span<const VertexId> z;

    int face_len(int f) const { return g.face(f).length(); }
    bool tri(int f) const { return face_len(f) == 3; }
    bool big(int f) const { return face_len(f) >= 6; }
    bool kv(VertexId v, int k) const { return is_k_vertex(g.graph(), v, z, k); }
    bool kplus(VertexId v, int k) const { return is_k_plus_vertex(g.graph(), v, z, k); }
    VertexId rot(VertexId v, int j) const { return g.rotation(v)[idx(mod(j, g.degree(v)))]; }

    // Walk p -> a -> v: returns p.
    VertexId walk_pred(VertexId a, VertexId v) const { return rot(a, g.position(a, v) - 1); }
    // Walk v -> b -> s: returns s.
    VertexId walk_succ(VertexId v, VertexId b) const { return rot(b, g.position(b, v) + 1); }

    // Faces across the two boundary edges at corner (v, j): the a-side (rot[j]) and b-side (rot[j+1]).
    int across_a(VertexId v, int j) const { return g.corner_face(v, mod(j - 1, g.degree(v))); }
    int across_b(VertexId v, int j) const { return g.corner_face(v, mod(j + 1, g.degree(v))); }

    BaseType base(VertexId v, int j) const {
        const int f = g.corner_face(v, j);
        const int fa = across_a(v, j), fb = across_b(v, j);
        const int n = static_cast<int>(fa != f && tri(fa)) + static_cast<int>(fb != f && tri(fb));
        return n == 2 ? BaseType::II : n == 1 ? BaseType::I : BaseType::Zero;
    }

    // Some triangle x y w with y, w satisfying `ok`.
    template <typename Pred>
    bool in_triangle(VertexId x, Pred ok) const {
        const auto nb = g.rotation(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t k = i + 1; k < nb.size(); ++k)
                if (g.adjacent(nb[i], nb[k]) && ok(nb[i]) && ok(nb[k])) return true;
        return false;
    }

    bool i2_pattern(VertexId v, VertexId v2, VertexId x, int f2) const {
        const Face& face = g.face(f2);
        if (face.length() != 6) return false;
        std::vector<VertexId> w = face.walk;
        std::vector<VertexId> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        const auto at = [&](int k) { return w[idx(mod(k, 6))]; };
        const auto corner_at = [&](int k) { return face.corner[idx(mod(k, 6))]; };
        const int k = static_cast<int>(std::find(w.begin(), w.end(), v) - w.begin());
        int dir = 0;
        if (at(k + 1) == v2 && at(k - 1) == x) dir = 1;
        else if (at(k - 1) == v2 && at(k + 1) == x) dir = -1;
        else return false;
        const VertexId w1 = at(k + 2 * dir), w2 = at(k + 3 * dir), w3 = at(k + 4 * dir);
        return kv(w1, 3) && kv(w3, 3) && kv(w2, 4) && base(w2, corner_at(k + 3 * dir)) == BaseType::II;
    }

    IncidenceType classify(VertexId v, int j) const {
        IncidenceType t;
        t.base = base(v, j);
        const int d = g.degree(v);
        if (d < 2) return t;
        const int f = g.corner_face(v, j);
        const VertexId a = rot(v, j), b = rot(v, j + 1);

        if (t.base == BaseType::I) {
            const bool a_tri = across_a(v, j) != f && tri(across_a(v, j));
            // v1 on the triangle side, v2 on the other; rotation runs v1, v2, x1, x2, x3
            const int step = a_tri ? 1 : -1;
            const int p1 = a_tri ? j : j + 1;
            const VertexId v1 = a_tri ? a : b, v2 = a_tri ? b : a;
            const auto nb = [&](int k) { return rot(v, p1 + step * k); };
            if (kv(v, 4) && kplus(v1, 4) && kplus(v2, 5)) {
                const VertexId x = nb(2);
                const int f2 = a_tri ? across_b(v, j) : across_a(v, j);
                if (kv(x, 3)) t.subtypes |= kI1;
                if (kv(x, 4) && i2_pattern(v, v2, x, f2)) t.subtypes |= kI2;
            }
            if (kv(v, 5) && kv(v1, 3)) {
                const VertexId v0 = a_tri ? walk_pred(a, v) : walk_succ(v, b);
                const VertexId v3 = a_tri ? walk_succ(v, b) : walk_pred(a, v);
                const VertexId x1 = nb(2), x2 = nb(3), x3 = nb(4);
                if (kv(v2, 3) && kv(v3, 3)) t.subtypes |= kI3;
                if (kv(v0, 3) && kv(x1, 3) &&
                    in_triangle(x1, [&](VertexId y) { return kplus(y, 4) && y != x2 && y != x3; }))
                    t.subtypes |= kI4;
            }
        } else if (t.base == BaseType::Zero && kv(v, 5)) {
            if (kv(a, 3) && kv(b, 3)) t.subtypes |= k01;
            // v1 = a (walk predecessor), v3 after b; or mirrored
            if (kv(b, 3) && kv(walk_succ(v, b), 3)) t.orientations_02 |= 1U;
            if (kv(a, 3) && kv(walk_pred(a, v), 3)) t.orientations_02 |= 2U;
            if (t.orientations_02 != 0) t.subtypes |= k02;
            const VertexId x1 = rot(v, j + 2), x2 = rot(v, j + 3), x3 = rot(v, j + 4);
            const auto all_three = [&](VertexId x) {
                return kv(x, 3) && in_triangle(x, [&](VertexId y) { return kv(y, 3) && y != x2; });
            };
            if (all_three(x1) && all_three(x3)) t.subtypes |= k03;
        }
        return t;
    }
};

struct Sent {
    HalfInt amount;
    std::string rule;
};

Sent rule_amount(const Ctx& c, VertexId v, int j, const IncidenceType& t, const std::vector<IncidenceType>& at_v,
                 const std::vector<int>& faces_v) {
    const auto other_has = [&](unsigned flags) {
        for (std::size_t k = 0; k < at_v.size(); ++k)
            if (static_cast<int>(k) != j && c.big(faces_v[k]) && (at_v[k].subtypes & flags) != 0) return true;
        return false;
    };
    const auto half = [](long twice) { return HalfInt::from_twice(twice); };
    if (!is_internal(v, c.z) || c.g.degree(v) >= 6) {
        switch (t.base) {
        case BaseType::II: return {half(4), "R6(II)"};
        case BaseType::I: return {half(3), "R6(I)"};
        case BaseType::Zero: return {half(2), "R6(0)"};
        }
    }
    if (c.g.degree(v) == 5) {
        switch (t.base) {
        case BaseType::II: return {half(other_has(kI3) ? 2 : 4), "R5(II)"};
        case BaseType::I: return {half(t.has(kI3) || t.has(kI4) ? 3 : 2), "R5(I)"};
        case BaseType::Zero:
            if (t.has(k01) || t.has(k02)) return {half(2), "R5(0)"};
            return {half(t.has(k03) ? 0 : 1), "R5(0)"};
        }
    }
    if (c.g.degree(v) == 4) {
        switch (t.base) {
        case BaseType::II: return {half(2), "R4(II)"};
        case BaseType::I: return {half(t.has(kI1) || t.has(kI2) ? 1 : 2), "R4(I)"};
        case BaseType::Zero: {
            bool any_tri = false;
            for (int f : faces_v) any_tri = any_tri || c.tri(f);
            return {half(!any_tri || other_has(kI1 | kI2) ? 1 : 0), "R4(0)"};
        }
        }
    }
    return {HalfInt{}, ""};
}

std::string vname(int v) { return "v" + std::to_string(v); }
std::string fname(int f) { return "f" + std::to_string(f); }

void require_connected(const PlaneGraph& g) {
    if (g.vertex_count() == 0) throw GraphError("empty graph");
    if (!g.graph().connected()) throw GraphError("discharging needs a connected graph");
}

}  // namespace

std::string HalfInt::to_string() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

std::string IncidenceType::to_string() const {
    std::string s = base == BaseType::II ? "II" : base == BaseType::I ? "I" : "0";
    static const std::pair<Subtype, const char*> names[] = {{kI1, "I-1"}, {kI2, "I-2"}, {kI3, "I-3"}, {kI4, "I-4"},
                                                            {k01, "0-1"}, {k02, "0-2"}, {k03, "0-3"}};
    std::string flags;
    for (const auto& [flag, name] : names)
        if (has(flag)) flags += (flags.empty() ? "" : ",") + std::string(name);
    return flags.empty() ? s : s + "[" + flags + "]";
}

std::string Transfer::ledger_line() const {
    return "XFER " + (from_face ? fname(source) : vname(source)) + " " + fname(sink) + " " +
           std::to_string(amount.twice()) + " " + rule;
}

HalfInt ChargeState::total() const {
    HalfInt s;
    for (HalfInt h : vertex_charge) s += h;
    for (HalfInt h : face_charge) s += h;
    return s;
}

std::vector<R6Check> DischargeResult::r6_violations() const {
    std::vector<R6Check> out;
    for (const auto& r : r6_checks)
        if (!r.holds()) out.push_back(r);
    return out;
}

IncidenceType classify_corner(const PlaneGraph& g, std::span<const VertexId> z, VertexId v, int corner) {
    if (v < 0 || v >= g.vertex_count() || corner < 0 || corner >= g.degree(v))
        throw std::invalid_argument("classify_corner: no such corner");
    if (g.face(g.corner_face(v, corner)).length() < 6)
        throw std::invalid_argument("classify_corner: corner is not on a 6+-face");
    return Ctx{g, z}.classify(v, corner);
}

IncidenceType classify_incidence(const PlaneGraph& g, std::span<const VertexId> z, VertexId v, int face) {
    if (face < 0 || face >= static_cast<int>(g.faces().size()))
        throw std::invalid_argument("classify_incidence: no such face");
    if (g.face(face).length() < 6) throw std::invalid_argument("classify_incidence: face is not a 6+-face");
    const Face& f = g.face(face);
    for (std::size_t k = 0; k < f.walk.size(); ++k)
        if (f.walk[k] == v) return Ctx{g, z}.classify(v, f.corner[k]);
    throw std::invalid_argument("classify_incidence: vertex is not on the face");
}

ChargeState initial_charges(const PlaneGraph& g) {
    require_connected(g);
    ChargeState s;
    for (int v = 0; v < g.vertex_count(); ++v) s.vertex_charge.push_back(HalfInt::whole(2L * g.degree(v) - 6));
    for (const Face& f : g.faces()) s.face_charge.push_back(HalfInt::whole(f.length() - 6L));
    return s;
}

DischargeResult apply_rules(const PlaneGraph& g, std::span<const VertexId> z) {
    require_connected(g);
    if (!in_class(g.graph())) throw GraphError("graph contains a 4- or 5-cycle");
    for (VertexId v : z)
        if (v < 0 || v >= g.vertex_count()) throw GraphError("precolored vertex out of range");

    const Ctx c{g, z};
    const int n = g.vertex_count();
    DischargeResult r;
    r.initial = initial_charges(g);

    // Per-vertex classification and amounts are independent; merge afterwards in vertex order.
    std::vector<std::vector<Incidence>> per_vertex(idx(n));
#pragma omp parallel for schedule(dynamic, 8)
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        std::vector<IncidenceType> types(idx(d));
        std::vector<int> faces(idx(d));
        for (int j = 0; j < d; ++j) {
            faces[idx(j)] = g.corner_face(v, j);
            if (c.big(faces[idx(j)])) types[idx(j)] = c.classify(v, j);
        }
        for (int j = 0; j < d; ++j) {
            if (!c.big(faces[idx(j)])) continue;
            Incidence inc{v, j, faces[idx(j)], types[idx(j)], HalfInt{}};
            inc.sent = rule_amount(c, v, j, types[idx(j)], types, faces).amount;
            per_vertex[idx(v)].push_back(inc);
        }
    }

    std::map<std::tuple<bool, int, int, std::string>, HalfInt> ledger;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        std::vector<IncidenceType> types(idx(d));
        std::vector<int> faces(idx(d));
        for (int j = 0; j < d; ++j) faces[idx(j)] = g.corner_face(v, j);
        for (const auto& inc : per_vertex[idx(v)]) types[idx(inc.corner)] = inc.type;
        for (const auto& inc : per_vertex[idx(v)]) {
            r.incidences.push_back(inc);
            if (inc.sent.twice() == 0) continue;
            ledger[{false, v, inc.face, rule_amount(c, v, inc.corner, inc.type, types, faces).rule}] += inc.sent;
        }
        if (!is_internal(v, z) || d >= 6) {
            R6Check chk;
            chk.vertex = v;
            for (int j = 0; j < d; ++j) {
                if (c.tri(faces[idx(j)])) ++chk.t;
            }
            for (const auto& inc : per_vertex[idx(v)]) {
                if (inc.type.base == BaseType::II) ++chk.d_ii;
                else if (inc.type.base == BaseType::I) ++chk.d_i;
                else ++chk.d_0;
            }
            r.r6_checks.push_back(chk);
        }
    }

    // Rt: one unit per edge shared by a 6+-face and a 3-face
    for (const auto& [u, v] : g.graph().edges()) {
        const int f1 = g.dart_face(u, v), f2 = g.dart_face(v, u);
        if (f1 == f2) continue;
        if (c.big(f1) && c.tri(f2)) ledger[{true, f1, f2, "Rt"}] += HalfInt::whole(1);
        if (c.big(f2) && c.tri(f1)) ledger[{true, f2, f1, "Rt"}] += HalfInt::whole(1);
    }

    r.final_state = r.initial;
    for (const auto& [key, amount] : ledger) {
        const auto& [from_face, src, dst, rule] = key;
        Transfer t{from_face, src, dst, amount, rule};
        if (from_face) r.final_state.face_charge[idx(src)] -= amount;
        else r.final_state.vertex_charge[idx(src)] -= amount;
        r.final_state.face_charge[idx(dst)] += amount;
        r.final_state.transfers.push_back(std::move(t));
    }
    return r;
}

std::vector<Segment> segments_of(const PlaneGraph& g, const DischargeResult& result, int face) {
    const Face& f = g.face(face);
    const int len = f.length();
    if (len < 6) return {};
    std::map<std::pair<VertexId, int>, HalfInt> sent;
    for (const auto& inc : result.incidences)
        if (inc.face == face) sent[{inc.vertex, inc.corner}] = inc.sent;

    const auto at = [&](int k) { return f.walk[idx(mod(k, len))]; };
    std::vector<char> tri_edge(idx(len));
    int count = 0;
    for (int k = 0; k < len; ++k) {
        const int other = g.dart_face(at(k + 1), at(k));
        tri_edge[idx(k)] = other != face && g.face(other).length() == 3;
        count += tri_edge[idx(k)];
    }
    if (count == 0 || count == len) return {};

    int start = 0;
    while (!(tri_edge[idx(start)] && !tri_edge[idx(mod(start - 1, len))])) ++start;
    std::vector<Segment> out;
    for (int step = 0; step < len;) {
        const int k = start + step;
        if (!tri_edge[idx(mod(k, len))]) {
            ++step;
            continue;
        }
        Segment s;
        s.face = face;
        int t = 0;
        while (tri_edge[idx(mod(k + t, len))]) ++t;
        for (int i = 0; i <= t; ++i) {
            const int w = mod(k + i, len);
            s.path.push_back(f.walk[idx(w)]);
            s.charge += sent[{f.walk[idx(w)], f.corner[idx(w)]}];
        }
        s.charge -= HalfInt::whole(t);
        out.push_back(std::move(s));
        step += t;
    }
    return out;
}

std::string charge_table(const PlaneGraph& g, const DischargeResult& result) {
    std::ostringstream os;
    os << std::left << std::setw(8) << "item" << std::right << std::setw(6) << "size" << std::setw(10) << "initial"
       << std::setw(10) << "final" << '\n';
    const auto row = [&](const std::string& name, int size, HalfInt a, HalfInt b) {
        os << std::left << std::setw(8) << name << std::right << std::setw(6) << size << std::setw(10) << a.to_string()
           << std::setw(10) << b.to_string() << '\n';
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        row(vname(v), g.degree(v), result.initial.vertex_charge[idx(v)], result.final_state.vertex_charge[idx(v)]);
    for (const Face& f : g.faces())
        row(fname(f.id), f.length(), result.initial.face_charge[idx(f.id)], result.final_state.face_charge[idx(f.id)]);
    os << "TOTAL " << result.final_state.total().to_string() << '\n';
    return os.str();
}

AuditReport audit(const PlaneGraph& g, std::span<const VertexId> z) {
    AuditReport rep;
    rep.result = apply_rules(g, z);
    const auto& fin = rep.result.final_state;
    std::ostringstream os;

    const auto explain = [&](bool is_face, int id) {
        for (const auto& t : fin.transfers) {
            const bool src = t.from_face == is_face && t.source == id;
            const bool dst = is_face && t.sink == id;
            if (src || dst) os << "  " << t.ledger_line() << '\n';
        }
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!is_internal(v, z) || fin.vertex_charge[idx(v)] >= HalfInt{}) continue;
        rep.negative_vertices.push_back(v);
        os << "NEGATIVE " << vname(v) << ' ' << fin.vertex_charge[idx(v)].to_string() << '\n';
        explain(false, v);
    }
    for (const Face& f : g.faces()) {
        if (fin.face_charge[idx(f.id)] >= HalfInt{}) continue;
        rep.negative_faces.push_back(f.id);
        os << "NEGATIVE " << fname(f.id) << ' ' << fin.face_charge[idx(f.id)].to_string() << '\n';
        explain(true, f.id);
    }
    for (const Face& f : g.faces())
        for (auto& s : segments_of(g, rep.result, f.id)) {
            if (!s.negative()) continue;
            os << "NEGATIVE-SEGMENT " << fname(f.id);
            for (std::size_t i = 0; i < s.path.size(); ++i) os << (i ? '-' : ' ') << vname(s.path[i]);
            os << ' ' << s.charge.to_string() << '\n';
            rep.negative_segments.push_back(std::move(s));
        }
    for (const auto& r6 : rep.result.r6_violations())
        os << "R6-IDENTITY-FAILS " << vname(r6.vertex) << " t=" << r6.t << " dII=" << r6.d_ii << " dI=" << r6.d_i
           << " d0=" << r6.d_0 << '\n';
    for (VertexId v : z) {
        if (v < 0 || v >= g.vertex_count()) continue;
        os << "Z " << vname(v) << " final=" << fin.vertex_charge[idx(v)].to_string()
           << " deg-6=" << (g.degree(v) - 6) << '\n';
    }
    rep.text = charge_table(g, rep.result) + os.str();
    // keep the total as the closing line
    rep.text += "TOTAL " + fin.total().to_string() + '\n';
    return rep;
}

}  // namespace setcolor
