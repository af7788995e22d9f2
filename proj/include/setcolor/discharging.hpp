#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "setcolor/plane_graph.hpp"

namespace setcolor {

/// Exact multiple of 1/2, stored doubled.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(long twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt whole(long n) { return from_twice(2 * n); }

    constexpr long twice() const { return twice_; }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "3", "-1/2", "3/2".
    std::string to_string() const;

private:
    long twice_ = 0;
};

enum class BaseType { II, I, Zero };

enum Subtype : unsigned {
    kI1 = 1U << 0,
    kI2 = 1U << 1,
    kI3 = 1U << 2,
    kI4 = 1U << 3,
    k01 = 1U << 4,
    k02 = 1U << 5,
    k03 = 1U << 6,
};

struct IncidenceType {
    BaseType base = BaseType::Zero;
    unsigned subtypes = 0;        ///< Subtype flags
    /// For 0-2: bit 0 set when it matches with v1 taken as the walk predecessor of v,
    /// bit 1 when it matches with v1 taken as the successor.
    unsigned orientations_02 = 0;

    bool has(Subtype s) const { return (subtypes & s) != 0; }
    /// "II", "I[I-1]", "0[0-1,0-2]".
    std::string to_string() const;
};

/// Type of the incidence of v with the face at its corner j (a 6+-face).
IncidenceType classify_corner(const PlaneGraph& g, std::span<const VertexId> z, VertexId v, int corner);

/// Type of the incidence of v with face f. Throws std::invalid_argument when f is not
/// a 6+-face or v is not on f; when v meets f at several corners the first is used.
IncidenceType classify_incidence(const PlaneGraph& g, std::span<const VertexId> z, VertexId v, int face);

struct Transfer {
    bool from_face = false;   ///< source is a face (rule Rt) rather than a vertex
    int source = 0;
    int sink = 0;             ///< always a face
    HalfInt amount;
    std::string rule;         ///< "Rt", "R4(II)", ..., "R6(0)"

    /// "XFER v3 f7 2 R4(II)" with the amount doubled.
    std::string ledger_line() const;
};

struct ChargeState {
    std::vector<HalfInt> vertex_charge;
    std::vector<HalfInt> face_charge;
    std::vector<Transfer> transfers;
    HalfInt total() const;
};

/// A vertex-face incidence at a corner of a 6+-face, with its type and the amount
/// the vertex sends through it.
struct Incidence {
    VertexId vertex = 0;
    int corner = 0;
    int face = 0;
    IncidenceType type;
    HalfInt sent;
};

/// Bookkeeping at a 6+-vertex: t incident 3-face corners against its typed
/// incidences; the identity 2 d_II + d_I = 2t is expected.
struct R6Check {
    VertexId vertex = 0;
    int t = 0;
    int d_ii = 0;
    int d_i = 0;
    int d_0 = 0;
    bool holds() const { return 2 * d_ii + d_i == 2 * t; }
};

struct DischargeResult {
    ChargeState initial;
    ChargeState final_state;
    std::vector<Incidence> incidences;
    std::vector<R6Check> r6_checks;

    std::vector<R6Check> r6_violations() const;
};

/// ch0(v) = 2 deg(v) - 6, ch0(f) = |f| - 6. Throws GraphError on disconnected input.
ChargeState initial_charges(const PlaneGraph& g);

/// Applies Rt, R4, R5 and R6 in one simultaneous pass. Throws GraphError when the
/// graph is disconnected or contains a 4- or 5-cycle.
DischargeResult apply_rules(const PlaneGraph& g, std::span<const VertexId> z);

struct Segment {
    int face = 0;
    std::vector<VertexId> path;  ///< u0 .. ut along the facial walk
    HalfInt charge;
    bool negative() const { return charge < HalfInt{}; }
    int edges() const { return static_cast<int>(path.size()) - 1; }
};

/// Maximal runs of boundary edges of the 6+-face f that are shared with 3-faces,
/// with ch(S) = -t + sum of what u0..ut send to f. Empty when no edge of f borders a
/// 3-face or when every edge does.
std::vector<Segment> segments_of(const PlaneGraph& g, const DischargeResult& result, int face);

struct AuditReport {
    DischargeResult result;
    std::vector<VertexId> negative_vertices;  ///< internal vertices only
    std::vector<int> negative_faces;
    std::vector<Segment> negative_segments;
    /// Human-readable report: charge table, negatives with the ledger lines that
    /// explain them, R6 bookkeeping, and the closing "TOTAL -12" line.
    std::string text;
};

AuditReport audit(const PlaneGraph& g, std::span<const VertexId> z);

/// Aligned table of initial and final charges per vertex and face, ending in
/// "TOTAL <sum>".
std::string charge_table(const PlaneGraph& g, const DischargeResult& result);

}  // namespace setcolor
