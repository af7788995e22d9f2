#pragma once

// Exhaustive and randomized checking of the gadget constructions. Cases are
// independent, so the drivers come in a serial reference form and an OpenMP form;
// both report the same counts and the same (lowest-index) counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <omp.h>

#include "setcolor/gadgets.hpp"

namespace setcolor {

enum class Exec { Serial, Parallel };

struct SweepResult {
    long long passed = 0;      ///< hypothesis held and the output was valid
    long long excluded = 0;    ///< hypothesis failed and the op refused as it should
    long long violations = 0;
    long long first_violation = -1;
    std::string counterexample;

    bool ok() const { return violations == 0; }
    long long total() const { return passed + excluded + violations; }

    void record_violation(long long index, std::string text) {
        ++violations;
        if (first_violation < 0 || index < first_violation) {
            first_violation = index;
            counterexample = std::move(text);
        }
    }

    void merge(const SweepResult& o) {
        passed += o.passed;
        excluded += o.excluded;
        if (o.violations > 0) {
            const long long before = violations;
            record_violation(o.first_violation, o.counterexample);
            violations = before + o.violations;
        }
    }
};

/// Runs fn(i, acc) for i in [0, n). fn must not throw.
template <typename Fn>
SweepResult run_sweep(long long n, Exec exec, Fn&& fn) {
    if (exec == Exec::Serial) {
        SweepResult acc;
        for (long long i = 0; i < n; ++i) fn(i, acc);
        return acc;
    }
    std::vector<SweepResult> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        SweepResult& acc = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < n; ++i) fn(i, acc);
    }
    SweepResult out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

enum class Lemma {
    P3,
    P4,
    P5,
    P6,
    PathV3Big5,
    PathV3Big6,
    PathV3Big7,
    Triangle,
    Lollipop,
    C6T2,
    C6T3,
    C6T4,
    Claw3,
    Claw4,
    Claw4Edge,
    Claw3PendantNone,
    Claw3PendantV1V2,
    Claw3PendantV2V3,
    Claw3PendantV1V3,
    PathPlusLeaf,
    PathPlusLeafEdge,
};

std::vector<Lemma> all_lemmas();
std::string_view lemma_name(Lemma l);
std::optional<Lemma> lemma_from_name(std::string_view name);
/// Gadgets with at most four vertices, swept over all Venn-cell patterns.
bool supports_exhaustive(Lemma l);

/// Hypothesis list sizes, in the op's vertex order.
std::vector<int> lemma_sizes(Lemma l);
Graph lemma_graph(Lemma l);

struct GadgetCase {
    ListAssignment lists;
    ColorSet pin_first;   ///< pin at the first vertex (P3-P6)
    ColorSet pin_last;    ///< pin at the last vertex (P3-P5)
    std::pair<int, int> s{0, 1};  ///< the two 8-list vertices (C6 only)
};

/// Runs the lemma's op on the case.
SetColoring run_lemma(Lemma l, const GadgetCase& c);

/// Independent evaluation of the hypothesis: list sizes, colorability of the required
/// sub-structure by exact search, and the pin rules.
bool hypothesis_holds(Lemma l, const GadgetCase& c);

enum class Outcome { Pass, Excluded, Violation };
struct CaseOutcome {
    Outcome outcome;
    std::string detail;
};

/// Checks one case: a valid, pin-honoring coloring when the hypothesis holds, a
/// HypothesisError when it does not. Never throws.
CaseOutcome check_case(Lemma l, const GadgetCase& c);

/// Text dump of a case in the list-assignment format.
std::string describe_case(Lemma l, const GadgetCase& c);

/// Every Venn-cell pattern at the hypothesis sizes, with every pin choice.
SweepResult exhaustive_sweep(Lemma l, Exec exec);

/// `count` seeded hypothesis-satisfying random instances; instance i depends only on (seed, i).
SweepResult random_sweep(Lemma l, long long count, std::uint64_t seed, Exec exec);

/// The random instance generator used by random_sweep.
GadgetCase random_case(Lemma l, std::uint64_t seed, long long index);

/// Hall test against exact search on every triangle Venn pattern with list sizes
/// at most max_size; SAT answers must also come with a valid coloring.
SweepResult triangle_hall_sweep(int max_size, Exec exec);

}  // namespace setcolor
