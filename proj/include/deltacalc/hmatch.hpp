#pragma once

#include <optional>

#include "deltacalc/dickson.hpp"

namespace dc {

/// Matching hypothesis verdict. On failure, (alpha, gamma) is an exponent
/// pair with alpha_t + gamma_t < q^m - 1 for every t <= k.
struct MatchViolation {
    Monomial alpha; // from f
    Monomial gamma; // from G
};

struct MatchVerdict {
    bool holds;
    std::optional<MatchViolation> violation;
};

/// Exhaustive check of the matching hypothesis over all monomial pairs of
/// (f, G): some coordinate t in 1..k must satisfy alpha_t + gamma_t >=
/// q^m - 1. Coordinates beyond a polynomial's variables count as 0, and
/// gamma_4 := 0 when k = 4.
MatchVerdict check_hmatch(const MultiPoly& f, const MultiPoly& G, int k,
                          const TruncationSpec& tspec);

struct VanishResult {
    bool vanishes;
    MultiPoly residue; // truncated representative, zero iff vanishes
};

/// Whether V_4^{q-1} * G * f * L_k lies in I_m(4), with k = 4 - s.
VanishResult verify_vanishing(const MultiPoly& f, const MultiPoly& G, int s,
                              const TruncationSpec& tspec);

struct CounterexampleWitness {
    MultiPoly f;
    MultiPoly G;
    std::size_t f_index; // position in the deterministic f sweep
    std::size_t g_index; // position in candidate_G
    Monomial residue_monomial;
};

/// Sweep f over all polynomials with <= 2 terms and per-variable degree
/// <= q^m - 1 in the first 4 - s variables (graded-lex enumeration, then
/// seeded random sampling up to `budget` candidates) against each G in
/// candidate_G, returning the first pair whose product fails to vanish.
/// candidate_G defaults to {1, Q_{3,1}, Q_{3,2}} (top_zero).
std::optional<CounterexampleWitness> search_counterexample(
    const TruncationSpec& tspec, int s, std::vector<MultiPoly> candidate_G = {},
    std::size_t budget = 500, std::uint64_t seed = 0);

} // namespace dc
