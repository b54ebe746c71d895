#pragma once

#include "deltacalc/delta.hpp"

namespace dc {

enum class CheckMode { fractional, numerator };

struct CheckFailure {
    std::string check; // which identity inside the suite
    int trial;
    int j; // sub-index (Dickson column) when meaningful, else -1
    MultiPoly f;
    MultiPoly residue; // nonzero canonical representative in Q_m(n)
};

struct VerificationReport {
    std::string suite;
    long p;
    int r;
    int m;
    CheckMode mode;
    int trials;
    std::uint64_t seed;
    Convention convention;
    bool passed;
    int skipped; // fractional-mode trials/sub-checks skipped
    std::vector<CheckFailure> failures;

    std::string to_json() const;
};

/// Rank-3 identities in Q_m(3): annihilation Q_{s,0} delta_s(f) = 0 (only
/// for s >= m, where the underlying L_s^q f membership holds), the shift
/// identities Q_{2,1} delta_2(f) = delta_2(Q_{1,0}^q f) and
/// Q_{3,i} delta_3(f) = delta_3(Q_{2,i-1}^q f), and the iterated pair
/// Q_{3,2} delta_2^2(f) = delta_2^2(Q_{1,0}^{q^2} f),
/// Q_{3,1} delta_2^2(f) = 0. All checks run at numerator level in both
/// modes: division by L_s^{q-1} does not commute with reduction modulo
/// I_m, so only the numerator form is stable in the quotient.
VerificationReport check_rank3(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                               CheckMode mode, Convention convention = Convention::top_zero,
                               bool parallel = true);

/// Q_{4,j} delta_4(f) = delta_4(Q_{3,j-1}^q f) in Q_m(4), j = 1..3.
VerificationReport check_rank4_line6(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                                     CheckMode mode, Convention convention = Convention::top_zero,
                                     bool parallel = true);

/// Q_{4,3} delta_3^2(f) = delta_3^2(Q_{2,1}^{q^2} f) and
/// Q_{4,2} delta_3^2(f) = 0 in Q_m(4).
VerificationReport check_rank4_line7(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                                     CheckMode mode, Convention convention = Convention::top_zero,
                                     bool parallel = true);

/// Diagnostic only (never gates): Q_{4,j} delta_{4-s}(f) = 0 in Q_m(4)
/// for j = 0 and 1 <= j <= 3-s, at numerator level.
VerificationReport check_annihilators(const FieldPtr& field, int m, int s, int trials,
                                      std::uint64_t seed,
                                      Convention convention = Convention::top_zero);

} // namespace dc
