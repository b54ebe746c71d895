#pragma once

#include "deltacalc/mpoly.hpp"

namespace dc {

/// The monomial ideal I_m(n) = (x_1^{q^m}, ..., x_n^{q^m}) inside the
/// n-variable polynomial ring; Q_m(n) is the quotient.
struct TruncationSpec {
    int n;
    FieldPtr field;
    int m; // level >= 1

    std::uint64_t qm() const {
        std::uint64_t v = 1;
        for (int i = 0; i < m; ++i) v *= field->q();
        return v;
    }
};

enum class Convention { top_zero, top_one };

/// Q_{n,0}, ..., Q_{n,n-1}, all in n variables.
struct DicksonSet {
    int n;
    Convention convention;
    std::vector<MultiPoly> polys;
};

/// Moore determinant L_s on x_1..x_s, embedded in an nvars-variable ring
/// (nvars = s when left at 0). Row r carries (x_1^{q^r}, ..., x_s^{q^r}).
MultiPoly moore_det(int s, const FieldPtr& field, int nvars = 0);

/// V_n = prod over lambda in F_q^{n-1} of (x_n + lambda_1 x_1 + ... +
/// lambda_{n-1} x_{n-1}); satisfies V_n * L_{n-1} = L_n.
MultiPoly v_poly(int n, const FieldPtr& field, int nvars = 0);

/// Dickson invariants by the recursion
///   Q_{n,i} = V_n^{q-1} Q_{n-1,i} + Q_{n-1,i-1}^q,   Q_{n,-1} = 0,
/// with the out-of-range top term Q_{n-1,n-1} taken as 0 (top_zero) or the
/// classical 1 (top_one). Memoized per (q-spec, convention).
DicksonSet dickson_q(int n, const FieldPtr& field, Convention convention);

/// Independent oracle: the n x n Moore-type determinant with row exponents
/// {0,...,n} \ {i}, divided exactly by L_n, normalized so the x_n-leading
/// coefficient is +1. Classical definition, no recursion shared with
/// dickson_q.
MultiPoly dickson_oracle(int n, int i, const FieldPtr& field);

/// Canonical representative in Q_m(n): drop every monomial with an exponent
/// >= q^m. Idempotent, and compatible with products:
/// truncate(a*b) = truncate(truncate(a)*truncate(b)).
MultiPoly truncate(const MultiPoly& f, const TruncationSpec& tspec);

bool in_ideal(const MultiPoly& f, const TruncationSpec& tspec);

/// truncate(a*b) computed without forming the full product.
MultiPoly truncated_mul(const MultiPoly& a, const MultiPoly& b, const TruncationSpec& tspec);

} // namespace dc
