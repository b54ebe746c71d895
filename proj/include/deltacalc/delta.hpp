#pragma once

#include "deltacalc/dickson.hpp"

namespace dc {

enum class DeltaMode { exact, fractional };

/// delta_s(f) = det M_s(f) / V_s^{q-1}. In exact mode `value` is the
/// quotient (truncated into Q_m(n) when reduce was requested) and
/// value * denominator = numerator; in fractional mode only the pair
/// (numerator, denominator) is meaningful.
struct DeltaResult {
    DeltaMode mode;
    MultiPoly value;
    MultiPoly numerator;
    MultiPoly denominator;
};

/// The (s+1)x(s+1) matrix M_s(f): Moore block x_j^{q^r} (r = 0..s-1) in the
/// first s rows and columns, last column (x_1^{q^m},...,x_s^{q^m}, f)^T,
/// last row (L_s^{q-1}, 0, ..., 0, f). The ambient variable count is
/// max(s, f.nvars()).
PolyMatrix delta_matrix(int s, int m, const MultiPoly& f);

DeltaResult delta(int s, int m, const MultiPoly& f, const TruncationSpec& tspec,
                  bool reduce = false);

/// Numerator-level double iterate: (det M_s(det M_s(f)), (L_s^{q-1})^2),
/// with no reduction between the two steps.
std::pair<MultiPoly, MultiPoly> delta_iter2_numerator(int s, int m, const MultiPoly& f);

/// Expansion of delta_4(h) along x_4: H_r is the slice at x_4^{q^r - 1} for
/// r = 0..m, everything reduced into Q_m(4); the remainder collects all
/// other x_4-slices. Requires delta_4(h) to be exact.
struct EdgeExpansion {
    std::vector<MultiPoly> coeffs; // H_0 .. H_m, x_4-free
    MultiPoly remainder;
};

EdgeExpansion edge_expansion(int m, const MultiPoly& h, const TruncationSpec& tspec);

} // namespace dc
