#pragma once

#include <map>

#include "deltacalc/dickson.hpp"

namespace dc {

/// GL_n(F_q) presented by generator matrices (row i gives the image of x_i
/// as a linear form in x_1..x_n).
struct GroupSpec {
    int n;
    FieldPtr field;
    std::vector<std::vector<FieldElement>> generators; // each n*n, row-major
};

/// Standard generating set: transvection x1 -> x1 + x2 (n >= 2), the cyclic
/// variable permutation, and scaling of x1 by a multiplicative generator
/// (q > 2). For n = 1, q = 2 the group is trivial.
GroupSpec gl_generators(int n, const FieldPtr& field);

/// Order of the generated group by breadth-first closure. Only sensible for
/// small cases; guarded by `limit`.
std::size_t closure_order(const GroupSpec& group, std::size_t limit = 2000000);

struct FixedSpace {
    int dim;
    std::vector<MultiPoly> basis; // truncated representatives, each fixed
};

/// Common fixed space of the generators acting on the monomial basis of
/// Q_m(n) (all exponents < q^m). Gaussian elimination over F_q, with a
/// packed fast path for q = 2. Guarded by q^{mn} <= 4096.
FixedSpace fixed_space_dim(const GroupSpec& group, const TruncationSpec& tspec,
                           bool parallel = true);

/// Finitely supported series with integer coefficients.
struct HilbertSeries {
    std::map<std::uint64_t, long long> coefficients;

    long long at(long long t) const; // evaluation, exact integer arithmetic
    long long at_one() const;
    std::string render() const; // e.g. "1 + 2*t^3"
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// (q,t)-binomial coefficient: prod_{i=0}^{k-1}
/// (1 - t^{q^m - q^i}) / (1 - t^{q^k - q^i}), by exact univariate division.
/// Throws NonPolynomialResult if the quotient is not a polynomial with
/// non-negative coefficients.
HilbertSeries qt_binomial(int m, int k, const FieldPtr& field);

/// C_{n,m}(t) = sum_{k=0}^{min(n,m)} t^{(n-k)(q^m - q^k)} binom(m,k)_{q,t}.
HilbertSeries lrs_series(int n, int m, const FieldPtr& field);

/// Graded dimension of the span of the given polynomials inside Q_m(n):
/// per-degree rank of the coefficient matrix.
HilbertSeries span_hilbert(const std::vector<MultiPoly>& polys, const TruncationSpec& tspec);

struct FamilyEntry {
    int s; // 0..3; polys live in x_1..x_s
    std::vector<MultiPoly> polys;
};

struct FamilySpec {
    std::vector<FamilyEntry> entries;
};

FamilySpec family_from_json(const std::string& json_text, const FieldPtr& field);

/// B_m(4) assembly: delta_{4-s}(f) reduced into Q_m(4) for every f in every
/// entry, order-preserving. Throws FractionalDelta if any application fails
/// to be exact, BadVariableSupport if a poly uses variables beyond its s.
std::vector<MultiPoly> basis_candidate(const FamilySpec& family, const TruncationSpec& tspec);

} // namespace dc
