#pragma once

#include "deltacalc/dickson.hpp"

namespace dc {

/// An F_p-linear derivation of S(n), determined by the images of the
/// generators and extended by the Leibniz rule.
struct Derivation {
    int nvars;
    std::vector<MultiPoly> images;
};

MultiPoly apply_derivation(const Derivation& d, const MultiPoly& f);

/// The Milnor-type operator St^{Delta_i} as the derivation x_j -> x_j^{q^i}.
/// The generator action is a documented convention; divisibility_probe is
/// the instrument for falsifying it.
Derivation milnor_st(int i, int n, const FieldPtr& field);

/// num / Q_{n,0}^k in the localization of the Dickson algebra at Q_{n,0}.
struct LocalizedElement {
    MultiPoly num;
    int k = 0;
};

/// Equality by cross-multiplication: a.num * Q^{b.k} = b.num * Q^{a.k}.
bool localized_equal(const LocalizedElement& a, const LocalizedElement& b, int n,
                     const FieldPtr& field);

/// delta_i := (-1)^n Q_{n,0}^{-1} St^{Delta_i}, applied through the quotient
/// rule; the denominator exponent is lowered back by cancelling Q_{n,0}
/// factors out of the numerator whenever the division is exact.
LocalizedElement normalized_delta(int i, int n, const FieldPtr& field, const LocalizedElement& e);

/// Report-only diagnostic: is St^{Delta_i}(Q_{n,s}) divisible by Q_{n,0},
/// and does the p-fold iterate annihilate Q_{n,s}?
struct ProbeResult {
    bool divisible;
    MultiPoly residue; // the image itself when not divisible, else zero
    bool p_fold_annihilates;
};

ProbeResult divisibility_probe(int i, int n, int s, const FieldPtr& field);

} // namespace dc
