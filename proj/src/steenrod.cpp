#include "deltacalc/steenrod.hpp"

namespace dc {

MultiPoly apply_derivation(const Derivation& d, const MultiPoly& f) {
    if (d.nvars != f.nvars())
        throw VariableCountMismatch("derivation and polynomial disagree on variable count");
    const auto& field = f.field();
    MultiPoly out(field, f.nvars());
    for (const auto& [mono, c] : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) {
            std::uint32_t e = mono.exp(i);
            if (e == 0) continue;
            FieldElement scalar = field->mul(c, field->from_int(static_cast<long>(e % field->p())));
            if (scalar == field->zero()) continue;
            std::vector<std::uint32_t> exps = mono.exps();
            exps[static_cast<size_t>(i)] = e - 1;
            out = out + d.images[static_cast<size_t>(i)] *
                            MultiPoly::monomial(field, Monomial(std::move(exps)), scalar);
        }
    }
    return out;
}

Derivation milnor_st(int i, int n, const FieldPtr& field) {
    if (i < 0) throw Error("milnor_st: i >= 0");
    Derivation d{n, {}};
    for (int j = 0; j < n; ++j)
        d.images.push_back(MultiPoly::variable(field, n, j).frob_power(i));
    return d;
}

namespace {

MultiPoly q_n0(int n, const FieldPtr& field) {
    return dickson_q(n, field, Convention::top_one).polys[0];
}

MultiPoly q_pow(const MultiPoly& Q, int k) {
    return Q.pow(static_cast<std::uint64_t>(k));
}

} // namespace

bool localized_equal(const LocalizedElement& a, const LocalizedElement& b, int n,
                     const FieldPtr& field) {
    MultiPoly Q = q_n0(n, field);
    return a.num * q_pow(Q, b.k) == b.num * q_pow(Q, a.k);
}

LocalizedElement normalized_delta(int i, int n, const FieldPtr& field,
                                  const LocalizedElement& e) {
    if (e.num.is_zero()) return LocalizedElement{MultiPoly::zero(field, n), 0};
    MultiPoly Q = q_n0(n, field);
    Derivation st = milnor_st(i, n, field);
    // quotient rule on num/Q^k followed by the (-1)^n Q^{-1} factor:
    //   num' = (-1)^n (St(num) Q - (k mod p) num St(Q)),  k' = k + 2
    FieldElement kmod = field->from_int(e.k % field->p());
    MultiPoly numerator = apply_derivation(st, e.num) * Q -
                          e.num.scaled(kmod) * apply_derivation(st, Q);
    if (n % 2 == 1) numerator = -numerator;
    int k = e.k + 2;
    MultiPoly reduced;
    while (k > 0 && try_exact_div(numerator, Q, reduced)) {
        numerator = reduced;
        --k;
    }
    return LocalizedElement{std::move(numerator), k};
}

ProbeResult divisibility_probe(int i, int n, int s, const FieldPtr& field) {
    if (s < 0 || s >= n) throw Error("divisibility_probe: need 0 <= s <= n-1");
    MultiPoly Qns = dickson_q(n, field, Convention::top_one).polys[static_cast<size_t>(s)];
    MultiPoly Q = q_n0(n, field);
    Derivation st = milnor_st(i, n, field);
    MultiPoly image = apply_derivation(st, Qns);
    MultiPoly quot;
    bool divisible = image.is_zero() || try_exact_div(image, Q, quot);
    MultiPoly iterate = Qns;
    for (long it = 0; it < field->p(); ++it) iterate = apply_derivation(st, iterate);
    return ProbeResult{divisible, divisible ? MultiPoly::zero(field, n) : image,
                       iterate.is_zero()};
}

} // namespace dc
