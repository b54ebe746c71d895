#include "deltacalc/delta.hpp"

namespace dc {

PolyMatrix delta_matrix(int s, int m, const MultiPoly& f) {
    if (s < 1 || s > 4) throw BadVariableSupport("delta_matrix: s must be in 1..4");
    const auto& field = f.field();
    const int nvars = std::max(s, f.nvars());
    const MultiPoly fe = f.with_nvars(nvars);
    PolyMatrix M;
    M.rows = M.cols = s + 1;
    M.entries.assign(static_cast<size_t>(s + 1) * (s + 1), MultiPoly::zero(field, nvars));
    for (int r = 0; r < s; ++r) {
        for (int j = 0; j < s; ++j)
            M.at(r, j) = MultiPoly::variable(field, nvars, j).frob_power(r);
        M.at(r, s) = MultiPoly::variable(field, nvars, r).frob_power(m);
    }
    // the script's Vs_qm1: L_s^{q-1}, which also serves as the denominator
    M.at(s, 0) = moore_det(s, field, nvars).pow(field->q() - 1);
    M.at(s, s) = fe;
    return M;
}

DeltaResult delta(int s, int m, const MultiPoly& f, const TruncationSpec& tspec, bool reduce) {
    const auto& field = f.field();
    PolyMatrix M = delta_matrix(s, m, f);
    MultiPoly num = determinant(M);
    MultiPoly den = moore_det(s, field, std::max(s, f.nvars())).pow(field->q() - 1);
    MultiPoly value;
    if (try_exact_div(num, den, value)) {
        if (reduce) value = truncate(value, tspec);
        return DeltaResult{DeltaMode::exact, std::move(value), std::move(num), std::move(den)};
    }
    return DeltaResult{DeltaMode::fractional, MultiPoly::zero(field, f.nvars()),
                       std::move(num), std::move(den)};
}

std::pair<MultiPoly, MultiPoly> delta_iter2_numerator(int s, int m, const MultiPoly& f) {
    if (s != 2 && s != 3) throw Error("delta_iter2_numerator: s must be 2 or 3");
    const auto& field = f.field();
    MultiPoly inner = determinant(delta_matrix(s, m, f));
    MultiPoly num = determinant(delta_matrix(s, m, inner));
    MultiPoly Ls = moore_det(s, field, std::max({s, f.nvars(), inner.nvars()}));
    MultiPoly den = Ls.pow(field->q() - 1);
    den = den * den;
    return {std::move(num), std::move(den)};
}

EdgeExpansion edge_expansion(int m, const MultiPoly& h, const TruncationSpec& tspec) {
    const auto& field = h.field();
    DeltaResult d = delta(4, m, h.with_nvars(4), tspec, /*reduce=*/false);
    if (d.mode != DeltaMode::exact)
        throw FractionalDelta("edge_expansion: delta_4 did not divide exactly");
    MultiPoly value = truncate(d.value, tspec);
    EdgeExpansion out{{}, MultiPoly::zero(field, 4)};
    MultiPoly assembled = MultiPoly::zero(field, 4);
    std::uint64_t qr = 1;
    for (int r = 0; r <= m; ++r) {
        MultiPoly Hr = value.coefficient_in_var(3, qr - 1);
        assembled = assembled + MultiPoly::variable(field, 4, 3).pow(qr - 1) * Hr;
        out.coeffs.push_back(std::move(Hr));
        qr *= field->q();
    }
    out.remainder = value - assembled;
    return out;
}

} // namespace dc
