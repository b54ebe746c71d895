#include "deltacalc/hmatch.hpp"

#include "deltacalc/rng.hpp"

namespace dc {

MatchVerdict check_hmatch(const MultiPoly& f, const MultiPoly& G, int k,
                          const TruncationSpec& tspec) {
    if (k < 1 || k > 4) throw Error("check_hmatch: need 1 <= k <= 4");
    const std::uint64_t threshold = tspec.qm() - 1;
    auto coord = [](const Monomial& mo, int t) -> std::uint64_t {
        return t < mo.nvars() ? mo.exp(t) : 0;
    };
    for (const auto& [alpha, ca] : f.terms()) {
        for (const auto& [gamma, cg] : G.terms()) {
            bool matched = false;
            for (int t = 0; t < k; ++t) {
                std::uint64_t g = (k == 4 && t == 3) ? 0 : coord(gamma, t);
                if (coord(alpha, t) + g >= threshold) {
                    matched = true;
                    break;
                }
            }
            if (!matched) return MatchVerdict{false, MatchViolation{alpha, gamma}};
        }
    }
    return MatchVerdict{true, std::nullopt};
}

VanishResult verify_vanishing(const MultiPoly& f, const MultiPoly& G, int s,
                              const TruncationSpec& tspec) {
    if (s < 0 || s > 3) throw Error("verify_vanishing: need 0 <= s <= 3");
    const int k = 4 - s;
    const auto& field = f.field();
    MultiPoly v4q = v_poly(4, field).pow(field->q() - 1);
    MultiPoly lk = moore_det(k, field, 4);
    MultiPoly prod = truncated_mul(v4q, G.with_nvars(4), tspec);
    prod = truncated_mul(prod, f.with_nvars(4), tspec);
    prod = truncated_mul(prod, lk, tspec);
    return VanishResult{prod.is_zero(), std::move(prod)};
}

std::optional<CounterexampleWitness> search_counterexample(const TruncationSpec& tspec, int s,
                                                           std::vector<MultiPoly> candidate_G,
                                                           std::size_t budget,
                                                           std::uint64_t seed) {
    if (budget < 1) throw UsageError("search_counterexample: budget must be >= 1");
    const auto& field = tspec.field;
    const int k = 4 - s;
    if (candidate_G.empty()) {
        // G = 1 is the Dickson-algebra element realizing the documented
        // witness; Q_{3,1}, Q_{3,2} are the natural nontrivial candidates
        candidate_G.push_back(MultiPoly::constant(field, 4, field->one()));
        auto Q3 = dickson_q(3, field, Convention::top_zero).polys;
        candidate_G.push_back(Q3[1].with_nvars(4));
        candidate_G.push_back(Q3[2].with_nvars(4));
    }

    // graded-lex sweep of monomials with per-variable degree <= q^m - 1
    // in the first k variables
    const std::uint64_t lim = tspec.qm() - 1;
    std::vector<Monomial> monos;
    std::vector<std::uint32_t> e(4, 0);
    while (true) {
        monos.emplace_back(e);
        int i = 0;
        while (i < k && e[static_cast<size_t>(i)] == lim) e[static_cast<size_t>(i++)] = 0;
        if (i == k) break;
        ++e[static_cast<size_t>(i)];
    }
    std::sort(monos.begin(), monos.end(), GrlexLess{});

    std::vector<MultiPoly> cands;
    for (const auto& mo : monos)
        for (std::uint32_t c = 1; c < field->q(); ++c)
            cands.push_back(MultiPoly::monomial(field, mo, FieldElement{c}));
    for (std::size_t i = 0; i < monos.size() && cands.size() < budget; ++i) {
        for (std::size_t j = i + 1; j < monos.size(); ++j) {
            for (std::uint32_t c1 = 1; c1 < field->q(); ++c1) {
                for (std::uint32_t c2 = 1; c2 < field->q(); ++c2) {
                    MultiPoly f(field, 4);
                    f.add_term(monos[i], FieldElement{c1});
                    f.add_term(monos[j], FieldElement{c2});
                    cands.push_back(std::move(f));
                }
            }
        }
    }
    // top up with seeded random draws if the sweep was smaller than budget
    SplitMix64 rng(derive_seed(seed, 0xc0de));
    while (cands.size() < budget)
        cands.push_back(random_poly(field, 4, k, static_cast<std::uint32_t>(lim), 2, rng));
    if (cands.size() > budget) cands.resize(budget);

    for (std::size_t fi = 0; fi < cands.size(); ++fi) {
        for (std::size_t gi = 0; gi < candidate_G.size(); ++gi) {
            VanishResult v = verify_vanishing(cands[fi], candidate_G[gi], s, tspec);
            if (!v.vanishes) {
                return CounterexampleWitness{cands[fi], candidate_G[gi], fi, gi,
                                             v.residue.terms().begin()->first};
            }
        }
    }
    return std::nullopt;
}

} // namespace dc
