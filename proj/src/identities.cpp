#include "deltacalc/identities.hpp"

#include <json.hpp>

namespace dc {

namespace {

struct TrialOutcome {
    std::vector<CheckFailure> failures;
    int skipped = 0;

    void fail(std::string check, int trial, int j, const MultiPoly& f, MultiPoly residue) {
        failures.push_back(CheckFailure{std::move(check), trial, j, f, std::move(residue)});
    }
};

std::uint32_t script_max_deg(const FieldPtr& field, int m) {
    std::uint64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= field->q();
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(2, qm - 1));
}

// Run `trials` independent trials, each drawing from a seed derived from
// (seed, trial index), so the report is identical however they are scheduled.
template <typename TrialFn>
VerificationReport run_suite(std::string suite, const FieldPtr& field, int m, int trials,
                             std::uint64_t seed, CheckMode mode, Convention conv, bool parallel,
                             TrialFn&& trial_fn) {
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(trials));
#ifdef DC_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
            trial_fn(t, rng, outcomes[static_cast<size_t>(t)]);
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
            trial_fn(t, rng, outcomes[static_cast<size_t>(t)]);
        }
    }
    VerificationReport rep{std::move(suite), field->p(), field->r(), m,
                           mode,  trials,     seed,       conv,
                           true,  0,          {}};
    for (auto& o : outcomes) {
        rep.skipped += o.skipped;
        for (auto& f : o.failures) rep.failures.push_back(std::move(f));
    }
    rep.passed = rep.failures.empty();
    return rep;
}

} // namespace

VerificationReport check_rank3(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                               CheckMode mode, Convention conv, bool parallel) {
    const int n = 3;
    const std::uint32_t q = field->q();
    const TruncationSpec tsp{n, field, m};
    const std::uint32_t maxdeg = script_max_deg(field, m);

    auto Q1 = dickson_q(1, field, conv).polys;
    auto Q2 = dickson_q(2, field, conv).polys;
    auto Q3 = dickson_q(3, field, conv).polys;
    for (auto& f : Q1) f = f.with_nvars(n);
    for (auto& f : Q2) f = f.with_nvars(n);

    auto trial = [&](int t, SplitMix64& rng, TrialOutcome& out) {
        // annihilation Q_{s,0} delta_s(f) = 0 (membership needs s >= m)
        for (int s = 1; s <= 3; ++s) {
            MultiPoly f = random_poly(field, n, s, maxdeg, 2, rng);
            if (s < m) continue;
            const MultiPoly& Qs0 = (s == 1 ? Q1 : s == 2 ? Q2 : Q3)[0];
            // always at numerator level: Q_{s,0} * delta_s(f) * L_s^{q-1}
            // is the ideal-stable form of the annihilation statement
            MultiPoly num = determinant(delta_matrix(s, m, f));
            MultiPoly res = truncated_mul(Qs0, num, tsp);
            if (!res.is_zero()) out.fail("annihilation", t, s, f, std::move(res));
        }
        // Q_{2,1} delta_2(f) = delta_2(Q_{1,0}^q f)
        {
            MultiPoly f = random_poly(field, n, 2, maxdeg, 2, rng);
            MultiPoly fstar = Q1[0].frob_power(1) * f;
            // both modes check at numerator level: dividing by L_s^{q-1}
            // does not commute with reduction modulo I_m, so the value-level
            // comparison is not well-defined in the quotient (it genuinely
            // differs for some f at m >= 2)
            MultiPoly num = determinant(delta_matrix(2, m, f));
            MultiPoly nums = determinant(delta_matrix(2, m, fstar));
            MultiPoly res = truncated_mul(Q2[1], num, tsp) - truncate(nums, tsp);
            if (!res.is_zero()) out.fail("shift-2", t, 1, f, std::move(res));
        }
        // Q_{3,i} delta_3(f) = delta_3(Q_{2,i-1}^q f), i = 1, 2
        {
            MultiPoly f = random_poly(field, n, 3, maxdeg, 2, rng);
            for (int i = 1; i <= 2; ++i) {
                MultiPoly fstar = Q2[static_cast<size_t>(i - 1)].frob_power(1) * f;
                // numerator level in both modes, for the same reason as shift-2
                MultiPoly num = determinant(delta_matrix(3, m, f));
                MultiPoly nums = determinant(delta_matrix(3, m, fstar));
                MultiPoly res =
                    truncated_mul(Q3[static_cast<size_t>(i)], num, tsp) - truncate(nums, tsp);
                if (!res.is_zero()) out.fail("shift-3", t, i, f, std::move(res));
            }
        }
        // iterated, always at numerator level:
        // Q_{3,2} delta_2^2(f) = delta_2^2(Q_{1,0}^{q^2} f), Q_{3,1} delta_2^2(f) = 0
        {
            MultiPoly f = random_poly(field, n, 2, maxdeg, 2, rng);
            auto [num2, den2] = delta_iter2_numerator(2, m, f);
            (void)den2;
            auto [num2s, den2s] = delta_iter2_numerator(2, m, Q1[0].frob_power(2) * f);
            (void)den2s;
            MultiPoly res_a = truncated_mul(Q3[2], num2, tsp) - truncate(num2s, tsp);
            if (!res_a.is_zero()) out.fail("iterated-32", t, 2, f, std::move(res_a));
            MultiPoly res_b = truncated_mul(Q3[1], num2, tsp);
            if (!res_b.is_zero()) out.fail("iterated-31", t, 1, f, std::move(res_b));
        }
    };
    (void)q;
    return run_suite("rank3", field, m, trials, seed, mode, conv, parallel, trial);
}

VerificationReport check_rank4_line6(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                                     CheckMode mode, Convention conv, bool parallel) {
    const int n = 4;
    const TruncationSpec tsp{n, field, m};
    const std::uint32_t maxdeg = script_max_deg(field, m);

    auto Q4 = dickson_q(4, field, conv).polys;
    auto Q3 = dickson_q(3, field, conv).polys;
    for (auto& f : Q3) f = f.with_nvars(n);

    auto trial = [&](int t, SplitMix64& rng, TrialOutcome& out) {
        MultiPoly f = random_poly(field, n, 3, maxdeg, 2, rng);
        if (mode == CheckMode::fractional) {
            DeltaResult d4f = delta(4, m, f, tsp, true);
            if (d4f.mode != DeltaMode::exact) {
                ++out.skipped;
                return;
            }
            for (int j = 1; j <= 3; ++j) {
                MultiPoly fstar = Q3[static_cast<size_t>(j - 1)].frob_power(1) * f;
                DeltaResult rhs = delta(4, m, fstar, tsp, true);
                if (rhs.mode != DeltaMode::exact) {
                    ++out.skipped;
                    continue;
                }
                MultiPoly res = truncated_mul(Q4[static_cast<size_t>(j)], d4f.value, tsp) - rhs.value;
                if (!res.is_zero()) out.fail("line6", t, j, f, std::move(res));
            }
        } else {
            MultiPoly num = determinant(delta_matrix(4, m, f));
            MultiPoly num_t = truncate(num, tsp);
            for (int j = 1; j <= 3; ++j) {
                MultiPoly fstar = Q3[static_cast<size_t>(j - 1)].frob_power(1) * f;
                MultiPoly nums = determinant(delta_matrix(4, m, fstar));
                MultiPoly res =
                    truncated_mul(Q4[static_cast<size_t>(j)], num_t, tsp) - truncate(nums, tsp);
                if (!res.is_zero()) out.fail("line6", t, j, f, std::move(res));
            }
        }
    };
    return run_suite("rank4-6", field, m, trials, seed, mode, conv, parallel, trial);
}

VerificationReport check_rank4_line7(const FieldPtr& field, int m, int trials, std::uint64_t seed,
                                     CheckMode mode, Convention conv, bool parallel) {
    const int n = 4;
    const TruncationSpec tsp{n, field, m};
    const std::uint32_t maxdeg = script_max_deg(field, m);

    auto Q4 = dickson_q(4, field, conv).polys;
    auto Q2 = dickson_q(2, field, conv).polys;
    MultiPoly Q21 = Q2[1].with_nvars(n);

    auto trial = [&](int t, SplitMix64& rng, TrialOutcome& out) {
        MultiPoly f = random_poly(field, n, 3, maxdeg, 2, rng);
        MultiPoly fstar = Q21.frob_power(2) * f;
        if (mode == CheckMode::fractional) {
            DeltaResult d3f = delta(3, m, f, tsp, false);
            if (d3f.mode != DeltaMode::exact) {
                ++out.skipped;
                return;
            }
            DeltaResult d3d3f = delta(3, m, d3f.value, tsp, false);
            if (d3d3f.mode != DeltaMode::exact) {
                ++out.skipped;
                return;
            }
            // (7a)
            DeltaResult r1 = delta(3, m, fstar, tsp, false);
            if (r1.mode != DeltaMode::exact) {
                ++out.skipped;
            } else {
                DeltaResult r2 = delta(3, m, r1.value, tsp, false);
                if (r2.mode != DeltaMode::exact) {
                    ++out.skipped;
                } else {
                    MultiPoly res = truncated_mul(Q4[3], d3d3f.value, tsp) - truncate(r2.value, tsp);
                    if (!res.is_zero()) out.fail("line7a", t, 3, f, std::move(res));
                }
            }
            // (7b)
            MultiPoly res_b = truncated_mul(Q4[2], d3d3f.value, tsp);
            if (!res_b.is_zero()) out.fail("line7b", t, 2, f, std::move(res_b));
        } else {
            auto [num2, den2] = delta_iter2_numerator(3, m, f);
            (void)den2;
            auto [num2s, den2s] = delta_iter2_numerator(3, m, fstar);
            (void)den2s;
            MultiPoly num2_t = truncate(num2, tsp);
            MultiPoly res_a = truncated_mul(Q4[3], num2_t, tsp) - truncate(num2s, tsp);
            if (!res_a.is_zero()) out.fail("line7a", t, 3, f, std::move(res_a));
            MultiPoly res_b = truncated_mul(Q4[2], num2_t, tsp);
            if (!res_b.is_zero()) out.fail("line7b", t, 2, f, std::move(res_b));
        }
    };
    return run_suite("rank4-7", field, m, trials, seed, mode, conv, parallel, trial);
}

VerificationReport check_annihilators(const FieldPtr& field, int m, int s, int trials,
                                      std::uint64_t seed, Convention conv) {
    if (s < 0 || s > 3) throw Error("check_annihilators: need 0 <= s <= 3");
    const int n = 4;
    const TruncationSpec tsp{n, field, m};
    const std::uint32_t maxdeg = script_max_deg(field, m);
    auto Q4 = dickson_q(4, field, conv).polys;

    auto trial = [&](int t, SplitMix64& rng, TrialOutcome& out) {
        MultiPoly f = random_poly(field, n, 4 - s, maxdeg, 2, rng);
        MultiPoly num = truncate(determinant(delta_matrix(4 - s, m, f)), tsp);
        std::vector<int> js = {0};
        for (int j = 1; j <= 3 - s; ++j) js.push_back(j);
        for (int j : js) {
            MultiPoly res = truncated_mul(Q4[static_cast<size_t>(j)], num, tsp);
            if (!res.is_zero()) out.fail("annihilator", t, j, f, std::move(res));
        }
    };
    auto rep = run_suite("annihilators", field, m, trials, seed, CheckMode::numerator, conv,
                         /*parallel=*/true, trial);
    rep.suite = "annihilators-s" + std::to_string(s);
    return rep;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["p"] = p;
    j["r"] = r;
    j["m"] = m;
    j["mode"] = mode == CheckMode::fractional ? "fractional" : "numerator";
    j["trials"] = trials;
    j["seed"] = seed;
    j["convention"] = convention == Convention::top_zero ? "top_zero" : "top_one";
    j["passed"] = passed;
    j["skipped"] = skipped;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json jf;
        jf["check"] = f.check;
        jf["trial"] = f.trial;
        jf["j"] = f.j;
        jf["f"] = f.f.render();
        jf["residue"] = f.residue.render();
        j["failures"].push_back(std::move(jf));
    }
    return j.dump();
}

} // namespace dc
