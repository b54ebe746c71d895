#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltacalc/hmatch.hpp"

using namespace dc;

TEST_CASE("matching hypothesis worked examples") {
    // q = 2, m = 1: every monomial of G has some exponent >= 1 = q^m - 1
    auto F2 = Field::make(2, 1);
    TruncationSpec t21{4, F2, 1};
    auto G1 = parse_poly("x1^2*x2^2+x2^2*x3^2+x1+x2+x3", F2, 3);
    SplitMix64 rng(0x11);
    for (int i = 0; i < 10; ++i) {
        auto f = random_poly(F2, 3, 3, 2, 3, rng);
        CHECK(check_hmatch(f, G1, 3, t21).holds);
    }

    // q = 3, m = 2: each monomial of G has an exponent >= 8 = q^m - 1
    auto F3 = Field::make(3, 1);
    TruncationSpec t32{4, F3, 2};
    auto G2 = parse_poly("x1^9*x2^9+x1^8+x2^8", F3, 2);
    for (int i = 0; i < 10; ++i) {
        auto f = random_poly(F3, 2, 2, 4, 3, rng);
        CHECK(check_hmatch(f, G2, 2, t32).holds);
    }

    // q = 3, m = 2: f = x1^2 + x2 against G = -x1*x2^3 fails on (x2, x1*x2^3)
    auto f3 = parse_poly("x1^2+x2", F3, 2);
    auto G3 = parse_poly("2*x1*x2^3", F3, 2);
    auto verdict = check_hmatch(f3, G3, 2, t32);
    REQUIRE_FALSE(verdict.holds);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->alpha.exps() == std::vector<std::uint32_t>{0, 1});
    CHECK(verdict.violation->gamma.exps() == std::vector<std::uint32_t>{1, 3});
}

TEST_CASE("check_hmatch is monotone under augmenting G") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 2};
    SplitMix64 rng(0x22);
    for (int i = 0; i < 200; ++i) {
        auto f = random_poly(F2, 3, 3, 3, 2, rng);
        auto G = random_poly(F2, 3, 3, 4, 2, rng);
        auto extra = random_poly(F2, 3, 3, 4, 1, rng);
        auto bigger = G + extra;
        if (bigger.term_count() <= G.term_count()) continue; // cancellation
        // the hypothesis quantifies over all pairs: a superset of monomials
        // holding implies the subset holds
        if (check_hmatch(f, bigger, 3, t).holds) CHECK(check_hmatch(f, G, 3, t).holds);
    }
}

TEST_CASE("vanishing soundness: matched pairs always vanish") {
    int verified = 0;
    SplitMix64 rng(0x50d);
    for (auto [p, m] : {std::pair<long, int>{2, 1}, {2, 2}}) {
        auto F = Field::make(p, 1);
        TruncationSpec t{4, F, m};
        std::uint32_t lim = static_cast<std::uint32_t>(t.qm());
        for (int s = 1; s <= 3; ++s) {
            int k = 4 - s;
            for (int cell = 0; cell < 34;) {
                auto f = random_poly(F, 4, k, lim - 1, 2, rng);
                auto G = random_poly(F, 4, k, lim, 2, rng);
                if (!check_hmatch(f, G, k, t).holds) continue;
                auto v = verify_vanishing(f, G, s, t);
                REQUIRE(v.vanishes); // a single violation here would be a real counterexample
                ++verified;
                ++cell;
            }
        }
    }
    CHECK(verified >= 200);
}

TEST_CASE("vanishing residue is canonical and zero for f = 0") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 2};
    auto v = verify_vanishing(MultiPoly::zero(F2, 4), parse_poly("x1", F2, 4), 1, t);
    CHECK(v.vanishes);
    CHECK(v.residue.is_zero());
}

TEST_CASE("counterexample search at (q, m, s) = (2, 2, 3)") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 2};
    auto w = search_counterexample(t, 3);
    REQUIRE(w.has_value());
    // the first sweep entry f = 1 with G = 1 already violates vanishing
    CHECK(w->f_index == 0);
    CHECK(w->g_index == 0);
    CHECK(w->f == MultiPoly::constant(F2, 4, F2->one()));
    // witnesses re-verify
    auto v = verify_vanishing(w->f, w->G, 3, t);
    CHECK_FALSE(v.vanishes);
    // reproducible
    auto w2 = search_counterexample(t, 3);
    REQUIRE(w2.has_value());
    CHECK(w2->f == w->f);
    CHECK(w2->g_index == w->g_index);
    CHECK_THROWS_AS(search_counterexample(t, 3, {}, 0), UsageError);
}

TEST_CASE("no counterexample where the matching hypothesis applies") {
    // at (2,1) any G, f with matching holds vanish; the sweep with the
    // default high-exponent-free candidates still finds the G = 1 failure
    // only when the truncation level leaves room (m = 2); at m = 1 the
    // sweep over a small budget finds nothing for s = 1
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 1};
    auto Q3 = dickson_q(3, F2, Convention::top_zero).polys;
    std::vector<MultiPoly> gs = {Q3[1].with_nvars(4), Q3[2].with_nvars(4)};
    auto w = search_counterexample(t, 1, gs, 50);
    CHECK_FALSE(w.has_value());
}
