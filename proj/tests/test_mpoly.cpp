#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltacalc/mpoly.hpp"

using namespace dc;

namespace {
MultiPoly P(const FieldPtr& F, const std::string& s, int n = 0) { return parse_poly(s, F, n); }
} // namespace

TEST_CASE("parse, render, arithmetic round trips") {
    auto F3 = Field::make(3, 1);
    auto f = P(F3, "x1^2+2*x1*x2+x2^2");
    auto g = P(F3, "x1+x2");
    CHECK(f == g * g);
    CHECK(parse_poly(f.render(), F3) == f);
    CHECK((f - f).is_zero());
    CHECK(P(F3, "0").is_zero());
    CHECK(P(F3, "2+1").is_zero());
    CHECK(P(F3, "x1+x1+x1").is_zero());
}

TEST_CASE("parse errors") {
    auto F2 = Field::make(2, 1);
    CHECK_THROWS_AS(parse_poly("", F2), ParseError);
    CHECK_THROWS_AS(parse_poly("x0", F2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1+", F2), ParseError);
    CHECK_THROWS_AS(parse_poly("y1", F2), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", F2, 2), VariableCountMismatch);
}

TEST_CASE("extension-field coefficients in parentheses") {
    auto F4 = Field::make(2, 2);
    auto f = P(F4, "(a+1)*x1^2+a*x2", 2);
    FieldElement a = F4->generator();
    MultiPoly expect = MultiPoly::variable(F4, 2, 0, 2).scaled(F4->add(a, F4->one())) +
                       MultiPoly::variable(F4, 2, 1).scaled(a);
    CHECK(f == expect);
    CHECK(parse_poly(f.render(), F4, 2) == f);
}

TEST_CASE("grlex order drives the term map") {
    auto F2 = Field::make(2, 1);
    auto f = P(F2, "x1+x2^2+x1*x2");
    // ascending grlex: x1 < x2^2 < x1*x2 (same degree compares lexicographically)
    std::vector<std::vector<std::uint32_t>> order;
    for (const auto& [m, c] : f.terms()) order.push_back(m.exps());
    CHECK(order == std::vector<std::vector<std::uint32_t>>{{1, 0}, {0, 2}, {1, 1}});
}

TEST_CASE("exact division round-trips products") {
    auto F5 = Field::make(5, 1);
    SplitMix64 rng(0xd1f);
    for (int t = 0; t < 500; ++t) {
        auto f = random_poly(F5, 3, 3, 4, 4, rng);
        auto g = random_poly(F5, 3, 3, 4, 4, rng);
        if (g.is_zero()) continue;
        CHECK(exact_div(f * g, g) == f);
    }
    CHECK_THROWS_AS(exact_div(P(F5, "x1+1", 2), P(F5, "x1*x2", 2)), NotDivisible);
    CHECK_THROWS_AS(exact_div(P(F5, "x1"), MultiPoly::zero(F5, 1)), DivisionByZero);
}

TEST_CASE("determinant matches the permutation-sum oracle on 3x3") {
    auto F3 = Field::make(3, 1);
    SplitMix64 rng(0xacc);
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int t = 0; t < 40; ++t) {
        PolyMatrix M;
        M.rows = M.cols = 3;
        for (int i = 0; i < 9; ++i) M.entries.push_back(random_poly(F3, 2, 2, 2, 2, rng));
        MultiPoly expect = MultiPoly::zero(F3, 2);
        for (int s = 0; s < 6; ++s) {
            MultiPoly prod = M.at(0, perm[s][0]) * M.at(1, perm[s][1]) * M.at(2, perm[s][2]);
            expect = s < 3 ? expect + prod : expect - prod;
        }
        CHECK(determinant(M) == expect);
    }
    PolyMatrix bad;
    bad.rows = 2;
    bad.cols = 3;
    bad.entries.assign(6, MultiPoly::zero(F3, 1));
    CHECK_THROWS_AS(determinant(bad), NotSquare);
}

TEST_CASE("frob_power agrees with repeated multiplication") {
    auto F4 = Field::make(2, 2);
    SplitMix64 rng(0xf20b);
    for (int t = 0; t < 30; ++t) {
        auto f = random_poly(F4, 2, 2, 3, 3, rng);
        CHECK(f.frob_power(1) == f.pow(4));
        CHECK(f.frob_power(2) == f.pow(16));
    }
    auto F3 = Field::make(3, 1);
    auto g = P(F3, "x1+x2");
    CHECK(g.frob_power(1) == P(F3, "x1^3+x2^3"));
}

TEST_CASE("substitute is a ring homomorphism") {
    auto F2 = Field::make(2, 1);
    SplitMix64 rng(0x5b5);
    std::vector<MultiPoly> images = {P(F2, "x1+x2", 2), P(F2, "x1*x2+1", 2)};
    for (int t = 0; t < 50; ++t) {
        auto f = random_poly(F2, 2, 2, 3, 3, rng);
        auto g = random_poly(F2, 2, 2, 3, 3, rng);
        CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
        CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    }
}

TEST_CASE("coefficient_in_var slices reassemble the input") {
    auto F3 = Field::make(3, 1);
    auto f = P(F3, "x1^2*x2+2*x2^3+x1+1", 2);
    MultiPoly back = MultiPoly::zero(F3, 2);
    for (std::uint64_t e = 0; e <= f.total_degree(); ++e) {
        back = back + MultiPoly::variable(F3, 2, 1, 1).pow(e) * f.coefficient_in_var(1, e);
    }
    CHECK(back == f);
    CHECK(f.coefficient_in_var(1, 3) == P(F3, "2", 2));
}

TEST_CASE("with_nvars pads and refuses to drop used variables") {
    auto F2 = Field::make(2, 1);
    auto f = P(F2, "x1*x2", 2);
    CHECK(f.with_nvars(4).nvars() == 4);
    CHECK(f.with_nvars(4).with_nvars(2) == f);
    CHECK_THROWS_AS(f.with_nvars(1), VariableCountMismatch);
}

TEST_CASE("exponent overflow is rejected") {
    auto F2 = Field::make(2, 1);
    auto f = MultiPoly::variable(F2, 1, 0, 1u << 19);
    CHECK_THROWS_AS(f * (f * f), ExponentOverflow);
    CHECK_THROWS_AS(parse_poly("x1^2097152", F2), ExponentOverflow);
}

TEST_CASE("json round trip") {
    auto F9 = Field::make(3, 2);
    auto f = parse_poly("(a+2)*x1^3*x2+a*x3+1", F9, 3);
    CHECK(poly_from_json(f.to_json(), F9) == f);
}

TEST_CASE("random_poly is deterministic in the seed") {
    auto F3 = Field::make(3, 1);
    SplitMix64 a(123), b(123), c(124);
    auto fa = random_poly(F3, 3, 3, 2, 2, a);
    auto fb = random_poly(F3, 3, 3, 2, 2, b);
    auto fc = random_poly(F3, 3, 3, 2, 2, c);
    CHECK(fa == fb);
    CHECK(fa.render() == fb.render());
    (void)fc;
}
