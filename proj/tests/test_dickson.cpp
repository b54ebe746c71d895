#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltacalc/dickson.hpp"

using namespace dc;

TEST_CASE("moore determinant small cases") {
    auto F2 = Field::make(2, 1);
    CHECK(moore_det(1, F2) == parse_poly("x1", F2));
    CHECK(moore_det(2, F2) == parse_poly("x1*x2^2+x1^2*x2", F2));
    // alternating: swapping two variables negates (= equals, in char 2, after swap)
    auto F3 = Field::make(3, 1);
    auto L2 = moore_det(2, F3);
    std::vector<MultiPoly> swap = {MultiPoly::variable(F3, 2, 1), MultiPoly::variable(F3, 2, 0)};
    CHECK(L2.substitute(swap) == -L2);
}

TEST_CASE("v_poly small cases and the division identity") {
    auto F2 = Field::make(2, 1);
    CHECK(v_poly(1, F2) == parse_poly("x1", F2));
    CHECK(v_poly(2, F2) == parse_poly("x2^2+x1*x2", F2));
    for (auto spec : {std::pair<long, int>{2, 1}, {3, 1}}) {
        auto F = Field::make(spec.first, spec.second);
        for (int n = 2; n <= 4; ++n) {
            CHECK(v_poly(n, F) * moore_det(n - 1, F, n) == moore_det(n, F));
        }
    }
}

TEST_CASE("dickson recursion base and low ranks") {
    auto F2 = Field::make(2, 1);
    auto d1 = dickson_q(1, F2, Convention::top_zero);
    CHECK(d1.polys[0] == parse_poly("x1", F2));
    auto d2 = dickson_q(2, F2, Convention::top_one);
    CHECK(d2.polys[0] == parse_poly("x1^2*x2+x1*x2^2", F2));
    // Q_{n,0} = L_n^{q-1} under both conventions
    for (auto spec : {std::pair<long, int>{2, 1}, {3, 1}}) {
        auto F = Field::make(spec.first, spec.second);
        for (int n = 1; n <= 4; ++n) {
            auto Ln = moore_det(n, F);
            auto pw = Ln.pow(F->q() - 1);
            CHECK(dickson_q(n, F, Convention::top_zero).polys[0] == pw);
            CHECK(dickson_q(n, F, Convention::top_one).polys[0] == pw);
        }
    }
}

TEST_CASE("oracle agrees with the top_one recursion") {
    for (auto spec : {std::pair<long, int>{2, 1}, {3, 1}}) {
        auto F = Field::make(spec.first, spec.second);
        for (int n = 1; n <= 3; ++n) {
            auto set = dickson_q(n, F, Convention::top_one);
            for (int i = 0; i < n; ++i) {
                CHECK(dickson_oracle(n, i, F) == set.polys[static_cast<size_t>(i)]);
            }
        }
    }
}

TEST_CASE("top_zero: Q_{4,3} is the Frobenius of Q_{3,2}") {
    for (auto spec : {std::pair<long, int>{2, 1}, {3, 1}}) {
        auto F = Field::make(spec.first, spec.second);
        auto d4 = dickson_q(4, F, Convention::top_zero);
        auto d3 = dickson_q(3, F, Convention::top_zero);
        CHECK(d4.polys[3] == d3.polys[2].with_nvars(4).frob_power(1));
    }
}

TEST_CASE("top_one Dickson invariants are GL-invariant") {
    // spot check with the transvection x1 -> x1 + x2 and the n-cycle
    for (auto spec : {std::pair<long, int>{2, 1}, {3, 1}}) {
        auto F = Field::make(spec.first, spec.second);
        for (int n = 2; n <= 3; ++n) {
            auto set = dickson_q(n, F, Convention::top_one);
            std::vector<MultiPoly> transvection, cycle;
            for (int i = 0; i < n; ++i) {
                transvection.push_back(MultiPoly::variable(F, n, i));
                cycle.push_back(MultiPoly::variable(F, n, (i + 1) % n));
            }
            transvection[0] = transvection[0] + MultiPoly::variable(F, n, 1);
            for (const auto& Q : set.polys) {
                CHECK(Q.substitute(transvection) == Q);
                CHECK(Q.substitute(cycle) == Q);
            }
        }
    }
}

TEST_CASE("truncate and in_ideal") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t21{2, F2, 1};
    TruncationSpec t22{2, F2, 2};
    CHECK(truncate(parse_poly("x1^4*x2", F2, 2), t22).is_zero());
    CHECK(truncate(parse_poly("x1^2*x2+x1*x2", F2, 2), t21) == parse_poly("x1*x2", F2, 2));
    auto f = parse_poly("x1^3+x1*x2+x2^2", F2, 2);
    CHECK(truncate(truncate(f, t21), t21) == truncate(f, t21));
    CHECK(in_ideal(parse_poly("x1^2", F2, 2), t21));
    CHECK_FALSE(in_ideal(parse_poly("1", F2, 2), t21));
    CHECK_FALSE(in_ideal(parse_poly("x1*x2", F2, 2), t21));
    CHECK_FALSE(in_ideal(parse_poly("x1^3*x2^3", F2, 2), t22));
}

TEST_CASE("truncated products agree with truncating the full product") {
    auto F3 = Field::make(3, 1);
    TruncationSpec t{3, F3, 1};
    SplitMix64 rng(0x77);
    for (int k = 0; k < 100; ++k) {
        auto a = random_poly(F3, 3, 3, 4, 4, rng);
        auto b = random_poly(F3, 3, 3, 4, 4, rng);
        CHECK(truncated_mul(a, b, t) == truncate(a * b, t));
    }
}
