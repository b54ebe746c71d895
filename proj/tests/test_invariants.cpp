#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltacalc/delta.hpp"
#include "deltacalc/invariants.hpp"

using namespace dc;

TEST_CASE("generator closure matches the group order formula") {
    auto order = [](int n, std::uint64_t q) {
        std::size_t o = 1;
        std::uint64_t qn = 1;
        for (int i = 0; i < n; ++i) qn *= q;
        std::uint64_t qi = 1;
        for (int i = 0; i < n; ++i) {
            o *= static_cast<std::size_t>(qn - qi);
            qi *= q;
        }
        return o;
    };
    auto F2 = Field::make(2, 1);
    auto F3 = Field::make(3, 1);
    CHECK(closure_order(gl_generators(2, F2)) == order(2, 2)); // 6
    CHECK(closure_order(gl_generators(3, F2)) == order(3, 2)); // 168
    CHECK(closure_order(gl_generators(2, F3)) == order(2, 3)); // 48
    CHECK(closure_order(gl_generators(1, F2)) == 1);
    CHECK(closure_order(gl_generators(1, F3)) == 2);
}

TEST_CASE("fixed space dimensions at the proven ranks") {
    auto F2 = Field::make(2, 1);
    auto F3 = Field::make(3, 1);
    auto dim = [](const FieldPtr& F, int n, int m) {
        return fixed_space_dim(gl_generators(n, F), TruncationSpec{n, F, m}).dim;
    };
    CHECK(dim(F2, 1, 1) == 2);
    CHECK(dim(F2, 1, 2) == 4); // GL_1(F_2) trivial: whole space fixed
    CHECK(dim(F2, 2, 1) == 2);
    CHECK(dim(F2, 2, 2) == 5);
    CHECK(dim(F2, 3, 1) == 2);
    CHECK(dim(F3, 2, 1) == 2);
    CHECK(dim(F2, 4, 1) == 2);
    CHECK(dim(F3, 1, 1) == 2); // x^a fixed iff (q-1) | a
}

TEST_CASE("fixed basis at (2, 2, 1) and genuineness of fixed elements") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{2, F2, 1};
    auto group = gl_generators(2, F2);
    auto fs = fixed_space_dim(group, t);
    REQUIRE(fs.dim == 2);
    // the fixed space is spanned by {1, x1*x2}
    auto span = span_hilbert(fs.basis, t);
    CHECK(span.coefficients == std::map<std::uint64_t, long long>{{0, 1}, {2, 1}});
    for (const auto& b : fs.basis) {
        for (const auto& g : group.generators) {
            std::vector<MultiPoly> images;
            for (int i = 0; i < 2; ++i) {
                MultiPoly li(F2, 2);
                for (int j = 0; j < 2; ++j)
                    li.add_term(Monomial::var(2, j), g[static_cast<size_t>(i) * 2 + j]);
                images.push_back(std::move(li));
            }
            CHECK(truncate(b.substitute(images), t) == b);
        }
    }
}

TEST_CASE("serial and parallel fixed-space computations agree") {
    auto F2 = Field::make(2, 1);
    for (auto [n, m] : {std::pair<int, int>{2, 2}, {3, 1}, {4, 1}}) {
        TruncationSpec t{n, F2, m};
        auto group = gl_generators(n, F2);
        auto a = fixed_space_dim(group, t, true);
        auto b = fixed_space_dim(group, t, false);
        CHECK(a.dim == b.dim);
        REQUIRE(a.basis.size() == b.basis.size());
        for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
    }
}

TEST_CASE("resource guard") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 4}; // 2^16 > 4096
    CHECK_THROWS_AS(fixed_space_dim(gl_generators(4, F2), t), ResourceLimit);
}

TEST_CASE("qt binomial edge cases and values") {
    auto F2 = Field::make(2, 1);
    HilbertSeries one;
    one.coefficients[0] = 1;
    CHECK(qt_binomial(1, 0, F2) == one);
    CHECK(qt_binomial(1, 1, F2) == one);
    CHECK(qt_binomial(3, 3, F2) == one);
    // binom(2,1) over F_2: (1-t^3)/(1-t) = 1 + t + t^2
    auto b = qt_binomial(2, 1, F2);
    CHECK(b.coefficients == std::map<std::uint64_t, long long>{{0, 1}, {1, 1}, {2, 1}});
    CHECK_THROWS_AS(qt_binomial(2, 3, F2), Error);
}

TEST_CASE("LRS series values and oracle agreement") {
    auto F2 = Field::make(2, 1);
    auto F3 = Field::make(3, 1);
    auto c11 = lrs_series(1, 1, F2);
    CHECK(c11.coefficients == std::map<std::uint64_t, long long>{{0, 1}, {1, 1}}); // 1 + t
    CHECK(c11.at_one() == 2);
    CHECK(lrs_series(2, 1, F2).at_one() == 2);
    // GL_1(F_2) is trivial, so the whole q^m-dimensional quotient is fixed
    for (int m = 1; m <= 3; ++m) CHECK(lrs_series(1, m, F2).at_one() == (1LL << m));
    // low ranks: series value at 1 equals the fixed-space dimension
    struct Case { FieldPtr F; int n; int m; };
    for (const auto& c : {Case{F2, 1, 1}, {F2, 1, 2}, {F2, 2, 1}, {F2, 2, 2},
                          {F2, 3, 1}, {F3, 2, 1}, {F2, 4, 1}}) {
        auto fs = fixed_space_dim(gl_generators(c.n, c.F), TruncationSpec{c.n, c.F, c.m});
        CHECK(lrs_series(c.n, c.m, c.F).at_one() == fs.dim);
    }
}

TEST_CASE("span hilbert ranks") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{2, F2, 2};
    CHECK(span_hilbert({}, t).coefficients.empty());
    auto one = MultiPoly::constant(F2, 2, F2->one());
    auto x1 = parse_poly("x1", F2, 2);
    auto series = span_hilbert({one, x1, x1}, t);
    CHECK(series.coefficients == std::map<std::uint64_t, long long>{{0, 1}, {1, 1}});
    // mixed-degree polynomials contribute their components independently
    auto series2 = span_hilbert({parse_poly("x1+x2^2", F2, 2), parse_poly("x2^2", F2, 2)}, t);
    CHECK(series2.coefficients == std::map<std::uint64_t, long long>{{1, 1}, {2, 1}});
}

TEST_CASE("basis candidate assembly") {
    auto F2 = Field::make(2, 1);
    TruncationSpec t{4, F2, 1};
    FamilySpec fam = family_from_json(R"({"entries": [{"s": 0, "polys": ["1"]}]})", F2);
    auto basis = basis_candidate(fam, t);
    REQUIRE(basis.size() == 1);
    auto d = delta(4, 1, MultiPoly::constant(F2, 4, F2->one()), t, true);
    CHECK(basis[0] == d.value);
    CHECK(basis_candidate(FamilySpec{}, t).empty());
    // independent inputs give an independent candidate list
    FamilySpec fam2 = family_from_json(
        R"({"entries": [{"s": 0, "polys": ["1"]}, {"s": 1, "polys": ["x1"]}]})", F2);
    auto basis2 = basis_candidate(fam2, t);
    REQUIRE(basis2.size() == 2);
    auto span = span_hilbert(basis2, t);
    CHECK(span.at_one() == 2);
    // variable support enforcement
    FamilySpec bad = family_from_json(R"({"entries": [{"s": 1, "polys": ["x1"]}]})", F2);
    bad.entries[0].polys[0] = parse_poly("x2", F2, 2);
    CHECK_THROWS_AS(basis_candidate(bad, t), BadVariableSupport);
}
