#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "deltacalc/gf.hpp"
#include "deltacalc/rng.hpp"

namespace dc {

constexpr std::uint64_t kMaxExponent = 1u << 20;

/// Exponent vector of a single monomial; length equals the ambient variable
/// count. The total degree is cached at construction.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial unit(int nvars);
    static Monomial var(int nvars, int index, std::uint32_t e = 1); // index is 0-based

    int nvars() const { return static_cast<int>(exps_.size()); }
    std::uint32_t exp(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    std::uint64_t degree() const { return degree_; }

    Monomial operator*(const Monomial& o) const;
    /// Componentwise quotient; caller must check divides() first.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const; // this | o
    Monomial pow_scale(std::uint64_t k) const; // every exponent times k

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded lexicographic order: compare total degree, then the exponent
/// vector left to right. Fixes the monomial order used for exact division.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over F_q. Term map never stores zero
/// coefficients and iterates in grlex order, so equal polynomials have
/// identical term maps.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, FieldElement, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(FieldPtr field, int nvars);

    static MultiPoly zero(FieldPtr field, int nvars);
    static MultiPoly constant(FieldPtr field, int nvars, FieldElement c);
    static MultiPoly variable(FieldPtr field, int nvars, int index, std::uint32_t e = 1);
    static MultiPoly monomial(FieldPtr field, Monomial m, FieldElement c);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial

    void add_term(const Monomial& m, FieldElement c); // accumulating

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(FieldElement c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// f^e; powers of the characteristic are routed through Frobenius.
    MultiPoly pow(std::uint64_t e) const;

    /// Coefficients mapped by c -> c^{q^k}, every variable by x -> x^{q^k}.
    MultiPoly frob_power(int k) const;

    /// Ring homomorphism sending x_i to images[i]; all images must share a
    /// common variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Pad or project the exponent vectors to a new ambient variable count.
    /// Shrinking requires the dropped variables to be unused.
    MultiPoly with_nvars(int n) const;

    /// Slice at x_i^e (i 0-based): the polynomial g, with x_i-exponent zero,
    /// such that summing x_i^e * g over all e reassembles the input.
    MultiPoly coefficient_in_var(int i, std::uint64_t e) const;

    std::string render() const;
    std::string to_json() const;

  private:
    FieldPtr field_;
    int nvars_ = 0;
    TermMap terms_;
};

/// Exact quotient f / g under grlex leading-term division.
/// Throws NotDivisible when a remainder survives.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

/// As exact_div but reports failure instead of throwing.
bool try_exact_div(const MultiPoly& f, const MultiPoly& g, MultiPoly& quotient);

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<MultiPoly> entries; // row-major

    MultiPoly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const MultiPoly& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

/// Laplace cofactor expansion along the line with the most zero entries.
MultiPoly determinant(const PolyMatrix& M);

struct PolyFraction {
    MultiPoly num;
    MultiPoly den; // nonzero; no cancellation promised
};

/// Deterministic random polynomial: `terms` draws of (coefficient, exponent
/// vector), exponents uniform in [0, max_deg_each] on the first active_vars
/// variables, accumulated (so terms may merge or cancel).
MultiPoly random_poly(const FieldPtr& field, int nvars, int active_vars,
                      std::uint32_t max_deg_each, int terms, SplitMix64& rng);

/// Text grammar: poly := term ('+' term)*; term := [coeff '*']? factor ('*' factor)*
/// | coeff; factor := 'x' INDEX ('^' EXP)?; '0' is the zero polynomial.
/// nvars == 0 infers the variable count from the largest index seen.
MultiPoly parse_poly(const std::string& text, const FieldPtr& field, int nvars = 0);

MultiPoly poly_from_json(const std::string& json_text, const FieldPtr& field);

} // namespace dc
