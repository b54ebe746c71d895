#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "deltacalc/errors.hpp"

namespace dc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// One element of F_q, canonically encoded as sum coeffs[i] * p^i with every
/// coefficient in [0, p). Only meaningful together with its Field.
struct FieldElement {
    std::uint32_t v = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// The field F_q, q = p^r, with table-based arithmetic. For r > 1 the modulus
/// is a monic irreducible of degree r over F_p (builtin table for q in
/// {4, 8, 9}, user moduli accepted after an irreducibility check).
class Field {
  public:
    static FieldPtr make(long p, int r);
    static FieldPtr make(long p, int r, const std::vector<long>& modulus);

    long p() const { return p_; }
    int r() const { return r_; }
    std::uint32_t q() const { return q_; }
    const std::vector<long>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// Element from an integer, reduced mod p and lifted into the prime field.
    FieldElement from_int(long v) const;
    FieldElement generator() const; // the class of `a` (r > 1)

    FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.v * q_ + b.v]}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.v * q_ + b.v]}; }
    FieldElement neg(FieldElement a) const { return {neg_[a.v]}; }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, unsigned long long e) const;

    /// a^{q^k}; the identity on F_q, computed honestly.
    FieldElement frobenius(FieldElement a, int k) const;
    /// a^{p^k} (sub-Frobenius, exposed for diagnostics on extensions).
    FieldElement frobenius_p(FieldElement a, int k) const;

    /// Coefficient vector (c_0, ..., c_{r-1}) of the canonical representative.
    std::vector<long> coeffs(FieldElement a) const;

    /// All q elements in lexicographic order on the coefficient vector
    /// (low-degree coefficient most significant), i.e. value order.
    std::vector<FieldElement> enumerate() const;

    std::string render(FieldElement a) const;
    FieldElement parse(const std::string& s) const;

    /// Structural identity of field specs (same p, r, modulus).
    bool same_as(const Field& other) const {
        return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
    }

  private:
    Field(long p, int r, std::vector<long> modulus);
    void build_tables();

    long p_;
    int r_;
    std::uint32_t q_;
    std::vector<long> modulus_; // degree r, monic; modulus_[r] == 1
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

bool is_prime(long n);

/// Irreducibility of a monic polynomial over F_p by exhaustive trial division
/// (degree <= 4 is all this artifact supports).
bool is_irreducible_mod_p(const std::vector<long>& poly, long p);

} // namespace dc
