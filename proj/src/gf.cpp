#include "deltacalc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dc {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// dense univariate arithmetic over F_p, little-endian coefficients
using UPoly = std::vector<long>;

UPoly trim(UPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// remainder of f by monic g
UPoly poly_rem(UPoly f, const UPoly& g, long p) {
    f = trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        long c = f.back();
        int shift = static_cast<int>(f.size()) - 1 - dg;
        for (int i = 0; i <= dg; ++i) {
            f[i + shift] = ((f[i + shift] - c * g[i]) % p + p * p) % p;
        }
        f = trim(f);
    }
    return f;
}

std::uint32_t encode(const UPoly& f, long p, int r) {
    std::uint32_t v = 0;
    std::uint32_t mult = 1;
    for (int i = 0; i < r; ++i) {
        long c = i < static_cast<int>(f.size()) ? f[i] : 0;
        v += static_cast<std::uint32_t>(c) * mult;
        mult *= static_cast<std::uint32_t>(p);
    }
    return v;
}

UPoly decode(std::uint32_t v, long p, int r) {
    UPoly f(r, 0);
    for (int i = 0; i < r; ++i) {
        f[i] = static_cast<long>(v % p);
        v /= static_cast<std::uint32_t>(p);
    }
    return f;
}

const std::vector<long>* builtin_modulus(long p, int r) {
    static const std::vector<long> f4 = {1, 1, 1};    // a^2 + a + 1
    static const std::vector<long> f8 = {1, 1, 0, 1}; // a^3 + a + 1
    static const std::vector<long> f9 = {1, 0, 1};    // a^2 + 1
    if (p == 2 && r == 2) return &f4;
    if (p == 2 && r == 3) return &f8;
    if (p == 3 && r == 2) return &f9;
    return nullptr;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<long>& poly, long p) {
    UPoly f = trim(poly);
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    // trial division by all monic polynomials of degree 1 .. deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            UPoly g(d + 1, 0);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(long p, int r, std::vector<long> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (int i = 0; i < r; ++i) q *= static_cast<std::uint64_t>(p);
    if (q > 256) throw Error("field too large for this artifact (q > 256)");
    q_ = static_cast<std::uint32_t>(q);
    build_tables();
}

FieldPtr Field::make(long p, int r) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r < 1) throw Error("extension degree must be >= 1");
    if (r == 1) {
        return FieldPtr(new Field(p, 1, {0, 1}));
    }
    const std::vector<long>* m = builtin_modulus(p, r);
    if (!m) throw Error("no builtin modulus for p=" + std::to_string(p) + ", r=" + std::to_string(r) + "; supply one");
    return make(p, r, *m);
}

FieldPtr Field::make(long p, int r, const std::vector<long>& modulus) {
    if (!is_prime(p)) throw NotPrime(p);
    if (r < 1) throw Error("extension degree must be >= 1");
    std::vector<long> m(modulus);
    for (auto& c : m) c = ((c % p) + p) % p;
    m = trim(m);
    if (static_cast<int>(m.size()) - 1 != r || m.back() != 1)
        throw ReducibleModulus("modulus must be monic of degree r");
    if (r > 1 && !is_irreducible_mod_p(m, p))
        throw ReducibleModulus("modulus reducible over F_p");
    return FieldPtr(new Field(p, r, std::move(m)));
}

void Field::build_tables() {
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        UPoly fa = decode(a, p_, r_);
        UPoly na(r_, 0);
        for (int i = 0; i < r_; ++i) na[i] = (p_ - fa[i]) % p_;
        neg_[a] = encode(na, p_, r_);
        for (std::uint32_t b = 0; b < q_; ++b) {
            UPoly fb = decode(b, p_, r_);
            UPoly s(r_, 0);
            for (int i = 0; i < r_; ++i) s[i] = (fa[i] + fb[i]) % p_;
            add_[a * q_ + b] = encode(s, p_, r_);
            UPoly prod(2 * r_ - 1, 0);
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j)
                    prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
            mul_[a * q_ + b] = encode(poly_rem(prod, modulus_, p_), p_, r_);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

FieldElement Field::from_int(long v) const {
    long c = ((v % p_) + p_) % p_;
    return {static_cast<std::uint32_t>(c)};
}

FieldElement Field::generator() const {
    if (r_ < 2) throw Error("prime field has no extension generator");
    return {static_cast<std::uint32_t>(p_)}; // coeff vector (0, 1, 0, ...)
}

FieldElement Field::inv(FieldElement a) const {
    if (a.v == 0) throw DivisionByZero();
    return {inv_[a.v]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, unsigned long long e) const {
    FieldElement r = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::frobenius(FieldElement a, int k) const {
    FieldElement r = a;
    for (int i = 0; i < k; ++i) r = pow(r, q_);
    return r;
}

FieldElement Field::frobenius_p(FieldElement a, int k) const {
    FieldElement r = a;
    for (int i = 0; i < k; ++i) r = pow(r, static_cast<unsigned long long>(p_));
    return r;
}

std::vector<long> Field::coeffs(FieldElement a) const {
    return decode(a.v, p_, r_);
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out.push_back({v});
    return out;
}

std::string Field::render(FieldElement a) const {
    if (r_ == 1) return std::to_string(a.v);
    auto cs = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int i = r_ - 1; i >= 0; --i) {
        if (cs[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || cs[i] != 1) os << cs[i];
        if (i >= 1 && cs[i] != 1) os << "*";
        if (i == 1) os << "a";
        if (i >= 2) os << "a^" << i;
    }
    if (first) return "0";
    return os.str();
}

FieldElement Field::parse(const std::string& s) const {
    // integers, or sums of c*a^k terms for the extension generator `a`
    FieldElement acc = zero();
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw ParseError("empty field element");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        long coef = 1;
        bool saw_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = coef * 10 + (s[i] - '0');
                ++i;
            }
            saw_num = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        long deg = 0;
        if (i < s.size() && s[i] == 'a') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("bad exponent in field element: " + s);
                deg = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    deg = deg * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_num) {
            throw ParseError("bad field element: " + s);
        }
        if (deg >= r_) throw ParseError("generator power exceeds field degree: " + s);
        FieldElement term = from_int(coef);
        if (deg > 0) term = mul(term, pow(generator(), static_cast<unsigned long long>(deg)));
        acc = add(acc, term);
        any = true;
        skip_ws();
        if (i < s.size()) {
            if (s[i] != '+') throw ParseError("bad field element: " + s);
            ++i;
        }
    }
    if (!any) throw ParseError("bad field element: " + s);
    return acc;
}

} // namespace dc
