#include "deltacalc/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dc {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::unit(int nvars) {
    return Monomial(std::vector<std::uint32_t>(static_cast<size_t>(nvars), 0));
}

Monomial Monomial::var(int nvars, int index, std::uint32_t e) {
    std::vector<std::uint32_t> v(static_cast<size_t>(nvars), 0);
    v[static_cast<size_t>(index)] = e;
    return Monomial(std::move(v));
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint32_t> v(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t e = std::uint64_t{exps_[i]} + o.exps_[i];
        if (e > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^20");
        v[i] = static_cast<std::uint32_t>(e);
    }
    return Monomial(std::move(v));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<std::uint32_t> v(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) v[i] = exps_[i] - o.exps_[i];
    return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::pow_scale(std::uint64_t k) const {
    std::vector<std::uint32_t> v(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        std::uint64_t e = exps_[i] * k;
        if (e > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^20");
        v[i] = static_cast<std::uint32_t>(e);
    }
    return Monomial(std::move(v));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exps() < b.exps();
}

MultiPoly::MultiPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

MultiPoly MultiPoly::zero(FieldPtr field, int nvars) { return MultiPoly(std::move(field), nvars); }

MultiPoly MultiPoly::constant(FieldPtr field, int nvars, FieldElement c) {
    MultiPoly f(std::move(field), nvars);
    f.add_term(Monomial::unit(nvars), c);
    return f;
}

MultiPoly MultiPoly::variable(FieldPtr field, int nvars, int index, std::uint32_t e) {
    MultiPoly f(field, nvars);
    f.add_term(Monomial::var(nvars, index, e), field->one());
    return f;
}

MultiPoly MultiPoly::monomial(FieldPtr field, Monomial m, FieldElement c) {
    MultiPoly f(field, m.nvars());
    f.add_term(std::move(m), c);
    return f;
}

std::uint64_t MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void MultiPoly::add_term(const Monomial& m, FieldElement c) {
    if (c == field_->zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == field_->zero()) terms_.erase(it);
    }
}

namespace {

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw VariableCountMismatch("polynomials have " + std::to_string(a.nvars()) + " vs " +
                                    std::to_string(b.nvars()) + " variables");
    if (!a.field()->same_as(*b.field())) throw Error("field mismatch");
}

} // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::scaled(FieldElement c) const {
    MultiPoly r(field_, nvars_);
    if (c == field_->zero()) return r;
    for (const auto& [m, cf] : terms_) {
        FieldElement v = field_->mul(cf, c);
        if (!(v == field_->zero())) r.terms_.emplace(m, v);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_compatible(*this, o);
    MultiPoly r(field_, nvars_);
    // iterate the smaller operand outside
    const MultiPoly& a = terms_.size() <= o.terms_.size() ? *this : o;
    const MultiPoly& b = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, field_->mul(ca, cb));
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::frob_power(int k) const {
    std::uint64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= field_->q();
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m.pow_scale(qk), field_->frobenius(c, k));
    }
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    // factor out powers of the characteristic: f^(p^a * b) = frob_p(f)^b,
    // and over F_q a p-power that is a q-power is a term-wise operation
    MultiPoly base = *this;
    const std::uint64_t p = static_cast<std::uint64_t>(field_->p());
    const std::uint64_t q = field_->q();
    while (e > 1 && e % q == 0) {
        base = base.frob_power(1);
        e /= q;
    }
    while (e > 1 && e % p == 0) {
        // freshman's dream term-wise
        MultiPoly next(field_, nvars_);
        for (const auto& [m, c] : base.terms_)
            next.terms_.emplace(m.pow_scale(p), field_->frobenius_p(c, 1));
        base = std::move(next);
        e /= p;
    }
    MultiPoly r = MultiPoly::constant(field_, nvars_, field_->one());
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw VariableCountMismatch("need one image per variable");
    if (nvars_ == 0) return *this;
    const int out_n = images.empty() ? nvars_ : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_n) throw VariableCountMismatch("images disagree on variable count");
    MultiPoly r(field_, out_n);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(field_, out_n, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m.exp(i) == 0) continue;
            term = term * images[static_cast<size_t>(i)].pow(m.exp(i));
            if (term.is_zero()) break;
        }
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::with_nvars(int n) const {
    if (n == nvars_) return *this;
    MultiPoly r(field_, n);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(static_cast<size_t>(n), 0);
        for (int i = 0; i < nvars_; ++i) {
            if (i >= n) {
                if (m.exp(i) != 0)
                    throw VariableCountMismatch("cannot drop a used variable");
                continue;
            }
            e[static_cast<size_t>(i)] = m.exp(i);
        }
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

MultiPoly MultiPoly::coefficient_in_var(int i, std::uint64_t e) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp(i) != e) continue;
        std::vector<std::uint32_t> v = m.exps();
        v[static_cast<size_t>(i)] = 0;
        r.terms_.emplace(Monomial(std::move(v)), c);
    }
    return r;
}

bool try_exact_div(const MultiPoly& f, const MultiPoly& g, MultiPoly& quotient) {
    if (g.is_zero()) throw DivisionByZero();
    const auto& field = f.field();
    MultiPoly q(field, f.nvars());
    MultiPoly rem = f;
    const auto& glead = *g.terms().rbegin();
    FieldElement ginv = field->inv(glead.second);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!glead.first.divides(rlead.first)) {
            quotient = MultiPoly::zero(field, f.nvars());
            return false;
        }
        Monomial m = rlead.first / glead.first;
        FieldElement c = field->mul(rlead.second, ginv);
        MultiPoly t = MultiPoly::monomial(field, m, c);
        q = q + t;
        rem = rem - t * g;
    }
    quotient = std::move(q);
    return true;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly q;
    if (!try_exact_div(f, g, q)) throw NotDivisible("nonzero remainder in exact division");
    return q;
}

MultiPoly determinant(const PolyMatrix& M) {
    if (M.rows != M.cols) throw NotSquare("determinant of a non-square matrix");
    const int n = M.rows;
    if (n == 0) throw NotSquare("empty matrix");
    const auto& field = M.entries[0].field();
    const int nv = M.entries[0].nvars();
    if (n == 1) return M.at(0, 0);

    // expand along the row or column with the most zeros
    int best_line = 0;
    bool best_is_row = true;
    int best_zeros = -1;
    for (int r = 0; r < n; ++r) {
        int z = 0;
        for (int c = 0; c < n; ++c) z += M.at(r, c).is_zero();
        if (z > best_zeros) { best_zeros = z; best_line = r; best_is_row = true; }
    }
    for (int c = 0; c < n; ++c) {
        int z = 0;
        for (int r = 0; r < n; ++r) z += M.at(r, c).is_zero();
        if (z > best_zeros) { best_zeros = z; best_line = c; best_is_row = false; }
    }

    MultiPoly det = MultiPoly::zero(field, nv);
    for (int k = 0; k < n; ++k) {
        const MultiPoly& pivot = best_is_row ? M.at(best_line, k) : M.at(k, best_line);
        if (pivot.is_zero()) continue;
        PolyMatrix minor;
        minor.rows = minor.cols = n - 1;
        minor.entries.reserve(static_cast<size_t>(n - 1) * (n - 1));
        for (int r = 0; r < n; ++r) {
            if (best_is_row ? (r == best_line) : (r == k)) continue;
            for (int c = 0; c < n; ++c) {
                if (best_is_row ? (c == k) : (c == best_line)) continue;
                minor.entries.push_back(M.at(r, c));
            }
        }
        MultiPoly term = pivot * determinant(minor);
        int sign = (best_line + k) % 2;
        det = sign == 0 ? det + term : det - term;
    }
    return det;
}

MultiPoly random_poly(const FieldPtr& field, int nvars, int active_vars,
                      std::uint32_t max_deg_each, int terms, SplitMix64& rng) {
    MultiPoly f(field, nvars);
    for (int t = 0; t < terms; ++t) {
        FieldElement c{static_cast<std::uint32_t>(rng.below(field->q()))};
        std::vector<std::uint32_t> e(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < active_vars; ++i)
            e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(rng.below(max_deg_each + 1ULL));
        f.add_term(Monomial(std::move(e)), c);
    }
    return f;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const FieldPtr& field;

    void ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    long integer() {
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer at position " + std::to_string(i) + " in: " + s);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const FieldPtr& field, int nvars) {
    struct RawTerm {
        FieldElement coeff;
        std::vector<std::pair<int, std::uint32_t>> factors; // (0-based var, exponent)
    };
    std::vector<RawTerm> raw;
    int max_index = 0;

    Parser p{text, 0, field};
    p.ws();
    if (p.i >= text.size()) throw ParseError("empty polynomial");

    bool done = false;
    while (!done) {
        RawTerm term{field->one(), {}};
        bool saw_factor = false;
        bool saw_coeff = false;
        p.ws();
        if (p.i < text.size() && text[p.i] == '(') {
            ++p.i;
            size_t start = p.i;
            while (p.i < text.size() && text[p.i] != ')') ++p.i;
            if (p.i >= text.size()) throw ParseError("unbalanced '(' in: " + text);
            term.coeff = field->parse(text.substr(start, p.i - start));
            ++p.i;
            saw_coeff = true;
        } else if (p.i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[p.i])) || text[p.i] == 'a')) {
            if (text[p.i] == 'a' && field->r() == 1)
                throw ParseError("generator 'a' in a prime-field polynomial: " + text);
            if (text[p.i] == 'a') {
                // bare generator power as coefficient
                size_t start = p.i;
                while (p.i < text.size() && (text[p.i] == 'a' || text[p.i] == '^' ||
                                             std::isdigit(static_cast<unsigned char>(text[p.i]))))
                    ++p.i;
                term.coeff = field->parse(text.substr(start, p.i - start));
            } else {
                term.coeff = field->from_int(p.integer());
            }
            saw_coeff = true;
        }
        while (true) {
            p.ws();
            if (saw_coeff || saw_factor) {
                if (!p.eat('*')) break;
            }
            p.ws();
            if (p.i >= text.size() || text[p.i] != 'x') {
                if (saw_coeff && !saw_factor) break; // pure constant term
                throw ParseError("expected factor 'xN' at position " + std::to_string(p.i) +
                                 " in: " + text);
            }
            ++p.i;
            long idx = p.integer();
            if (idx < 1) throw ParseError("variable indices start at 1: " + text);
            std::uint32_t e = 1;
            if (p.eat('^')) {
                long ev = p.integer();
                if (ev < 0 || static_cast<std::uint64_t>(ev) > kMaxExponent)
                    throw ExponentOverflow("exponent exceeds 2^20");
                e = static_cast<std::uint32_t>(ev);
            }
            term.factors.emplace_back(static_cast<int>(idx) - 1, e);
            max_index = std::max(max_index, static_cast<int>(idx));
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor)
            throw ParseError("empty term in: " + text);
        raw.push_back(std::move(term));
        p.ws();
        if (p.i >= text.size()) done = true;
        else if (!p.eat('+')) throw ParseError("expected '+' at position " + std::to_string(p.i) +
                                               " in: " + text);
    }

    int n = nvars > 0 ? nvars : std::max(max_index, 1);
    if (max_index > n)
        throw VariableCountMismatch("variable index exceeds declared count in: " + text);
    MultiPoly f(field, n);
    for (const auto& t : raw) {
        std::vector<std::uint32_t> e(static_cast<size_t>(n), 0);
        for (auto [v, ex] : t.factors) {
            std::uint64_t total = std::uint64_t{e[static_cast<size_t>(v)]} + ex;
            if (total > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^20");
            e[static_cast<size_t>(v)] = static_cast<std::uint32_t>(total);
        }
        f.add_term(Monomial(std::move(e)), t.coeff);
    }
    return f;
}

std::string MultiPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest term first, matching conventional display
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << "+";
        first = false;
        std::string cs = field_->render(c);
        bool unit_coeff = (c == field_->one());
        bool has_vars = m.degree() > 0;
        if (!has_vars) {
            if (cs.find('+') != std::string::npos) os << "(" << cs << ")";
            else os << cs;
            continue;
        }
        if (!unit_coeff) {
            if (cs.find('+') != std::string::npos) os << "(" << cs << ")";
            else os << cs;
            os << "*";
        }
        bool firstf = true;
        for (int i = 0; i < nvars_; ++i) {
            if (m.exp(i) == 0) continue;
            if (!firstf) os << "*";
            firstf = false;
            os << "x" << (i + 1);
            if (m.exp(i) > 1) os << "^" << m.exp(i);
        }
    }
    return os.str();
}

std::string MultiPoly::to_json() const {
    nlohmann::json j;
    j["nvars"] = nvars_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json t;
        t["e"] = m.exps();
        t["c"] = field_->render(c);
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

MultiPoly poly_from_json(const std::string& json_text, const FieldPtr& field) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    int n = j.at("nvars").get<int>();
    MultiPoly f(field, n);
    for (const auto& t : j.at("terms")) {
        std::vector<std::uint32_t> e = t.at("e").get<std::vector<std::uint32_t>>();
        if (static_cast<int>(e.size()) != n)
            throw VariableCountMismatch("term length disagrees with nvars in JSON");
        f.add_term(Monomial(std::move(e)), field->parse(t.at("c").get<std::string>()));
    }
    return f;
}

} // namespace dc
