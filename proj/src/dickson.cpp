#include "deltacalc/dickson.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace dc {

MultiPoly moore_det(int s, const FieldPtr& field, int nvars) {
    if (nvars == 0) nvars = s;
    if (s < 1 || s > nvars) throw Error("moore_det: need 1 <= s <= nvars");
    PolyMatrix M;
    M.rows = M.cols = s;
    for (int r = 0; r < s; ++r)
        for (int j = 0; j < s; ++j)
            M.entries.push_back(MultiPoly::variable(field, nvars, j).frob_power(r));
    return determinant(M);
}

MultiPoly v_poly(int n, const FieldPtr& field, int nvars) {
    if (nvars == 0) nvars = n;
    if (n < 1 || n > nvars) throw Error("v_poly: need 1 <= n <= nvars");
    MultiPoly v = MultiPoly::constant(field, nvars, field->one());
    std::vector<FieldElement> lambda(static_cast<size_t>(n - 1), field->zero());
    const auto elems = field->enumerate();
    // iterate lambda over F_q^{n-1} by odometer
    while (true) {
        MultiPoly linear = MultiPoly::variable(field, nvars, n - 1);
        for (int i = 0; i < n - 1; ++i)
            linear = linear + MultiPoly::variable(field, nvars, i).scaled(lambda[static_cast<size_t>(i)]);
        v = v * linear;
        int k = 0;
        while (k < n - 1) {
            std::uint32_t next = lambda[static_cast<size_t>(k)].v + 1;
            if (next < field->q()) {
                lambda[static_cast<size_t>(k)] = elems[next];
                break;
            }
            lambda[static_cast<size_t>(k)] = field->zero();
            ++k;
        }
        if (k == n - 1) break;
    }
    return v;
}

namespace {

struct CacheKey {
    long p;
    int r;
    std::vector<long> modulus;
    Convention conv;
    int n;
    auto tie() const { return std::tie(p, r, modulus, conv, n); }
    bool operator<(const CacheKey& o) const { return tie() < o.tie(); }
};

std::map<CacheKey, std::vector<MultiPoly>> g_dickson_cache;
std::mutex g_dickson_mutex;

// Q_{n,0..n-1} in exactly n variables; the recursion pads lower ranks up.
std::vector<MultiPoly> dickson_rec(int n, const FieldPtr& field, Convention conv) {
    CacheKey key{field->p(), field->r(), field->modulus(), conv, n};
    {
        std::lock_guard<std::mutex> lock(g_dickson_mutex);
        auto it = g_dickson_cache.find(key);
        if (it != g_dickson_cache.end()) return it->second;
    }
    std::vector<MultiPoly> polys;
    const std::uint32_t q = field->q();
    if (n == 1) {
        polys.push_back(MultiPoly::variable(field, 1, 0).pow(q - 1));
    } else {
        std::vector<MultiPoly> lower = dickson_rec(n - 1, field, conv);
        for (auto& f : lower) f = f.with_nvars(n);
        MultiPoly vq = v_poly(n, field).pow(q - 1);
        MultiPoly top = conv == Convention::top_zero
                            ? MultiPoly::zero(field, n)
                            : MultiPoly::constant(field, n, field->one());
        for (int i = 0; i < n; ++i) {
            MultiPoly qi = i < n - 1 ? vq * lower[static_cast<size_t>(i)] : vq * top;
            if (i > 0) qi = qi + lower[static_cast<size_t>(i - 1)].frob_power(1);
            polys.push_back(std::move(qi));
        }
    }
    std::lock_guard<std::mutex> lock(g_dickson_mutex);
    return g_dickson_cache.try_emplace(key, std::move(polys)).first->second;
}

} // namespace

DicksonSet dickson_q(int n, const FieldPtr& field, Convention convention) {
    if (n < 1) throw Error("dickson_q: n >= 1");
    return DicksonSet{n, convention, dickson_rec(n, field, convention)};
}

MultiPoly dickson_oracle(int n, int i, const FieldPtr& field) {
    if (i < 0 || i >= n) throw Error("dickson_oracle: need 0 <= i < n");
    PolyMatrix M;
    M.rows = M.cols = n;
    for (int e = 0; e <= n; ++e) {
        if (e == i) continue;
        for (int j = 0; j < n; ++j)
            M.entries.push_back(MultiPoly::variable(field, n, j).frob_power(e));
    }
    MultiPoly quot = exact_div(determinant(M), moore_det(n, field));
    // normalize the x_n-leading coefficient (grlex leading term) to +1
    FieldElement lead = quot.terms().rbegin()->second;
    if (!(lead == field->one())) quot = quot.scaled(field->inv(lead));
    return quot;
}

MultiPoly truncate(const MultiPoly& f, const TruncationSpec& tspec) {
    const std::uint64_t cap = tspec.qm();
    MultiPoly r(f.field(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        bool keep = true;
        for (int i = 0; i < f.nvars(); ++i) {
            if (m.exp(i) >= cap) {
                keep = false;
                break;
            }
        }
        if (keep) r.add_term(m, c);
    }
    return r;
}

bool in_ideal(const MultiPoly& f, const TruncationSpec& tspec) {
    return truncate(f, tspec).is_zero();
}

MultiPoly truncated_mul(const MultiPoly& a, const MultiPoly& b, const TruncationSpec& tspec) {
    // I_m(n) is monomial, so truncating the factors first is sound.
    const MultiPoly ta = truncate(a, tspec);
    const MultiPoly tb = truncate(b, tspec);
    const std::uint64_t cap = tspec.qm();
    MultiPoly r(a.field(), a.nvars());
    const MultiPoly& outer = ta.term_count() <= tb.term_count() ? ta : tb;
    const MultiPoly& inner = ta.term_count() <= tb.term_count() ? tb : ta;
    const auto& field = a.field();
    for (const auto& [ma, ca] : outer.terms()) {
        for (const auto& [mb, cb] : inner.terms()) {
            bool keep = true;
            std::vector<std::uint32_t> e(static_cast<size_t>(a.nvars()));
            for (int i = 0; i < a.nvars(); ++i) {
                std::uint64_t s = std::uint64_t{ma.exp(i)} + mb.exp(i);
                if (s >= cap) {
                    keep = false;
                    break;
                }
                e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(s);
            }
            if (keep) r.add_term(Monomial(std::move(e)), field->mul(ca, cb));
        }
    }
    return r;
}

} // namespace dc
