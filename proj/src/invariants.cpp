#include "deltacalc/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "deltacalc/delta.hpp"

namespace dc {

namespace {

using Matrix = std::vector<FieldElement>; // n*n row-major

Matrix identity_matrix(int n, const FieldPtr& field) {
    Matrix m(static_cast<size_t>(n) * n, field->zero());
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = field->one();
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int n, const FieldPtr& field) {
    Matrix c(static_cast<size_t>(n) * n, field->zero());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            FieldElement aik = a[static_cast<size_t>(i) * n + k];
            if (aik == field->zero()) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<size_t>(i) * n + j] =
                    field->add(c[static_cast<size_t>(i) * n + j],
                               field->mul(aik, b[static_cast<size_t>(k) * n + j]));
        }
    return c;
}

FieldElement mat_det(Matrix m, int n, const FieldPtr& field) {
    FieldElement det = field->one();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!(m[static_cast<size_t>(r) * n + c] == field->zero())) {
                pivot = r;
                break;
            }
        if (pivot < 0) return field->zero();
        if (pivot != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<size_t>(pivot) * n + j], m[static_cast<size_t>(c) * n + j]);
            det = field->neg(det);
        }
        FieldElement pv = m[static_cast<size_t>(c) * n + c];
        det = field->mul(det, pv);
        FieldElement inv = field->inv(pv);
        for (int r = c + 1; r < n; ++r) {
            FieldElement factor = field->mul(m[static_cast<size_t>(r) * n + c], inv);
            if (factor == field->zero()) continue;
            for (int j = c; j < n; ++j)
                m[static_cast<size_t>(r) * n + j] =
                    field->sub(m[static_cast<size_t>(r) * n + j],
                               field->mul(factor, m[static_cast<size_t>(c) * n + j]));
        }
    }
    return det;
}

FieldElement multiplicative_generator(const FieldPtr& field) {
    for (FieldElement x : field->enumerate()) {
        if (x == field->zero()) continue;
        std::uint32_t order = 1;
        FieldElement y = x;
        while (!(y == field->one())) {
            y = field->mul(y, x);
            ++order;
        }
        if (order == field->q() - 1) return x;
    }
    throw Error("no multiplicative generator found"); // unreachable
}

// ---- dense nullspace over F_q -------------------------------------------

// Solve M v = 0 for M given as rows of length ncols; returns a basis of the
// nullspace as coordinate vectors.
std::vector<std::vector<FieldElement>> nullspace_generic(
    std::vector<std::vector<FieldElement>> rows, std::size_t ncols, const FieldPtr& field) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][c] == field->zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        FieldElement inv = field->inv(rows[rank][c]);
        for (std::size_t j = c; j < ncols; ++j) rows[rank][j] = field->mul(rows[rank][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            FieldElement f = rows[r][c];
            if (f == field->zero()) continue;
            for (std::size_t j = c; j < ncols; ++j)
                rows[r][j] = field->sub(rows[r][j], field->mul(f, rows[rank][j]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::set<std::size_t> pivots(pivot_col.begin(), pivot_col.end());
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (pivots.count(fc)) continue;
        std::vector<FieldElement> v(ncols, field->zero());
        v[fc] = field->one();
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = field->neg(rows[r][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Packed GF(2) variant; rows are bitsets over 64-bit words.
std::vector<std::vector<FieldElement>> nullspace_gf2(const std::vector<std::vector<FieldElement>>& in,
                                                     std::size_t ncols, const FieldPtr& field) {
    const std::size_t words = (ncols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(in.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < in.size(); ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            if (in[r][c].v) rows[r][c / 64] |= (1ULL << (c % 64));
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && !((rows[pr][c / 64] >> (c % 64)) & 1)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            if ((rows[r][c / 64] >> (c % 64)) & 1)
                for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::set<std::size_t> pivots(pivot_col.begin(), pivot_col.end());
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (pivots.count(fc)) continue;
        std::vector<FieldElement> v(ncols, field->zero());
        v[fc] = field->one();
        for (std::size_t r = 0; r < rank; ++r)
            if ((rows[r][fc / 64] >> (fc % 64)) & 1) v[pivot_col[r]] = field->one();
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<FieldElement>> nullspace(std::vector<std::vector<FieldElement>> rows,
                                                 std::size_t ncols, const FieldPtr& field) {
    if (field->q() == 2) return nullspace_gf2(rows, ncols, field);
    return nullspace_generic(std::move(rows), ncols, field);
}

std::size_t rank_of(std::vector<std::vector<FieldElement>> rows, std::size_t ncols,
                    const FieldPtr& field) {
    if (rows.empty()) return 0;
    return ncols - nullspace(std::move(rows), ncols, field).size();
}

// ---- univariate integer polynomials for the series work ------------------

using UPolyZ = std::vector<long long>; // ascending coefficients

void trim(UPolyZ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPolyZ upoly_mul(const UPolyZ& a, const UPolyZ& b) {
    if (a.empty() || b.empty()) return {};
    UPolyZ c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// exact division; throws NonPolynomialResult on any remainder
UPolyZ upoly_div(UPolyZ num, const UPolyZ& den) {
    trim(num);
    if (den.empty() || den.back() == 0) throw DivisionByZero();
    if (num.empty()) return {};
    if (num.size() < den.size()) throw NonPolynomialResult("quotient is not a polynomial");
    UPolyZ q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long lead = num[i + den.size() - 1];
        if (lead % den.back() != 0) throw NonPolynomialResult("non-integral quotient");
        long long c = lead / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw NonPolynomialResult("quotient is not a polynomial");
    return q;
}

UPolyZ one_minus_t_pow(std::uint64_t e) {
    UPolyZ p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = 1;
    p[static_cast<std::size_t>(e)] = -1;
    return p;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

GroupSpec gl_generators(int n, const FieldPtr& field) {
    if (n < 1) throw Error("gl_generators: n >= 1");
    GroupSpec g{n, field, {}};
    if (n >= 2) {
        Matrix t = identity_matrix(n, field);
        t[1] = field->one(); // x1 -> x1 + x2
        g.generators.push_back(std::move(t));
        Matrix c(static_cast<size_t>(n) * n, field->zero());
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i) * n + (i + 1) % n] = field->one();
        g.generators.push_back(std::move(c));
    }
    if (field->q() > 2) {
        Matrix s = identity_matrix(n, field);
        s[0] = multiplicative_generator(field);
        g.generators.push_back(std::move(s));
    }
    if (g.generators.empty()) g.generators.push_back(identity_matrix(n, field));
    for (const auto& m : g.generators)
        if (mat_det(m, n, field) == field->zero()) throw Error("singular generator");
    return g;
}

std::size_t closure_order(const GroupSpec& group, std::size_t limit) {
    auto key = [&](const Matrix& m) {
        std::string k;
        k.reserve(m.size());
        for (FieldElement e : m) k.push_back(static_cast<char>(e.v));
        return k;
    };
    std::set<std::string> seen;
    std::vector<Matrix> frontier = {identity_matrix(group.n, group.field)};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& m : frontier) {
            for (const auto& g : group.generators) {
                Matrix prod = mat_mul(m, g, group.n, group.field);
                if (seen.insert(key(prod)).second) {
                    if (seen.size() > limit) throw ResourceLimit("closure exceeds limit");
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

FixedSpace fixed_space_dim(const GroupSpec& group, const TruncationSpec& tspec, bool parallel) {
    const auto& field = tspec.field;
    const int n = tspec.n;
    if (group.n != n) throw VariableCountMismatch("group rank disagrees with truncation spec");
    const std::uint64_t qm = tspec.qm();
    std::uint64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= qm;
        if (dim > 4096) throw ResourceLimit("monomial basis exceeds 4096");
    }
    const std::size_t N = static_cast<std::size_t>(dim);

    auto index_of = [&](const Monomial& mo) {
        std::uint64_t idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * qm + mo.exp(i);
        return static_cast<std::size_t>(idx);
    };
    auto monomial_of = [&](std::size_t idx) {
        std::vector<std::uint32_t> e(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            e[static_cast<size_t>(i)] = static_cast<std::uint32_t>(idx % qm);
            idx /= qm;
        }
        return Monomial(std::move(e));
    };

    // stacked constraints (rho(g) - id) v = 0 over all generators; the
    // action matrix has the image coordinates of each basis monomial as a
    // column, built independently (and in parallel) per monomial
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(group.generators.size() * N);
    for (const auto& gmat : group.generators) {
        // linear images of the variables under g
        std::vector<MultiPoly> var_images;
        for (int i = 0; i < n; ++i) {
            MultiPoly li(field, n);
            for (int j = 0; j < n; ++j)
                li.add_term(Monomial::var(n, j), gmat[static_cast<size_t>(i) * n + j]);
            var_images.push_back(std::move(li));
        }
        // truncated powers of each variable image, up to q^m - 1
        std::vector<std::vector<MultiPoly>> powers(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            powers[static_cast<size_t>(i)].push_back(MultiPoly::constant(field, n, field->one()));
            for (std::uint64_t e = 1; e < qm; ++e)
                powers[static_cast<size_t>(i)].push_back(truncated_mul(
                    powers[static_cast<size_t>(i)].back(), var_images[static_cast<size_t>(i)], tspec));
        }
        // columns of the action matrix, one per basis monomial
        std::vector<std::vector<FieldElement>> cols(N);
        auto build_col = [&](std::size_t b) {
            Monomial mo = monomial_of(b);
            MultiPoly img = MultiPoly::constant(field, n, field->one());
            for (int i = 0; i < n; ++i)
                if (mo.exp(i))
                    img = truncated_mul(img, powers[static_cast<size_t>(i)][mo.exp(i)], tspec);
            std::vector<FieldElement> col(N, field->zero());
            for (const auto& [m2, c] : img.terms()) col[index_of(m2)] = c;
            col[b] = field->sub(col[b], field->one()); // subtract identity
            cols[b] = std::move(col);
        };
#ifdef DC_HAVE_OPENMP
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t b = 0; b < N; ++b) build_col(b);
        } else
#else
        (void)parallel;
#endif
        {
            for (std::size_t b = 0; b < N; ++b) build_col(b);
        }
        // transpose columns into constraint rows (A - I) v = 0
        for (std::size_t r = 0; r < N; ++r) {
            std::vector<FieldElement> row(N, field->zero());
            for (std::size_t c2 = 0; c2 < N; ++c2) row[c2] = cols[c2][r];
            rows.push_back(std::move(row));
        }
    }

    auto kernel = nullspace(std::move(rows), N, field);
    FixedSpace out{static_cast<int>(kernel.size()), {}};
    for (const auto& v : kernel) {
        MultiPoly f(field, n);
        for (std::size_t b = 0; b < N; ++b)
            if (!(v[b] == field->zero())) f.add_term(monomial_of(b), v[b]);
        out.basis.push_back(std::move(f));
    }
    return out;
}

long long HilbertSeries::at(long long t) const {
    long long total = 0;
    for (const auto& [d, c] : coefficients) {
        long long pw = 1;
        for (std::uint64_t i = 0; i < d; ++i) pw *= t;
        total += c * pw;
    }
    return total;
}

long long HilbertSeries::at_one() const {
    long long total = 0;
    for (const auto& [d, c] : coefficients) total += c;
    return total;
}

std::string HilbertSeries::render() const {
    if (coefficients.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coefficients) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return first ? "0" : os.str();
}

HilbertSeries qt_binomial(int m, int k, const FieldPtr& field) {
    if (k < 0 || k > m) throw Error("qt_binomial: need 0 <= k <= m");
    const std::uint64_t q = field->q();
    UPolyZ num = {1}, den = {1};
    for (int i = 0; i < k; ++i) {
        num = upoly_mul(num, one_minus_t_pow(ipow(q, m) - ipow(q, i)));
        den = upoly_mul(den, one_minus_t_pow(ipow(q, k) - ipow(q, i)));
    }
    UPolyZ quot = upoly_div(std::move(num), den);
    HilbertSeries h;
    for (std::size_t d = 0; d < quot.size(); ++d) {
        if (quot[d] < 0) throw NonPolynomialResult("negative coefficient in (q,t)-binomial");
        if (quot[d] != 0) h.coefficients[d] = quot[d];
    }
    return h;
}

HilbertSeries lrs_series(int n, int m, const FieldPtr& field) {
    const std::uint64_t q = field->q();
    HilbertSeries total;
    for (int k = 0; k <= std::min(n, m); ++k) {
        std::uint64_t shift = static_cast<std::uint64_t>(n - k) * (ipow(q, m) - ipow(q, k));
        HilbertSeries b = qt_binomial(m, k, field);
        for (const auto& [d, c] : b.coefficients) total.coefficients[d + shift] += c;
    }
    std::erase_if(total.coefficients, [](const auto& kv) { return kv.second == 0; });
    return total;
}

HilbertSeries span_hilbert(const std::vector<MultiPoly>& polys, const TruncationSpec& tspec) {
    const auto& field = tspec.field;
    // bucket degree components: degree -> list of (monomial -> coeff) rows
    std::map<std::uint64_t, std::vector<std::map<Monomial, FieldElement, GrlexLess>>> buckets;
    for (const auto& f : polys) {
        std::map<std::uint64_t, std::map<Monomial, FieldElement, GrlexLess>> comps;
        MultiPoly tf = truncate(f, tspec);
        for (const auto& [mo, c] : tf.terms()) comps[mo.degree()][mo] = c;
        for (auto& [d, comp] : comps) buckets[d].push_back(std::move(comp));
    }
    HilbertSeries h;
    for (auto& [d, comp_rows] : buckets) {
        // index the monomials appearing in this degree
        std::map<Monomial, std::size_t, GrlexLess> col_of;
        for (const auto& row : comp_rows)
            for (const auto& [mo, c] : row) col_of.emplace(mo, 0);
        std::size_t nc = 0;
        for (auto& [mo, idx] : col_of) idx = nc++;
        std::vector<std::vector<FieldElement>> rows;
        for (const auto& row : comp_rows) {
            std::vector<FieldElement> r(nc, field->zero());
            for (const auto& [mo, c] : row) r[col_of[mo]] = c;
            rows.push_back(std::move(r));
        }
        std::size_t rk = rank_of(std::move(rows), nc, field);
        if (rk) h.coefficients[d] = static_cast<long long>(rk);
    }
    return h;
}

FamilySpec family_from_json(const std::string& json_text, const FieldPtr& field) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    FamilySpec fam;
    for (const auto& e : j.at("entries")) {
        FamilyEntry entry;
        entry.s = e.at("s").get<int>();
        if (entry.s < 0 || entry.s > 3) throw ParseError("family entry s must be 0..3");
        for (const auto& ptext : e.at("polys"))
            entry.polys.push_back(parse_poly(ptext.get<std::string>(), field,
                                             std::max(entry.s, 1)));
        fam.entries.push_back(std::move(entry));
    }
    return fam;
}

std::vector<MultiPoly> basis_candidate(const FamilySpec& family, const TruncationSpec& tspec) {
    if (tspec.n != 4) throw Error("basis_candidate: tspec.n must be 4");
    std::vector<MultiPoly> out;
    for (const auto& entry : family.entries) {
        for (const auto& f : entry.polys) {
            for (int i = entry.s; i < f.nvars(); ++i)
                for (const auto& [mo, c] : f.terms())
                    if (mo.exp(i) != 0)
                        throw BadVariableSupport("family polynomial uses x" + std::to_string(i + 1) +
                                                 " beyond its declared s");
            DeltaResult d = delta(4 - entry.s, tspec.m, f.with_nvars(4), tspec, /*reduce=*/true);
            if (d.mode != DeltaMode::exact)
                throw FractionalDelta("basis_candidate: delta_" + std::to_string(4 - entry.s) +
                                      " not exact on a family polynomial");
            out.push_back(d.value);
        }
    }
    return out;
}

} // namespace dc
