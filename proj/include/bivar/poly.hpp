#pragma once

// Dense polynomial arithmetic over a coefficient ring R (see rings.hpp).
//
// UniPoly<R>  — univariate in x, coefficient vector c with c[k] the x^k
//               coefficient, trailing zeros trimmed (zero poly has empty c).
// BiPoly<R>   — bivariate, rows[b] is the x-polynomial coefficient of y^b,
//               trailing zero rows trimmed.
//
// All operations are free functions taking the ring context first.  Results
// are always normalized.  Division helpers require a divisor whose leading
// coefficient is a unit (in practice always monic here) and never invert
// anything else, so they work unchanged over Z/p^k, truncated power series
// and jet rings.

#include <cassert>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "segment.hpp"

namespace bivar {

// ---------------------------------------------------------------- univariate

template <typename R>
struct UniPoly {
    std::vector<typename R::Elem> c;
};

template <typename R>
void uni_trim(const R& K, UniPoly<R>& p) {
    while (!p.c.empty() && K.is_zero(p.c.back()))
        p.c.pop_back();
}

template <typename R>
int uni_deg(const UniPoly<R>& p) {
    return (int)p.c.size() - 1; // -1 for zero
}

template <typename R>
bool uni_is_zero(const UniPoly<R>& p) {
    return p.c.empty();
}

template <typename R>
UniPoly<R> uni_zero(const R&) {
    return {};
}

template <typename R>
UniPoly<R> uni_constant(const R& K, typename R::Elem a) {
    UniPoly<R> p;
    if (!K.is_zero(a))
        p.c.push_back(std::move(a));
    return p;
}

template <typename R>
UniPoly<R> uni_one(const R& K) {
    return uni_constant(K, K.one());
}

template <typename R>
UniPoly<R> uni_monomial(const R& K, typename R::Elem a, int k) {
    UniPoly<R> p;
    if (K.is_zero(a))
        return p;
    p.c.assign(k, K.zero());
    p.c.push_back(std::move(a));
    return p;
}

template <typename R>
UniPoly<R> uni_x_power(const R& K, int k) {
    return uni_monomial(K, K.one(), k);
}

template <typename R>
typename R::Elem uni_coeff(const R& K, const UniPoly<R>& p, int k) {
    if (k < 0 || k >= (int)p.c.size())
        return K.zero();
    return p.c[k];
}

template <typename R>
bool uni_equal(const R& K, const UniPoly<R>& a, const UniPoly<R>& b) {
    if (a.c.size() != b.c.size())
        return false;
    for (size_t k = 0; k < a.c.size(); ++k)
        if (!K.equal(a.c[k], b.c[k]))
            return false;
    return true;
}

template <typename R>
UniPoly<R> uni_add(const R& K, const UniPoly<R>& a, const UniPoly<R>& b) {
    UniPoly<R> r;
    const size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        if (k >= a.c.size())
            r.c.push_back(b.c[k]);
        else if (k >= b.c.size())
            r.c.push_back(a.c[k]);
        else
            r.c.push_back(K.add(a.c[k], b.c[k]));
    }
    uni_trim(K, r);
    return r;
}

template <typename R>
UniPoly<R> uni_neg(const R& K, const UniPoly<R>& a) {
    UniPoly<R> r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c)
        r.c.push_back(K.neg(x));
    return r;
}

template <typename R>
UniPoly<R> uni_sub(const R& K, const UniPoly<R>& a, const UniPoly<R>& b) {
    UniPoly<R> r;
    const size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        if (k >= a.c.size())
            r.c.push_back(K.neg(b.c[k]));
        else if (k >= b.c.size())
            r.c.push_back(a.c[k]);
        else
            r.c.push_back(K.sub(a.c[k], b.c[k]));
    }
    uni_trim(K, r);
    return r;
}

template <typename R>
UniPoly<R> uni_scale(const R& K, const typename R::Elem& a, const UniPoly<R>& p) {
    UniPoly<R> r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c)
        r.c.push_back(K.mul(a, x));
    uni_trim(K, r);
    return r;
}

template <typename R>
UniPoly<R> uni_mul(const R& K, const UniPoly<R>& a, const UniPoly<R>& b) {
    if (uni_is_zero(a) || uni_is_zero(b))
        return {};
    UniPoly<R> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i]))
            continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    uni_trim(K, r);
    return r;
}

// multiply by x^k
template <typename R>
UniPoly<R> uni_shift(const R& K, const UniPoly<R>& p, int k) {
    if (uni_is_zero(p) || k == 0)
        return p;
    UniPoly<R> r;
    r.c.assign(k, K.zero());
    r.c.insert(r.c.end(), p.c.begin(), p.c.end());
    return r;
}

// keep coefficients of x^0 .. x^{k-1}
template <typename R>
UniPoly<R> uni_truncate(const R& K, const UniPoly<R>& p, int k) {
    UniPoly<R> r;
    r.c.assign(p.c.begin(), p.c.begin() + std::min((size_t)std::max(k, 0), p.c.size()));
    uni_trim(K, r);
    return r;
}

// Euclidean division by a divisor with unit leading coefficient.
template <typename R>
std::pair<UniPoly<R>, UniPoly<R>> uni_divrem(const R& K, const UniPoly<R>& f, const UniPoly<R>& g) {
    if (uni_is_zero(g))
        throw error("uni_divrem: division by zero");
    const int dg = uni_deg(g);
    if (!K.is_unit(g.c[dg]))
        throw error("uni_divrem: leading coefficient is not a unit");
    if (uni_deg(f) < dg)
        return {UniPoly<R>{}, f};
    const bool monic = K.equal(g.c[dg], K.one());
    typename R::Elem invlead = monic ? K.one() : K.invert(g.c[dg]);
    UniPoly<R> r = f;
    UniPoly<R> q;
    q.c.assign(uni_deg(f) - dg + 1, K.zero());
    for (int k = uni_deg(f); k >= dg; --k) {
        typename R::Elem c = r.c[k];
        if (K.is_zero(c))
            continue;
        if (!monic)
            c = K.mul(c, invlead);
        q.c[k - dg] = c;
        for (int j = 0; j < dg; ++j)
            r.c[k - dg + j] = K.sub(r.c[k - dg + j], K.mul(c, g.c[j]));
        r.c[k] = K.zero();
    }
    uni_trim(K, q);
    uni_trim(K, r);
    return {std::move(q), std::move(r)};
}

template <typename R>
UniPoly<R> uni_rem(const R& K, const UniPoly<R>& f, const UniPoly<R>& g) {
    return uni_divrem(K, f, g).second;
}

template <typename R>
UniPoly<R> uni_div(const R& K, const UniPoly<R>& f, const UniPoly<R>& g) {
    return uni_divrem(K, f, g).first;
}

template <typename R>
UniPoly<R> uni_exact_div(const R& K, const UniPoly<R>& f, const UniPoly<R>& g) {
    auto [q, r] = uni_divrem(K, f, g);
    if (!uni_is_zero(r))
        throw error("uni_exact_div: nonzero remainder");
    return q;
}

template <typename R>
UniPoly<R> uni_mulmod(const R& K, const UniPoly<R>& a, const UniPoly<R>& b, const UniPoly<R>& m) {
    return uni_rem(K, uni_mul(K, a, b), m);
}

template <typename R>
UniPoly<R> uni_product(const R& K, const std::vector<UniPoly<R>>& factors) {
    UniPoly<R> r = uni_one(K);
    for (const auto& f : factors)
        r = uni_mul(K, r, f);
    return r;
}

// map coefficients into another ring (precision changes, jets, projections)
template <typename RA, typename RB, typename F>
UniPoly<RB> uni_map(const RB& KB, const UniPoly<RA>& p, F&& fn) {
    UniPoly<RB> r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c)
        r.c.push_back(fn(x));
    uni_trim(KB, r);
    return r;
}

// ----------------------------------------------------------------- bivariate

template <typename R>
struct BiPoly {
    std::vector<UniPoly<R>> rows; // rows[b] = coefficient of y^b
};

template <typename R>
void bi_trim(const R& K, BiPoly<R>& f) {
    for (auto& row : f.rows)
        uni_trim(K, row);
    while (!f.rows.empty() && uni_is_zero(f.rows.back()))
        f.rows.pop_back();
}

template <typename R>
bool bi_is_zero(const BiPoly<R>& f) {
    return f.rows.empty();
}

template <typename R>
int bi_deg_y(const BiPoly<R>& f) {
    return (int)f.rows.size() - 1;
}

template <typename R>
int bi_deg_x(const BiPoly<R>& f) {
    int d = -1;
    for (const auto& row : f.rows)
        d = std::max(d, uni_deg(row));
    return d;
}

template <typename R>
BiPoly<R> bi_zero(const R&) {
    return {};
}

template <typename R>
BiPoly<R> bi_from_uni(const R&, UniPoly<R> p) {
    BiPoly<R> f;
    if (!uni_is_zero(p))
        f.rows.push_back(std::move(p));
    return f;
}

template <typename R>
BiPoly<R> bi_monomial(const R& K, typename R::Elem a, int xk, int yk) {
    BiPoly<R> f;
    if (K.is_zero(a))
        return f;
    f.rows.assign(yk, UniPoly<R>{});
    f.rows.push_back(uni_monomial(K, std::move(a), xk));
    return f;
}

template <typename R>
const UniPoly<R>& bi_row(const BiPoly<R>& f, int b) {
    static const UniPoly<R> zero_row{};
    if (b < 0 || b >= (int)f.rows.size())
        return zero_row;
    return f.rows[b];
}

template <typename R>
typename R::Elem bi_coeff(const R& K, const BiPoly<R>& f, int xk, int yk) {
    return uni_coeff(K, bi_row(f, yk), xk);
}

template <typename R>
void bi_set_coeff(const R& K, BiPoly<R>& f, int xk, int yk, typename R::Elem a) {
    if ((int)f.rows.size() <= yk)
        f.rows.resize(yk + 1);
    auto& row = f.rows[yk].c;
    if ((int)row.size() <= xk)
        row.resize(xk + 1, K.zero());
    row[xk] = std::move(a);
    bi_trim(K, f);
}

template <typename R>
bool bi_equal(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    if (a.rows.size() != b.rows.size())
        return false;
    for (size_t i = 0; i < a.rows.size(); ++i)
        if (!uni_equal(K, a.rows[i], b.rows[i]))
            return false;
    return true;
}

template <typename R>
BiPoly<R> bi_add(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> r;
    const size_t n = std::max(a.rows.size(), b.rows.size());
    r.rows.reserve(n);
    for (size_t i = 0; i < n; ++i)
        r.rows.push_back(uni_add(K, bi_row(a, (int)i), bi_row(b, (int)i)));
    bi_trim(K, r);
    return r;
}

template <typename R>
BiPoly<R> bi_sub(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> r;
    const size_t n = std::max(a.rows.size(), b.rows.size());
    r.rows.reserve(n);
    for (size_t i = 0; i < n; ++i)
        r.rows.push_back(uni_sub(K, bi_row(a, (int)i), bi_row(b, (int)i)));
    bi_trim(K, r);
    return r;
}

template <typename R>
BiPoly<R> bi_neg(const R& K, const BiPoly<R>& a) {
    BiPoly<R> r;
    r.rows.reserve(a.rows.size());
    for (const auto& row : a.rows)
        r.rows.push_back(uni_neg(K, row));
    return r;
}

// multiply by x^k
template <typename R>
BiPoly<R> bi_shift_x(const R& K, const BiPoly<R>& f, int k) {
    BiPoly<R> r;
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        r.rows.push_back(uni_shift(K, row, k));
    return r;
}

// multiply by y^k
template <typename R>
BiPoly<R> bi_shift_y(const R&, const BiPoly<R>& f, int k) {
    if (bi_is_zero(f))
        return f;
    BiPoly<R> r;
    r.rows.assign(k, UniPoly<R>{});
    r.rows.insert(r.rows.end(), f.rows.begin(), f.rows.end());
    return r;
}

// keep only the rows of y-degree < ylim
template <typename R>
BiPoly<R> bi_truncate_y(const R& K, const BiPoly<R>& f, int ylim) {
    BiPoly<R> r;
    const int stop = std::min<int>(ylim, (int)f.rows.size());
    r.rows.assign(f.rows.begin(), f.rows.begin() + std::max(stop, 0));
    bi_trim(K, r);
    return r;
}

// multiply every row by the univariate u
template <typename R>
BiPoly<R> bi_mul_uni(const R& K, const BiPoly<R>& f, const UniPoly<R>& u) {
    BiPoly<R> r;
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        r.rows.push_back(uni_mul(K, row, u));
    bi_trim(K, r);
    return r;
}

template <typename R>
BiPoly<R> bi_scale(const R& K, const typename R::Elem& a, const BiPoly<R>& f) {
    BiPoly<R> r;
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        r.rows.push_back(uni_scale(K, a, row));
    bi_trim(K, r);
    return r;
}

// every row reduced / divided by the univariate m (unit leading coefficient)
template <typename R>
BiPoly<R> bi_rem_x(const R& K, const BiPoly<R>& f, const UniPoly<R>& m) {
    BiPoly<R> r;
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        r.rows.push_back(uni_rem(K, row, m));
    bi_trim(K, r);
    return r;
}

template <typename R>
std::pair<BiPoly<R>, BiPoly<R>> bi_divrem_x(const R& K, const BiPoly<R>& f, const UniPoly<R>& m) {
    BiPoly<R> q, r;
    q.rows.reserve(f.rows.size());
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows) {
        auto [qq, rr] = uni_divrem(K, row, m);
        q.rows.push_back(std::move(qq));
        r.rows.push_back(std::move(rr));
    }
    bi_trim(K, q);
    bi_trim(K, r);
    return {std::move(q), std::move(r)};
}

template <typename R>
BiPoly<R> bi_div_x(const R& K, const BiPoly<R>& f, const UniPoly<R>& m) {
    return bi_divrem_x(K, f, m).first;
}

template <typename R>
BiPoly<R> bi_exact_div_x(const R& K, const BiPoly<R>& f, const UniPoly<R>& m) {
    auto [q, r] = bi_divrem_x(K, f, m);
    if (!bi_is_zero(r))
        throw error("bi_exact_div_x: nonzero remainder");
    return q;
}

template <typename RA, typename RB, typename F>
BiPoly<RB> bi_map(const RB& KB, const BiPoly<RA>& f, F&& fn) {
    BiPoly<RB> r;
    r.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        r.rows.push_back(uni_map<RA, RB>(KB, row, fn));
    bi_trim(KB, r);
    return r;
}

// true if every nonzero coefficient (a, b) of f lies in T
template <typename R>
bool bi_supported_on(const R& K, const BiPoly<R>& f, const InitialSegment& t) {
    for (int b = 0; b <= bi_deg_y(f); ++b)
        for (int a = 0; a <= uni_deg(f.rows[b]); ++a)
            if (!K.is_zero(f.rows[b].c[a]) && !t.contains(a, b))
                return false;
    return true;
}

template <typename R>
bool bi_supported_in_box(const R& K, const BiPoly<R>& f, int xlim, int ylim) {
    for (int b = 0; b <= bi_deg_y(f); ++b)
        for (int a = 0; a <= uni_deg(f.rows[b]); ++a)
            if (!K.is_zero(f.rows[b].c[a]) && (a >= xlim || b >= ylim))
                return false;
    return true;
}

// -------------------------------------------------- division with respect to y
//
// Division in (R[x]/(m))[y]: f = q*g + r mod m with deg_y(r) < deg_y(g).
// The divisor g must have a unit constant as its top y-row (in practice the
// constant 1); m must have a unit leading coefficient.  All rows of q and r
// come out reduced mod m.

template <typename R>
std::pair<BiPoly<R>, BiPoly<R>> divrem_y_mod(const R& K, const BiPoly<R>& f, const BiPoly<R>& g,
                                             const UniPoly<R>& m) {
    if (bi_is_zero(g))
        throw error("divrem_y_mod: division by zero");
    const int e = bi_deg_y(g);
    const UniPoly<R>& lead = g.rows[e];
    if (uni_deg(lead) != 0 || !K.is_unit(lead.c[0]))
        throw error("divrem_y_mod: top y-row of divisor must be a unit constant");
    const bool monic = K.equal(lead.c[0], K.one());
    typename R::Elem invlead = monic ? K.one() : K.invert(lead.c[0]);

    BiPoly<R> work;
    work.rows.reserve(f.rows.size());
    for (const auto& row : f.rows)
        work.rows.push_back(uni_rem(K, row, m));

    BiPoly<R> q;
    const int df = (int)work.rows.size() - 1;
    if (df >= e)
        q.rows.assign(df - e + 1, UniPoly<R>{});
    for (int k = df; k >= e; --k) {
        UniPoly<R> c = work.rows[k];
        if (uni_is_zero(c))
            continue;
        if (!monic)
            c = uni_scale(K, invlead, c);
        for (int j = 0; j < e; ++j)
            work.rows[k - e + j] =
                uni_rem(K, uni_sub(K, work.rows[k - e + j], uni_mul(K, c, g.rows[j])), m);
        work.rows[k] = UniPoly<R>{};
        q.rows[k - e] = std::move(c);
    }
    BiPoly<R> r;
    if (!work.rows.empty())
        r.rows.assign(work.rows.begin(), work.rows.begin() + std::min((size_t)e, work.rows.size()));
    bi_trim(K, q);
    bi_trim(K, r);
    return {std::move(q), std::move(r)};
}

// ------------------------------------------------------ Kronecker substitution
//
// Exact bivariate product through one univariate product: substitute
// y = x^stride with stride = 2*max(deg_x a, deg_x b) + 1, so distinct (a, b)
// monomials of the product land on distinct x-powers.

template <typename R>
BiPoly<R> kronecker_multiply(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    if (bi_is_zero(a) || bi_is_zero(b))
        return {};
    const int stride = 2 * std::max(bi_deg_x(a), bi_deg_x(b)) + 1;
    auto pack = [&](const BiPoly<R>& f) {
        UniPoly<R> u;
        u.c.assign((size_t)stride * f.rows.size(), K.zero());
        for (size_t yk = 0; yk < f.rows.size(); ++yk)
            for (size_t xk = 0; xk < f.rows[yk].c.size(); ++xk)
                u.c[yk * stride + xk] = f.rows[yk].c[xk];
        uni_trim(K, u);
        return u;
    };
    UniPoly<R> prod = uni_mul(K, pack(a), pack(b));
    BiPoly<R> r;
    r.rows.assign(bi_deg_y(a) + bi_deg_y(b) + 1, UniPoly<R>{});
    for (size_t k = 0; k < prod.c.size(); ++k) {
        if (K.is_zero(prod.c[k]))
            continue;
        const int yk = (int)(k / stride), xk = (int)(k % stride);
        auto& row = r.rows[yk].c;
        if ((int)row.size() <= xk)
            row.resize(xk + 1, K.zero());
        row[xk] = prod.c[k];
    }
    bi_trim(K, r);
    return r;
}

// ------------------------------------------------------- segment-aware product
//
// Exact product a*b where supp(a) fits in the box {0..ax-1} x {0..ay-1} and
// supp(b) lies in the initial segment t.  b is split into the column blocks
// cut out by the shell of t; each block is a modest rectangle, so the
// Kronecker products stay balanced even when t is very wide and flat or tall
// and thin.  The blocks sum back to b, so the result equals the plain
// product.

template <typename R>
BiPoly<R> multiply_segment(const R& K, const BiPoly<R>& a, int ax, int ay, const BiPoly<R>& b,
                           const InitialSegment& t) {
    if (!bi_supported_in_box(K, a, ax, ay))
        throw error("multiply_segment: left factor outside its stated box");
    if (!bi_supported_on(K, b, t))
        throw error("multiply_segment: right factor not supported on the segment");
    if (bi_is_zero(a) || bi_is_zero(b))
        return {};
    const InitialSegment sh = shell(t);
    BiPoly<R> result;
    for (int j = 0; j + 1 <= sh.s(); ++j) {
        const int x0 = sh.m(j), x1 = sh.m(j + 1);
        BiPoly<R> block;
        block.rows.reserve(b.rows.size());
        for (const auto& row : b.rows) {
            UniPoly<R> piece;
            for (int xk = x0; xk < x1 && xk <= uni_deg(row); ++xk)
                piece.c.push_back(row.c[xk]);
            uni_trim(K, piece);
            block.rows.push_back(std::move(piece));
        }
        bi_trim(K, block);
        if (bi_is_zero(block))
            continue;
        BiPoly<R> prod = kronecker_multiply(K, a, block);
        result = bi_add(K, result, bi_shift_x(K, prod, x0));
    }
    return result;
}

} // namespace bivar
