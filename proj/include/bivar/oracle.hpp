#pragma once

// Reference implementations: short, obviously-correct routines used to
// cross-check the fast ones (and to bootstrap a basis from raw generators).
// Nothing here is meant to be quick.

#include <utility>
#include <vector>

#include "basis.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "segment.hpp"

namespace bivar {

// Schoolbook product, term by term.  Deliberately shares no code with
// kronecker_multiply / multiply_segment.
template <typename R>
BiPoly<R> naive_multiply(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    if (bi_is_zero(a) || bi_is_zero(b))
        return BiPoly<R>{};
    BiPoly<R> r;
    r.rows.assign(bi_deg_y(a) + bi_deg_y(b) + 1, UniPoly<R>{});
    for (auto& row : r.rows)
        row.c.assign(bi_deg_x(a) + bi_deg_x(b) + 1, K.zero());
    for (int by = 0; by <= bi_deg_y(a); ++by)
        for (int ax = 0; ax <= uni_deg(a.rows[by]); ++ax) {
            if (K.is_zero(a.rows[by].c[ax]))
                continue;
            for (int cy = 0; cy <= bi_deg_y(b); ++cy)
                for (int cx = 0; cx <= uni_deg(b.rows[cy]); ++cx)
                    r.rows[by + cy].c[ax + cx] = K.add(
                        r.rows[by + cy].c[ax + cx], K.mul(a.rows[by].c[ax], b.rows[cy].c[cx]));
        }
    bi_trim(K, r);
    return r;
}

// lex initial term (x-degree, y-degree) of a nonzero polynomial, y > x
template <typename R>
std::pair<int, int> lex_lt(const BiPoly<R>& f) {
    if (bi_is_zero(f))
        throw error("lex_lt: zero polynomial");
    return {uni_deg(f.rows.back()), bi_deg_y(f)};
}

template <typename R>
struct NaiveReduction {
    BiPoly<R> remainder;
    std::vector<BiPoly<R>> quotients; // one per basis element, all materialized
};

// Term-at-a-time division by a staircase basis: repeatedly cancel the
// lex-largest monomial outside the staircase with the first element whose
// initial term divides it.  Initial coefficients are 1, so this works over
// every coefficient ring.
template <typename R>
NaiveReduction<R> naive_reduce(const R& K, const BiPoly<R>& f, const std::vector<BiPoly<R>>& g,
                               const InitialSegment& t) {
    NaiveReduction<R> out;
    out.remainder = f;
    bi_trim(K, out.remainder);
    out.quotients.assign(g.size(), BiPoly<R>{});
    for (;;) {
        // lex-largest monomial of the remainder outside T ("outside" is
        // upward closed in the x-degree, so a row scan can stop at the first
        // monomial inside)
        int a = -1, b = -1;
        const auto& rows = out.remainder.rows;
        for (int y = (int)rows.size() - 1; y >= 0 && a < 0; --y)
            for (int x = uni_deg(rows[y]); x >= 0; --x) {
                if (K.is_zero(rows[y].c[x]))
                    continue;
                if (t.contains(x, y))
                    break;
                a = x;
                b = y;
                break;
            }
        if (a < 0)
            break;
        int i = 0;
        while (i < (int)g.size() && !(a >= t.m(i) && b >= t.n(i)))
            ++i;
        if (i == (int)g.size())
            throw basis_error("naive_reduce: monomial outside T not under any initial term");
        const typename R::Elem c = out.remainder.rows[b].c[a];
        BiPoly<R> shifted = bi_shift_y(K, bi_shift_x(K, bi_scale(K, c, g[i]), a - t.m(i)), b - t.n(i));
        out.remainder = bi_sub(K, out.remainder, shifted);
        BiPoly<R> q = bi_monomial(K, c, a - t.m(i), b - t.n(i));
        out.quotients[i] = bi_add(K, out.quotients[i], q);
    }
    return out;
}

template <typename R>
NaiveReduction<R> naive_reduce(const R& K, const BiPoly<R>& f, const CellBasis<R>& B) {
    return naive_reduce(K, f, B.g, B.seg);
}

// Full normal form with respect to an arbitrary list of nonzero polynomials
// with unit leading coefficients (no staircase assumed): cancel the
// lex-largest monomial divisible by some initial term, repeat.
template <typename R>
BiPoly<R> lex_reduce(const R& K, const BiPoly<R>& f, const std::vector<BiPoly<R>>& gens) {
    std::vector<std::pair<int, int>> lt;
    std::vector<BiPoly<R>> monic;
    lt.reserve(gens.size());
    for (const auto& g : gens) {
        lt.push_back(lex_lt(g));
        const auto& lead = g.rows.back().c.back();
        monic.push_back(K.equal(lead, K.one()) ? g : bi_scale(K, K.invert(lead), g));
    }
    BiPoly<R> r = f;
    bi_trim(K, r);
    for (;;) {
        int a = -1, b = -1, which = -1;
        for (int y = (int)r.rows.size() - 1; y >= 0 && which < 0; --y)
            for (int x = uni_deg(r.rows[y]); x >= 0 && which < 0; --x) {
                if (K.is_zero(r.rows[y].c[x]))
                    continue;
                for (int i = 0; i < (int)monic.size(); ++i)
                    if (x >= lt[i].first && y >= lt[i].second) {
                        a = x;
                        b = y;
                        which = i;
                        break;
                    }
            }
        if (which < 0)
            return r;
        const typename R::Elem c = r.rows[b].c[a];
        BiPoly<R> shifted = bi_shift_y(
            K, bi_shift_x(K, bi_scale(K, c, monic[which]), a - lt[which].first), b - lt[which].second);
        r = bi_sub(K, r, shifted);
    }
}

// Buchberger's algorithm over a field, product criterion only.  Returns the
// reduced basis, monic, sorted by decreasing lex initial term, and insists
// the ideal is zero-dimensional (a pure power of each variable among the
// initial terms).
template <typename R>
std::vector<BiPoly<R>> buchberger(const R& K, const std::vector<BiPoly<R>>& gens) {
    std::vector<BiPoly<R>> basis;
    for (auto g : gens) {
        bi_trim(K, g);
        if (bi_is_zero(g))
            continue;
        basis.push_back(bi_scale(K, K.invert(g.rows.back().c.back()), g));
    }
    if (basis.empty())
        throw basis_error("buchberger: no nonzero generators");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < (int)basis.size(); ++i)
        for (int j = i + 1; j < (int)basis.size(); ++j)
            pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        auto [ai, bi] = lex_lt(basis[i]);
        auto [aj, bj] = lex_lt(basis[j]);
        if ((ai == 0 || aj == 0) && (bi == 0 || bj == 0))
            continue; // coprime initial terms: s-polynomial reduces to zero
        const int la = std::max(ai, aj), lb = std::max(bi, bj);
        BiPoly<R> s = bi_sub(K, bi_shift_y(K, bi_shift_x(K, basis[i], la - ai), lb - bi),
                             bi_shift_y(K, bi_shift_x(K, basis[j], la - aj), lb - bj));
        BiPoly<R> h = lex_reduce(K, s, basis);
        if (bi_is_zero(h))
            continue;
        h = bi_scale(K, K.invert(h.rows.back().c.back()), h);
        for (int k = 0; k < (int)basis.size(); ++k)
            pairs.emplace_back(k, (int)basis.size());
        basis.push_back(std::move(h));
    }

    // minimalize: drop elements whose initial term another one divides
    std::vector<BiPoly<R>> minimal;
    for (int i = 0; i < (int)basis.size(); ++i) {
        auto [a, b] = lex_lt(basis[i]);
        bool redundant = false;
        for (int j = 0; j < (int)basis.size() && !redundant; ++j) {
            if (j == i)
                continue;
            auto [c, d] = lex_lt(basis[j]);
            if (c <= a && d <= b && (c < a || d < b || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<BiPoly<R>> reduced;
    for (int i = 0; i < (int)minimal.size(); ++i) {
        std::vector<BiPoly<R>> others;
        for (int j = 0; j < (int)minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        BiPoly<R> h = others.empty() ? minimal[i] : lex_reduce(K, minimal[i], others);
        reduced.push_back(bi_scale(K, K.invert(h.rows.back().c.back()), h));
    }
    std::sort(reduced.begin(), reduced.end(), [](const BiPoly<R>& u, const BiPoly<R>& v) {
        auto lu = lex_lt(u), lv = lex_lt(v);
        if (lu.second != lv.second)
            return lu.second > lv.second;
        return lu.first > lv.first;
    });

    bool pure_x = false, pure_y = false;
    for (const auto& g : reduced) {
        auto [a, b] = lex_lt(g);
        if (b == 0)
            pure_x = true;
        if (a == 0)
            pure_y = true;
    }
    if (!pure_x || !pure_y)
        throw basis_error("buchberger: ideal is not zero-dimensional");
    return reduced;
}

} // namespace bivar
