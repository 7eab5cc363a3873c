#pragma once

// Validated reduced lex bases of zero-dimensional ideals in R[x, y]
// (lex order with y > x throughout).
//
// Such a basis is (g_0, ..., g_s) with initial terms x^{m_i} y^{n_i} walking
// down a staircase: m_0 = 0 < m_1 < ... < m_s and n_0 > ... > n_s = 0, every
// non-initial monomial inside the staircase region T.  Structurally, the top
// y-row M_i of g_i is monic of degree m_i, M_{i-1} divides M_i (quotient
// D_i), and M_i divides g_i row by row, with cofactor G_i = g_i / M_i.
//
// CellBasis checks all of this once at construction (throwing basis_error
// with a specific message otherwise) and owns the precomputed M_i, D_i, G_i
// together with the radix chain D_1, ..., D_s used by the fast reducer.

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mixed_radix.hpp"
#include "poly.hpp"
#include "segment.hpp"

namespace bivar {

template <typename R>
struct CellBasis {
    InitialSegment seg;
    std::vector<BiPoly<R>> g;  // sorted by decreasing y-degree; size s+1
    std::vector<UniPoly<R>> M; // M[i] = top row of g[i], monic, degree m_i
    std::vector<UniPoly<R>> D; // D[i] = M[i]/M[i-1] for 1 <= i <= s; D[0] = 1
    std::vector<BiPoly<R>> G;  // G[i] = g[i]/M[i] rowwise
    RadixBasis<R> radix;       // radices[idx] = D[idx+1]

    int s() const { return seg.s(); }

    // D_{i+1} * ... * D_s
    const UniPoly<R>& suffix_product(const R& K, int i) const {
        return radix.range_product(K, i, s());
    }

    // Cofactor G_i reduced mod D_{i+1}...D_{i+l_i}, the divisor used by the
    // i-th partial reduction step (1 <= i <= s-1).
    const BiPoly<R>& reduced_cofactor(const R& K, int i) const {
        auto it = reduced_cofactors.find(i);
        if (it != reduced_cofactors.end())
            return it->second;
        const int l = std::min(1 << val2(i), s() - i);
        BiPoly<R> r = bi_rem_x(K, G[i], radix.range_product(K, i, i + l));
        return reduced_cofactors.emplace(i, std::move(r)).first->second;
    }

  private:
    mutable std::map<int, BiPoly<R>> reduced_cofactors;
};

template <typename R>
CellBasis<R> make_cell_basis(const R& K, std::vector<BiPoly<R>> elems) {
    if (elems.empty())
        throw basis_error("basis: no elements");
    // initial terms (top y-row must be monic with degree = the x-part of the
    // initial term)
    for (auto& f : elems) {
        bi_trim(K, f);
        if (bi_is_zero(f))
            throw basis_error("basis: zero element");
        const UniPoly<R>& top = f.rows.back();
        if (!K.equal(top.c.back(), K.one()))
            throw basis_error("basis: element with initial term coefficient != 1: " +
                              K.to_text(top.c.back()));
    }
    std::sort(elems.begin(), elems.end(), [](const BiPoly<R>& a, const BiPoly<R>& b) {
        if (a.rows.size() != b.rows.size())
            return a.rows.size() > b.rows.size();
        return uni_deg(a.rows.back()) < uni_deg(b.rows.back());
    });
    std::vector<std::pair<int, int>> corners;
    for (const auto& f : elems)
        corners.emplace_back(uni_deg(f.rows.back()), bi_deg_y(f));
    InitialSegment seg;
    try {
        seg = segment_from_generators(corners);
    } catch (const error& e) {
        throw basis_error(std::string("basis: initial terms do not form a staircase: ") +
                          e.what());
    }
    if ((int)elems.size() != seg.s() + 1)
        throw basis_error("basis: duplicate initial terms");

    CellBasis<R> B;
    B.seg = seg;
    B.g = std::move(elems);
    for (int i = 0; i <= seg.s(); ++i) {
        // everything but the initial monomial must sit inside the staircase
        BiPoly<R> tail = bi_sub(K, B.g[i], bi_monomial(K, K.one(), seg.m(i), seg.n(i)));
        if (!bi_supported_on(K, tail, seg))
            throw basis_error("basis: element " + std::to_string(i) +
                              " is not reduced (monomials outside the staircase)");
    }
    for (int i = 0; i <= seg.s(); ++i)
        B.M.push_back(B.g[i].rows.back());
    B.D.push_back(uni_one(K));
    for (int i = 1; i <= seg.s(); ++i) {
        try {
            B.D.push_back(uni_exact_div(K, B.M[i], B.M[i - 1]));
        } catch (const error&) {
            throw basis_error("basis: top row of element " + std::to_string(i - 1) +
                              " does not divide the next top row");
        }
    }
    for (int i = 0; i <= seg.s(); ++i) {
        try {
            B.G.push_back(bi_exact_div_x(K, B.g[i], B.M[i]));
        } catch (const error&) {
            throw basis_error("basis: top row of element " + std::to_string(i) +
                              " does not divide the element row by row");
        }
    }
    B.radix = make_radix_basis(K, std::vector<UniPoly<R>>(B.D.begin() + 1, B.D.end()));
    return B;
}

} // namespace bivar
