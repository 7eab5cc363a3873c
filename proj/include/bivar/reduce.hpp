#pragma once

// Fast normal forms modulo a CellBasis.
//
// The staircase region between the initial terms is covered by a logarithmic
// family of dyadic rectangles (segment.hpp::paving).  Reduction visits the
// rectangles once each, in order i = 1, ..., s-1; step i clears rectangle i by
// a single short division followed by one structured multiplication, working
// on the mixed-radix decomposition of the input along the radix chain
// D_1, ..., D_s.  Total work stays quasi-linear in the cost of the paving
// instead of quadratic in the staircase size.
//
// reduce_balanced takes inputs already inside the bounding box
// deg_x < m_s, deg_y < n_0 and also reports the quotients it used;
// reduce_general accepts arbitrary input and first folds it into the box
// using the last and the first basis element.

#include <utility>
#include <vector>

#include "basis.hpp"
#include "errors.hpp"
#include "mixed_radix.hpp"
#include "poly.hpp"
#include "segment.hpp"

namespace bivar {

// Clears rectangle i (1 <= i <= s-1) of the paving from the mixed-radix parts
// (parts[k] is the coefficient of M_k = D_1...D_k, for k = 0, ..., s-1) and
// returns the quotient applied to basis element i.  The subtraction touches
// parts i, ..., s-1 only; rows of y-degree >= n_{i-h} (h = 2^{val2(i)}) are
// left untouched everywhere.
template <typename R>
BiPoly<R> partial_reduction(const R& K, std::vector<BiPoly<R>>& parts, int i,
                            const CellBasis<R>& B) {
    const InitialSegment& t = B.seg;
    const int s = t.s();
    const int h = 1 << val2(i);
    const int l = std::min(h, s - i);

    // assemble the slice of the input living over rectangle i
    std::vector<BiPoly<R>> window;
    window.reserve(l);
    for (int k = i; k < i + l; ++k)
        window.push_back(bi_truncate_y(K, parts[k], t.n(i - h)));
    BiPoly<R> f = from_mixed_radix(K, window, B.radix, i);

    const UniPoly<R>& P = B.radix.range_product(K, i, i + l);
    BiPoly<R> q = divrem_y_mod(K, f, B.reduced_cofactor(K, i), P).first;
    if (bi_is_zero(q))
        return q;

    // subtract q * g_i from the represented polynomial, folding the part of
    // the product that leaves the radix range back via the last element
    BiPoly<R> v = multiply_segment(K, q, t.m(i + l) - t.m(i), t.n(i - h) - t.n(i), B.G[i], t);
    v = bi_rem_x(K, v, B.suffix_product(K, i));
    std::vector<BiPoly<R>> correction = to_mixed_radix(K, v, B.radix, i, s);
    for (int k = i; k < s; ++k)
        parts[k] = bi_sub(K, parts[k], correction[k - i]);
    return q;
}

template <typename R>
struct BalancedReduction {
    BiPoly<R> remainder;
    // quotients[i] multiplies basis element i in the certificate
    //   input = remainder + sum_i quotients[i] * g_i  +  (untracked) * g_s.
    // Index 0 is always zero (balanced inputs have y-degree < n_0) and the
    // multiplier of the pure x-power g_s is not materialized.
    std::vector<BiPoly<R>> quotients;
};

// Normal form of f, requiring deg_x f < m_s and deg_y f < n_0.
template <typename R>
BalancedReduction<R> reduce_balanced(const R& K, const BiPoly<R>& f, const CellBasis<R>& B) {
    const InitialSegment& t = B.seg;
    const int s = t.s();
    if (!bi_supported_in_box(K, f, t.width(), t.height()))
        throw error("reduce_balanced: input exceeds the staircase bounding box");
    BalancedReduction<R> out;
    out.quotients.assign(s + 1, BiPoly<R>{});
    std::vector<BiPoly<R>> parts = to_mixed_radix(K, f, B.radix, 0, s);
    for (int i = 1; i < s; ++i)
        out.quotients[i] = partial_reduction(K, parts, i, B);
    out.remainder = from_mixed_radix(K, parts, B.radix, 0);
    return out;
}

// Normal form of an arbitrary f: fold x-degrees with the pure power M_s,
// y-degrees with the first element, then reduce the balanced core.
template <typename R>
BiPoly<R> reduce_general(const R& K, const BiPoly<R>& f, const CellBasis<R>& B) {
    BiPoly<R> f1 = bi_rem_x(K, f, B.M[B.s()]);
    BiPoly<R> f2 = divrem_y_mod(K, f1, B.g[0], B.M[B.s()]).second;
    return reduce_balanced(K, f2, B).remainder;
}

} // namespace bivar
