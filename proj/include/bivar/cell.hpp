#pragma once

// Parametrization of the lex Gröbner cell of a staircase: the bases whose
// initial terms realize a fixed staircase E form an affine space, and this
// module converts between a point of that space (a flat coefficient vector)
// and the reduced basis itself, in both directions, over any coefficient
// ring of the library.
//
// The coordinates are the coefficients of a triangular family of small
// polynomials sigma_{j,i} (0 <= i < j <= s, deg_y < e_j, deg_x < d_{i+1})
// plus, in the full cell, one univariate sigma_{i,i} of degree < d_{i+1} per
// column block.  They enter through the intermediate "h-basis"
//
//   h_s = M_s,   h_i = ( y^{e_{i+1}} h_{i+1} + sum_{j>i} sigma_{j,i} h_j ) / D_{i+1}
//
// with D_i = x^{d_i} - sigma_{i-1,i-1} and M_i = D_1 ... D_i; the reduced
// basis is recovered from the h-basis by normal-form reduction against the
// translated staircases.  The punctual cell (ideals supported at the origin)
// fixes sigma_{i,i} = 0 and forces x | sigma_{i+1,i}, which removes the
// corresponding coordinates.
//
// Flat layout of the coefficient vector (frozen; files and jet variable
// indices both rely on it): for i = 0, ..., s-1:
//   [full cell only]  sigma_{i,i}: coefficients of x^l, l = 0, ..., d_{i+1}-1
//   for j = i+1, ..., s:
//     for m = e_j - 1 down to 0:
//       for l = 0, ..., d_{i+1}-1:         (punctual: skip l = 0 when j = i+1)
//         coefficient of x^l y^m in sigma_{j,i}
// Slot counts: delta + m_s (full), delta - n_0 (punctual).

#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "reduce.hpp"
#include "segment.hpp"

namespace bivar {

enum class CellMode { full, punctual };

inline const char* cell_mode_name(CellMode m) {
    return m == CellMode::full ? "full" : "punctual";
}

struct ParamSlot {
    int i;    // column block
    int j;    // row block; j == i marks the univariate diagonal sigma_{i,i}
    int ypow; // 0 for diagonal slots
    int xpow;
};

inline std::vector<ParamSlot> parameter_slots(const InitialSegment& t, CellMode mode) {
    std::vector<ParamSlot> slots;
    for (int i = 0; i < t.s(); ++i) {
        if (mode == CellMode::full)
            for (int l = 0; l < t.d(i + 1); ++l)
                slots.push_back({i, i, 0, l});
        for (int j = i + 1; j <= t.s(); ++j)
            for (int m = t.e(j) - 1; m >= 0; --m)
                for (int l = 0; l < t.d(i + 1); ++l) {
                    if (mode == CellMode::punctual && j == i + 1 && l == 0)
                        continue;
                    slots.push_back({i, j, m, l});
                }
    }
    return slots;
}

template <typename R>
struct CellParameters {
    CellMode mode = CellMode::full;
    InitialSegment seg;
    std::vector<typename R::Elem> lambda; // one entry per parameter_slots() slot
};

namespace detail {

// sigma matrices <-> flat vector

template <typename R>
struct SigmaFamily {
    std::vector<UniPoly<R>> diag;         // diag[i] = sigma_{i,i}, i = 0..s-1
    std::vector<std::vector<BiPoly<R>>> off; // off[j][i] = sigma_{j,i}, j > i
};

template <typename R>
SigmaFamily<R> sigma_from_lambda(const R& K, const CellParameters<R>& P) {
    const InitialSegment& t = P.seg;
    const auto slots = parameter_slots(t, P.mode);
    if (slots.size() != P.lambda.size())
        throw error("cell parameters: expected " + std::to_string(slots.size()) +
                    " coordinates, got " + std::to_string(P.lambda.size()));
    SigmaFamily<R> S;
    S.diag.assign(t.s(), UniPoly<R>{});
    S.off.assign(t.s() + 1, std::vector<BiPoly<R>>(t.s() + 1));
    for (size_t k = 0; k < slots.size(); ++k) {
        const ParamSlot& sl = slots[k];
        if (K.is_zero(P.lambda[k]))
            continue;
        if (sl.j == sl.i) {
            UniPoly<R>& u = S.diag[sl.i];
            if ((int)u.c.size() <= sl.xpow)
                u.c.resize(sl.xpow + 1, K.zero());
            u.c[sl.xpow] = P.lambda[k];
        } else {
            bi_set_coeff(K, S.off[sl.j][sl.i], sl.xpow, sl.ypow, P.lambda[k]);
        }
    }
    for (auto& u : S.diag)
        uni_trim(K, u);
    return S;
}

template <typename R>
std::vector<typename R::Elem> lambda_from_sigma(const R& K, const SigmaFamily<R>& S,
                                                const InitialSegment& t, CellMode mode) {
    std::vector<typename R::Elem> lambda;
    for (const ParamSlot& sl : parameter_slots(t, mode))
        lambda.push_back(sl.j == sl.i ? uni_coeff(K, S.diag[sl.i], sl.xpow)
                                      : bi_coeff(K, S.off[sl.j][sl.i], sl.xpow, sl.ypow));
    return lambda;
}

} // namespace detail

// Point of the cell -> reduced basis with staircase P.seg.  Works over any
// coefficient ring (the construction divides only by monic polynomials).
template <typename R>
std::vector<BiPoly<R>> basis_from_parameters(const R& K, const CellParameters<R>& P) {
    const InitialSegment& t = P.seg;
    const int s = t.s();
    detail::SigmaFamily<R> S = detail::sigma_from_lambda(K, P);

    // radix chain and its prefix products
    std::vector<UniPoly<R>> D(s + 1), M(s + 1);
    D[0] = uni_one(K);
    M[0] = uni_one(K);
    for (int i = 1; i <= s; ++i) {
        D[i] = uni_sub(K, uni_x_power(K, t.d(i)), S.diag[i - 1]);
        M[i] = uni_mul(K, M[i - 1], D[i]);
    }

    // triangular h-basis, top down
    std::vector<BiPoly<R>> h(s + 1);
    h[s] = bi_from_uni(K, M[s]);
    for (int i = s - 1; i >= 0; --i) {
        BiPoly<R> acc = bi_shift_y(K, h[i + 1], t.e(i + 1));
        for (int j = i + 1; j <= s; ++j)
            if (!bi_is_zero(S.off[j][i]))
                acc = bi_add(K, acc, kronecker_multiply(K, S.off[j][i], h[j]));
        h[i] = bi_exact_div_x(K, acc, D[i + 1]);
    }

    // inter-reduce: fold the part of h_i that leaves the staircase box back
    // through the already-reduced elements below it
    std::vector<BiPoly<R>> g(s + 1);
    g[s] = h[s];
    for (int i = s - 1; i >= 0; --i) {
        auto [A, B] = bi_divrem_x(K, h[i], M[i + 1]);
        if (bi_is_zero(A)) {
            g[i] = std::move(B);
            continue;
        }
        std::vector<BiPoly<R>> translated;
        for (int j = i + 1; j <= s; ++j)
            translated.push_back(bi_exact_div_x(K, g[j], M[i + 1]));
        CellBasis<R> Bt = make_cell_basis(K, std::move(translated));
        BiPoly<R> Abar = reduce_general(K, A, Bt);
        g[i] = bi_add(K, bi_mul_uni(K, Abar, M[i + 1]), B);
    }
    return g;
}

// Reduced basis -> point of the cell.  In punctual mode the basis must
// actually lie in the punctual cell (pure-power top rows and x dividing
// every sigma_{i+1,i}); a basis_error reports a violation.
template <typename R>
CellParameters<R> parameters_from_basis(const R& K, const CellBasis<R>& B, CellMode mode) {
    const InitialSegment& t = B.seg;
    const int s = t.s();

    detail::SigmaFamily<R> S;
    S.diag.assign(s, UniPoly<R>{});
    S.off.assign(s + 1, std::vector<BiPoly<R>>(s + 1));
    for (int i = 1; i <= s; ++i) {
        UniPoly<R> sigma = uni_sub(K, uni_x_power(K, t.d(i)), B.D[i]);
        if (mode == CellMode::punctual) {
            if (!uni_is_zero(sigma))
                throw basis_error("basis is not punctual: top row quotient " +
                                  std::to_string(i) + " is not a pure power of x");
        } else {
            S.diag[i - 1] = std::move(sigma);
        }
    }

    // Peel the h-basis cofactors H_j = h_j / M_j off the reduced cofactors
    // G_i = g_i / M_i, from the bottom of the staircase up.  Everything is
    // done modulo P_i = D_{i+1} ... D_s, which is where the cofactors are
    // determined; the inter-reduction debris is a multiple of D_{i+1} inside
    // each quotient and the div/rem pair below discards it.
    std::vector<BiPoly<R>> H(s + 1);
    H[s] = bi_from_uni(K, uni_one(K));
    for (int i = s - 1; i >= 0; --i) {
        const UniPoly<R>& P = B.radix.range_product(K, i, s);
        BiPoly<R> Abar =
            bi_rem_x(K, bi_sub(K, B.G[i], bi_shift_y(K, H[i + 1], t.e(i + 1))), P);
        H[i] = bi_shift_y(K, H[i + 1], t.e(i + 1));
        for (int j = i + 1; j <= s; ++j) {
            BiPoly<R> Hbar = bi_rem_x(K, H[j], P);
            auto [Q, rest] = divrem_y_mod(K, Abar, Hbar, P);
            Abar = std::move(rest);
            BiPoly<R> sigma =
                bi_rem_x(K, bi_div_x(K, Q, B.radix.range_product(K, i + 1, j)), B.D[i + 1]);
            if (mode == CellMode::punctual && j == i + 1) {
                for (int m = 0; m <= bi_deg_y(sigma); ++m)
                    if (!K.is_zero(uni_coeff(K, sigma.rows[m], 0)))
                        throw basis_error(
                            "basis is not punctual: sigma_(" + std::to_string(j) + "," +
                            std::to_string(i) + ") has a nonzero constant column");
            }
            if (!bi_is_zero(sigma))
                H[i] = bi_add(K, H[i],
                              kronecker_multiply(
                                  K, sigma, bi_mul_uni(K, H[j], B.radix.range_product(K, i + 1, j))));
            S.off[j][i] = std::move(sigma);
        }
    }

    CellParameters<R> out;
    out.mode = mode;
    out.seg = t;
    out.lambda = detail::lambda_from_sigma(K, S, t, mode);

    // Over a field every reduced basis with this staircase lies in the full
    // chart, but over Z/p^k or k[t]/(t^k) the chart is not surjective: a
    // basis-shaped tuple may fail the chart's coefficient relations on slots
    // the peeling discards.  Rebuild and compare so such inputs are rejected
    // instead of mapped to a non-inverting point.
    std::vector<BiPoly<R>> rebuilt = basis_from_parameters(K, out);
    for (int i = 0; i <= s; ++i)
        if (!bi_equal(K, rebuilt[i], B.g[i]))
            throw basis_error("basis does not satisfy the " +
                              std::string(cell_mode_name(mode)) +
                              " chart relations over this ring (element " + std::to_string(i) +
                              ")");
    return out;
}

} // namespace bivar
