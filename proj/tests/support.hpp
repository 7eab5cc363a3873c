#pragma once

// Shared helpers for the test suite.

#include <catch_amalgamated.hpp>

#include <string>

#include "bivar/mixed_radix.hpp"
#include "bivar/poly_io.hpp"
#include "bivar/random_fixtures.hpp"

namespace ts {

using namespace bivar;

// parse shortcut
template <typename R>
BiPoly<R> P(const R& K, const std::string& text) {
    return parse_poly(K, text);
}

// reference quadratic-time product, independent of the library multipliers
template <typename R>
BiPoly<R> slow_mul(const R& K, const BiPoly<R>& a, const BiPoly<R>& b) {
    BiPoly<R> r;
    if (bi_is_zero(a) || bi_is_zero(b))
        return r;
    r.rows.assign(bi_deg_y(a) + bi_deg_y(b) + 1, UniPoly<R>{});
    for (auto& row : r.rows)
        row.c.assign(bi_deg_x(a) + bi_deg_x(b) + 1, K.zero());
    for (int by = 0; by <= bi_deg_y(a); ++by)
        for (int bx = 0; bx <= uni_deg(a.rows[by]); ++bx) {
            if (K.is_zero(a.rows[by].c[bx]))
                continue;
            for (int cy = 0; cy <= bi_deg_y(b); ++cy)
                for (int cx = 0; cx <= uni_deg(b.rows[cy]); ++cx)
                    r.rows[by + cy].c[bx + cx] = K.add(
                        r.rows[by + cy].c[bx + cx], K.mul(a.rows[by].c[bx], b.rows[cy].c[cx]));
        }
    bi_trim(K, r);
    return r;
}

} // namespace ts
