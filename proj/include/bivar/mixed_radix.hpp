#pragma once

// Mixed-radix representation of polynomials with respect to a chain of monic
// univariate moduli.
//
// Given radices K[0], ..., K[s-1] (monic in x, positive degree), every
// univariate u of degree < deg(K[0]*...*K[s-1]) has a unique expansion
//     u = u_0 + u_1 K[0] + u_2 K[0]K[1] + ... ,   deg u_idx < deg K[idx],
// and a bivariate gets the expansion rowwise.  Conversions in both
// directions split the radix range in half (ceil(t/2) low radices) so only
// balanced products and divisions occur.

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace bivar {

template <typename R>
struct RadixBasis {
    std::vector<UniPoly<R>> radices; // radices[idx], monic, degree >= 1
    mutable std::map<std::pair<int, int>, UniPoly<R>> products;

    int count() const { return (int)radices.size(); }

    // product radices[lo] * ... * radices[hi-1]  (memoized)
    const UniPoly<R>& range_product(const R& K, int lo, int hi) const {
        if (lo < 0 || hi > count() || lo > hi)
            throw error("range_product: bad range");
        auto it = products.find({lo, hi});
        if (it != products.end())
            return it->second;
        UniPoly<R> p;
        if (hi == lo)
            p = uni_one(K);
        else if (hi == lo + 1)
            p = radices[lo];
        else {
            const int mid = lo + (hi - lo + 1) / 2;
            p = uni_mul(K, range_product(K, lo, mid), range_product(K, mid, hi));
        }
        return products.emplace(std::make_pair(lo, hi), std::move(p)).first->second;
    }

    int range_degree(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i)
            d += (int)radices[i].c.size() - 1;
        return d;
    }
};

template <typename R>
RadixBasis<R> make_radix_basis(const R& K, std::vector<UniPoly<R>> radices) {
    for (const auto& r : radices) {
        if (uni_deg(r) < 1)
            throw error("radix basis: radices must have positive degree");
        if (!K.equal(r.c.back(), K.one()))
            throw error("radix basis: radices must be monic");
    }
    RadixBasis<R> b;
    b.radices = std::move(radices);
    return b;
}

namespace detail {

template <typename R>
void to_mixed_radix_rec(const R& K, const BiPoly<R>& f, const RadixBasis<R>& basis, int lo, int hi,
                        std::vector<BiPoly<R>>& out) {
    const int t = hi - lo;
    if (t == 1) {
        out.push_back(f);
        return;
    }
    const int split = (t + 1) / 2;
    auto [high, low] = bi_divrem_x(K, f, basis.range_product(K, lo, lo + split));
    to_mixed_radix_rec(K, low, basis, lo, lo + split, out);
    to_mixed_radix_rec(K, high, basis, lo + split, hi, out);
}

} // namespace detail

// Expand f over radices[lo..hi): returns hi-lo parts.  Rows of f must have
// degree below deg(radices[lo]*...*radices[hi-1]).
template <typename R>
std::vector<BiPoly<R>> to_mixed_radix(const R& K, const BiPoly<R>& f, const RadixBasis<R>& basis,
                                      int lo, int hi) {
    if (lo < 0 || hi > basis.count() || lo >= hi)
        throw error("to_mixed_radix: bad range");
    if (bi_deg_x(f) >= basis.range_degree(lo, hi))
        throw error("to_mixed_radix: x-degree exceeds the radix range");
    std::vector<BiPoly<R>> out;
    out.reserve(hi - lo);
    detail::to_mixed_radix_rec(K, f, basis, lo, hi, out);
    return out;
}

namespace detail {

template <typename R>
BiPoly<R> from_mixed_radix_rec(const R& K, const std::vector<BiPoly<R>>& parts, size_t first,
                               size_t count, const RadixBasis<R>& basis, int lo) {
    if (count == 1)
        return parts[first];
    const size_t split = (count + 1) / 2;
    BiPoly<R> left = from_mixed_radix_rec(K, parts, first, split, basis, lo);
    BiPoly<R> right =
        from_mixed_radix_rec(K, parts, first + split, count - split, basis, lo + (int)split);
    if (bi_is_zero(right))
        return left;
    return bi_add(K, left, bi_mul_uni(K, right, basis.range_product(K, lo, lo + (int)split)));
}

} // namespace detail

// Inverse of to_mixed_radix: parts[k] is the coefficient of
// radices[lo]*...*radices[lo+k-1].
template <typename R>
BiPoly<R> from_mixed_radix(const R& K, const std::vector<BiPoly<R>>& parts,
                           const RadixBasis<R>& basis, int lo) {
    if (parts.empty())
        return {};
    if (lo < 0 || lo + (int)parts.size() > basis.count())
        throw error("from_mixed_radix: bad range");
    return detail::from_mixed_radix_rec(K, parts, 0, parts.size(), basis, lo);
}

} // namespace bivar
