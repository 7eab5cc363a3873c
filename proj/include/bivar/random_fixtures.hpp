#pragma once

// Deterministic random instance generation for tests and benchmarks.
// Everything is driven by an explicitly seeded engine, so a (seed, sizes)
// pair always reproduces the same instance on any platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rings.hpp"
#include "segment.hpp"

namespace bivar {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    long long uniform_ll(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    bool chance(double prob) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < prob;
    }
};

// --------------------------------------------------------------- ring elements

inline Rationals::Elem random_elem(const Rationals& K, Rng& rng, int height = 20,
                                   const bigint& avoid_denominator_factor = 0) {
    (void)K;
    for (;;) {
        bigint num = rng.uniform(-height, height);
        bigint den = rng.uniform(1, height);
        if (avoid_denominator_factor > 1 && den % avoid_denominator_factor == 0)
            continue;
        return bigrat(num) / bigrat(den);
    }
}

inline ZmodPk::Elem random_elem(const ZmodPk& K, Rng& rng) {
    long long top =
        K.q <= (bigint(1) << 62) ? K.q.convert_to<long long>() - 1 : (1LL << 62);
    return K.from_integer(bigint(rng.uniform_ll(0, top)));
}

inline Tadic::Elem random_elem(const Tadic& K, Rng& rng) {
    std::vector<bigint> c(K.kappa);
    long long top = K.p <= (bigint(1) << 31) ? K.p.convert_to<long long>() - 1 : (1LL << 31);
    for (auto& v : c)
        v = rng.uniform_ll(0, top);
    return K.from_coeffs(c);
}

inline PolyFp::Elem random_elem(const PolyFp& K, Rng& rng, int maxdeg = 2) {
    std::vector<bigint> c(rng.uniform(0, maxdeg) + 1);
    long long top = K.p <= (bigint(1) << 31) ? K.p.convert_to<long long>() - 1 : (1LL << 31);
    for (auto& v : c)
        v = rng.uniform_ll(0, top);
    return K.from_coeffs(c);
}

// ---------------------------------------------------------------- polynomials

template <typename R, typename ElemGen>
UniPoly<R> random_uni(const R& K, Rng& rng, int maxdeg, double density, ElemGen&& gen) {
    UniPoly<R> p;
    for (int k = 0; k <= maxdeg; ++k)
        p.c.push_back(rng.chance(density) ? gen() : K.zero());
    uni_trim(K, p);
    return p;
}

// support inside the box {0..xlim-1} x {0..ylim-1}
template <typename R, typename ElemGen>
BiPoly<R> random_bi_box(const R& K, Rng& rng, int xlim, int ylim, double density, ElemGen&& gen) {
    BiPoly<R> f;
    for (int b = 0; b < ylim; ++b) {
        UniPoly<R> row;
        for (int a = 0; a < xlim; ++a)
            row.c.push_back(rng.chance(density) ? gen() : K.zero());
        uni_trim(K, row);
        f.rows.push_back(std::move(row));
    }
    bi_trim(K, f);
    return f;
}

// support inside the initial segment t
template <typename R, typename ElemGen>
BiPoly<R> random_bi_segment(const R& K, Rng& rng, const InitialSegment& t, double density,
                            ElemGen&& gen) {
    BiPoly<R> f;
    for (int b = 0; b < t.height(); ++b) {
        UniPoly<R> row;
        for (int a = 0; t.contains(a, b); ++a)
            row.c.push_back(rng.chance(density) ? gen() : K.zero());
        uni_trim(K, row);
        f.rows.push_back(std::move(row));
    }
    bi_trim(K, f);
    return f;
}

// ------------------------------------------------------------------ staircases

// A staircase with exactly s inner corners.  Starts from the minimal
// staircase (all steps 1, cardinal s(s+1)/2) and randomly widens steps while
// the cardinal stays within delta_budget.  grow_rounds controls how many
// widening attempts are made.
inline InitialSegment random_staircase(Rng& rng, int s, long long delta_budget,
                                       int grow_rounds = 32, int max_step = 3) {
    if (s < 1)
        throw error("random_staircase: need s >= 1");
    std::vector<int> d(s + 1, 1), e(s + 1, 1); // indices 1..s
    auto delta = [&] {
        long long total = 0;
        int n_prev = 0;
        for (int i = s; i >= 1; --i) { // n_{i-1} = sum of e_i..e_s... accumulate upward
            n_prev += e[i];
            total += (long long)d[i] * n_prev;
        }
        return total;
    };
    if (delta() > delta_budget)
        throw error("random_staircase: budget below the minimal staircase");
    for (int round = 0; round < grow_rounds; ++round) {
        const int j = rng.uniform(1, s);
        const int amount = rng.uniform(1, max_step);
        const bool widen_x = rng.chance(0.5);
        long long cost;
        if (widen_x) { // d_j += amount raises delta by amount * n_{j-1}
            int n_jm1 = 0;
            for (int i = j; i <= s; ++i)
                n_jm1 += e[i];
            cost = (long long)amount * n_jm1;
        } else { // e_j += amount raises delta by amount * m_j
            int m_j = 0;
            for (int i = 1; i <= j; ++i)
                m_j += d[i];
            cost = (long long)amount * m_j;
        }
        if (delta() + cost <= delta_budget)
            (widen_x ? d[j] : e[j]) += amount;
    }
    std::vector<std::pair<int, int>> gens;
    int m = 0, n = 0;
    for (int i = 1; i <= s; ++i)
        n += e[i];
    gens.emplace_back(0, n);
    for (int i = 1; i <= s; ++i) {
        m += d[i];
        n -= e[i];
        gens.emplace_back(m, n);
    }
    return segment_from_generators(std::move(gens));
}

// The staircase below the diagonal a + b = s: corners m_i = i, n_i = s - i
// (all steps 1), cardinal s(s+1)/2.  Needs s >= 1.
inline InitialSegment diagonal_staircase(int s) {
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i <= s; ++i)
        gens.emplace_back(i, s - i);
    return segment_from_generators(std::move(gens));
}

} // namespace bivar
