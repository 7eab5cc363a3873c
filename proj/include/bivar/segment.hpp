#pragma once

// Initial segments of N^2 (finite staircase complements of monomial ideals),
// their translates, shells, and the dyadic paving of the reducible region.
//
// A segment T is stored by the corners of its staircase: the minimal
// generators (x^{m_i} y^{n_i})_{i=0..s} of the complementary monomial ideal,
// with m_0 = 0, n_s = 0, m_i strictly increasing and n_i strictly
// decreasing.  A point (a, b) lies in T iff a < m_s and b < n_i for the
// unique i with m_i <= a < m_{i+1}.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bivar {

struct InitialSegment {
    // corner i holds (m_i, n_i); size s+1; empty() only for the degenerate
    // translate-by-s case (unit ideal), which from_generators rejects.
    std::vector<std::pair<int, int>> corners;

    int s() const { return (int)corners.size() - 1; }
    bool is_empty() const { return corners.empty(); }
    int m(int i) const { return corners[i].first; }
    int n(int i) const { return corners[i].second; }
    int height() const { return is_empty() ? 0 : corners.front().second; } // n_0
    int width() const { return is_empty() ? 0 : corners.back().first; }    // m_s
    int d(int i) const { return m(i) - m(i - 1); } // 1 <= i <= s
    int e(int i) const { return n(i - 1) - n(i); } // 1 <= i <= s

    // |T| = sum_i d_i n_{i-1}
    long long cardinal() const {
        long long total = 0;
        for (int i = 1; i <= s(); ++i)
            total += (long long)d(i) * n(i - 1);
        return total;
    }

    bool contains(int a, int b) const {
        if (is_empty() || a < 0 || b < 0 || a >= width())
            return false;
        // binary search: largest i with m_i <= a
        int lo = 0, hi = s();
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            if (m(mid) <= a)
                lo = mid;
            else
                hi = mid - 1;
        }
        return b < n(lo);
    }

    bool operator==(const InitialSegment& o) const { return corners == o.corners; }
};

// Validating constructor from a corner list (any order); rejects malformed
// staircases and the unit ideal.
inline InitialSegment segment_from_generators(std::vector<std::pair<int, int>> gens) {
    if (gens.empty())
        throw error("segment: no generators");
    std::sort(gens.begin(), gens.end());
    InitialSegment t;
    t.corners = std::move(gens);
    if (t.m(0) != 0)
        throw error("segment: missing pure y-power generator (m_0 = 0)");
    if (t.n(t.s()) != 0)
        throw error("segment: missing pure x-power generator (n_s = 0)");
    for (int i = 1; i <= t.s(); ++i) {
        if (t.m(i) <= t.m(i - 1) || t.n(i) >= t.n(i - 1))
            throw error("segment: generators not strictly staircase-monotone");
    }
    if (t.s() == 0)
        throw error("segment: unit ideal (single generator 1) is not supported");
    return t;
}

// The i-th translate T_{<-i}: generators (y^{n_i}, x^{m_{i+1}-m_i} y^{n_{i+1}},
// ..., x^{m_s-m_i}).  Membership: (a, b) in T_{<-i}  <=>  (a + m_i, b) in T.
// i = s yields the empty segment (unit ideal), representable but only here.
inline InitialSegment translate(const InitialSegment& t, int i) {
    if (i < 0 || i > t.s())
        throw error("translate: index out of range");
    InitialSegment r;
    if (i == t.s())
        return r; // empty
    for (int j = i; j <= t.s(); ++j)
        r.corners.emplace_back(t.m(j) - t.m(i), t.n(j));
    return r;
}

// The shell T' >= T: keep corner s, then repeatedly jump to the largest
// index whose m-value is strictly below half the current one, ending at
// corner 0.  |T'| <= 2|T| and the number of kept corners is O(log |T|).
inline InitialSegment shell(const InitialSegment& t) {
    std::vector<int> keep;
    int cur = t.s();
    keep.push_back(cur);
    while (cur > 0) {
        int next = -1;
        for (int j = cur - 1; j >= 0; --j) {
            if (2 * t.m(j) < t.m(cur)) { // m_j < m_cur / 2, exactly
                next = j;
                break;
            }
        }
        // m_0 = 0 always qualifies while m_cur > 0
        cur = next;
        keep.push_back(cur);
    }
    std::reverse(keep.begin(), keep.end());
    InitialSegment r;
    for (int idx : keep)
        r.corners.emplace_back(t.m(idx), t.n(idx));
    return r;
}

// One rectangle {x0..x1-1} x {y0..y1-1} of the paving, tagged with the
// staircase index whose basis element reduces the monomials inside it.
struct PavingRect {
    int index; // i in 1..s-1
    int x0, x1, y0, y1;
    bool contains(int a, int b) const { return a >= x0 && a < x1 && b >= y0 && b < y1; }
    long long area() const { return (long long)(x1 - x0) * (y1 - y0); }
};

struct Paving {
    std::vector<PavingRect> rects;
    // c = n_0 * sum_i (m_{i+l_i} - m_i)  +  m_s * sum_i (n_{i-h_i} - n_i)
    long long cost = 0;
};

inline int val2(int i) {
    int v = 0;
    while (i % 2 == 0) {
        i /= 2;
        ++v;
    }
    return v;
}

// The dyadic paving: for i = 1..s-1, with h_i = 2^{val2(i)} and
// l_i = min(h_i, s-i), the rectangle {m_i..m_{i+l_i}-1} x {n_i..n_{i-h_i}-1}.
// The rectangles are pairwise disjoint and cover the reducible region
// S = ({0..m_s-1} x {0..n_0-1}) \ T.
inline Paving paving(const InitialSegment& t) {
    Paving p;
    const int s = t.s();
    long long width_sum = 0, height_sum = 0;
    for (int i = 1; i <= s - 1; ++i) {
        const int h = 1 << val2(i);
        const int l = std::min(h, s - i);
        PavingRect r{i, t.m(i), t.m(i + l), t.n(i), t.n(i - h)};
        width_sum += r.x1 - r.x0;
        height_sum += r.y1 - r.y0;
        p.rects.push_back(r);
    }
    p.cost = (long long)t.height() * width_sum + (long long)t.width() * height_sum;
    return p;
}

} // namespace bivar
