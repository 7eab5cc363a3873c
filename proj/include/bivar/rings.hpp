#pragma once

// Exact coefficient rings: rationals, Z/p^k (prime fields when k = 1),
// truncated power series F_p[t]/<t^k>, a plain polynomial ring F_p[t] used as
// the global domain of the parametric case, and the first-order jet ring
// B = A[L_1..L_N]/<L_1..L_N>^2 over any of these.
//
// Rings are small value objects; elements are plain data and carry no back
// pointer, so every operation takes the ring as an explicit argument:
//
//     ZmodPk R(11, 2);            // Z/121
//     auto a = R.from_integer(57);
//     auto b = R.mul(a, R.invert(R.from_integer(14)));
//
// All operations are pure.  An optional operation counter can be attached to
// a ring instance for benchmarking; it is the only piece of mutable state.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bivar {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Tallies of base-ring operations, attached to a ring via Ring::ops.
// add counts additive operations (add/sub/neg), mul multiplicative ones
// (mul/invert).
struct OpCount {
    unsigned long long add = 0;
    unsigned long long mul = 0;
    void reset() { add = 0; mul = 0; }
    unsigned long long total() const { return add + mul; }
};

namespace detail {

inline bigint mod_reduce(const bigint& a, const bigint& q) {
    bigint r = a % q;
    if (r < 0)
        r += q;
    return r;
}

// Extended gcd based inverse of a modulo q; empty if gcd(a, q) != 1.
inline std::optional<bigint> mod_inverse(const bigint& a, const bigint& q) {
    bigint old_r = mod_reduce(a, q), r = q;
    bigint old_s = 1, s = 0;
    while (r != 0) {
        bigint quo = old_r / r;
        bigint tmp = old_r - quo * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quo * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        return std::nullopt;
    return mod_reduce(old_s, q);
}

inline bigint pow_uint(const bigint& b, unsigned e) {
    bigint acc = 1;
    for (unsigned i = 0; i < e; ++i)
        acc *= b;
    return acc;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Q: arbitrary-precision rationals, always in lowest terms.
// ---------------------------------------------------------------------------
struct Rationals {
    using Elem = bigrat;
    OpCount* ops = nullptr;

    Elem zero() const { return bigrat(0); }
    Elem one() const { return bigrat(1); }
    Elem from_integer(const bigint& n) const { return bigrat(n); }

    Elem add(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        return a + b;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        return a - b;
    }
    Elem neg(const Elem& a) const {
        if (ops) ++ops->add;
        return -a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (ops) ++ops->mul;
        return a * b;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a != 0; }
    Elem invert(const Elem& a) const {
        if (a == 0)
            throw error("Rationals: division by zero");
        if (ops) ++ops->mul;
        return 1 / a;
    }

    std::string to_text(const Elem& a) const { return a.str(); }
    std::optional<Elem> parse_text(const std::string& s) const;
    std::string name() const { return "Q"; }
};

// ---------------------------------------------------------------------------
// Z/p^k with canonical representatives in [0, p^k).  k = 1 gives the prime
// field F_p.  Units are the residues not divisible by p.
// ---------------------------------------------------------------------------
struct ZmodPk {
    bigint p;
    unsigned kappa = 1;
    bigint q; // p^kappa
    OpCount* ops = nullptr;

    ZmodPk() : p(0), q(0) {}
    ZmodPk(bigint p_, unsigned kappa_) : p(std::move(p_)), kappa(kappa_) {
        if (p < 2 || kappa == 0)
            throw error("ZmodPk: need p >= 2 and kappa >= 1");
        q = detail::pow_uint(p, kappa);
    }

    using Elem = bigint;

    Elem zero() const { return 0; }
    Elem one() const { return detail::mod_reduce(1, q); }
    Elem from_integer(const bigint& n) const { return detail::mod_reduce(n, q); }

    Elem add(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        bigint r = a + b;
        if (r >= q)
            r -= q;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        bigint r = a - b;
        if (r < 0)
            r += q;
        return r;
    }
    Elem neg(const Elem& a) const {
        if (ops) ++ops->add;
        return a == 0 ? a : Elem(q - a);
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (ops) ++ops->mul;
        return (a * b) % q;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a % p != 0; }
    Elem invert(const Elem& a) const {
        auto inv = detail::mod_inverse(a, q);
        if (!inv)
            throw error("ZmodPk: " + a.str() + " is not a unit mod " + q.str());
        if (ops) ++ops->mul;
        return *inv;
    }

    std::string to_text(const Elem& a) const { return a.str(); }
    std::optional<Elem> parse_text(const std::string& s) const;
    std::string name() const {
        return kappa == 1 ? "Fp:" + p.str() : "Zpk:" + p.str() + ":" + std::to_string(kappa);
    }
};

// x at precision 2k, reduced to precision k (drop high digits).
inline ZmodPk::Elem reduce_precision(const ZmodPk& to, const ZmodPk::Elem& x) {
    return detail::mod_reduce(x, to.q);
}

// x at precision k, reinjected at precision 2k via its canonical
// representative.
inline ZmodPk::Elem lift_precision(const ZmodPk& /*to*/, const ZmodPk::Elem& x) {
    return x;
}

// ---------------------------------------------------------------------------
// F_p[t] / <t^k>: truncated power series at the (normalized) point t = 0.
// Elements are coefficient vectors of fixed length k, entries in [0, p).
// Units are the series with nonzero constant term.
// ---------------------------------------------------------------------------
struct Tadic {
    bigint p;
    unsigned kappa = 1;
    OpCount* ops = nullptr;

    Tadic() : p(0) {}
    Tadic(bigint p_, unsigned kappa_) : p(std::move(p_)), kappa(kappa_) {
        if (p < 2 || kappa == 0)
            throw error("Tadic: need p >= 2 and kappa >= 1");
    }

    using Elem = std::vector<bigint>; // size == kappa, entries in [0, p)

    Elem zero() const { return Elem(kappa, bigint(0)); }
    Elem one() const {
        Elem e(kappa, bigint(0));
        e[0] = detail::mod_reduce(1, p);
        return e;
    }
    Elem from_integer(const bigint& n) const {
        Elem e(kappa, bigint(0));
        e[0] = detail::mod_reduce(n, p);
        return e;
    }
    // Truncation of an arbitrary coefficient sequence in t.
    Elem from_coeffs(const std::vector<bigint>& c) const {
        Elem e(kappa, bigint(0));
        for (unsigned i = 0; i < kappa && i < c.size(); ++i)
            e[i] = detail::mod_reduce(c[i], p);
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        Elem r(kappa);
        for (unsigned i = 0; i < kappa; ++i) {
            bigint v = a[i] + b[i];
            if (v >= p)
                v -= p;
            r[i] = v;
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        Elem r(kappa);
        for (unsigned i = 0; i < kappa; ++i) {
            bigint v = a[i] - b[i];
            if (v < 0)
                v += p;
            r[i] = v;
        }
        return r;
    }
    Elem neg(const Elem& a) const {
        if (ops) ++ops->add;
        Elem r(kappa);
        for (unsigned i = 0; i < kappa; ++i)
            r[i] = a[i] == 0 ? bigint(0) : bigint(p - a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (ops) ++ops->mul;
        Elem r(kappa, bigint(0));
        for (unsigned i = 0; i < kappa; ++i) {
            if (a[i] == 0)
                continue;
            for (unsigned j = 0; j + i < kappa; ++j)
                r[i + j] = detail::mod_reduce(r[i + j] + a[i] * b[j], p);
        }
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (c != 0)
                return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a[0] != 0; }
    Elem invert(const Elem& a) const {
        if (a[0] == 0)
            throw error("Tadic: non-unit (zero constant term)");
        if (ops) ++ops->mul;
        // Power-series inversion, one coefficient at a time.
        bigint u = *detail::mod_inverse(a[0], p);
        Elem w(kappa, bigint(0));
        w[0] = u;
        for (unsigned n = 1; n < kappa; ++n) {
            bigint acc = 0;
            for (unsigned j = 1; j <= n; ++j)
                acc += a[j] * w[n - j];
            acc = detail::mod_reduce(acc, p);
            w[n] = detail::mod_reduce(-(u * acc), p);
        }
        return w;
    }

    std::string to_text(const Elem& a) const;
    std::optional<Elem> parse_text(const std::string& s) const;
    std::string name() const { return "tadic:" + p.str() + ":" + std::to_string(kappa); }
};

inline Tadic::Elem reduce_precision(const Tadic& to, const Tadic::Elem& x) {
    return Tadic::Elem(x.begin(), x.begin() + to.kappa);
}

inline Tadic::Elem lift_precision(const Tadic& to, const Tadic::Elem& x) {
    Tadic::Elem r = x;
    r.resize(to.kappa, bigint(0));
    return r;
}

// ---------------------------------------------------------------------------
// F_p[t]: dense polynomials in t over the prime field, used as the exact
// global coefficient domain of the parametric lifting case (the analogue of
// integer coefficients for the p-adic case).  Normalized: no trailing zeros.
// ---------------------------------------------------------------------------
struct PolyFp {
    bigint p;
    OpCount* ops = nullptr;

    PolyFp() : p(0) {}
    explicit PolyFp(bigint p_) : p(std::move(p_)) {
        if (p < 2)
            throw error("PolyFp: need p >= 2");
    }

    using Elem = std::vector<bigint>; // coefficient i of t^i, in [0, p)

    static void trim(Elem& e) {
        while (!e.empty() && e.back() == 0)
            e.pop_back();
    }

    Elem zero() const { return {}; }
    Elem one() const { return from_integer(1); }
    Elem from_integer(const bigint& n) const {
        bigint r = detail::mod_reduce(n, p);
        if (r == 0)
            return {};
        return {r};
    }
    Elem from_coeffs(const std::vector<bigint>& c) const {
        Elem e;
        e.reserve(c.size());
        for (const auto& v : c)
            e.push_back(detail::mod_reduce(v, p));
        trim(e);
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        Elem r(std::max(a.size(), b.size()), bigint(0));
        for (size_t i = 0; i < r.size(); ++i) {
            bigint v = (i < a.size() ? a[i] : bigint(0)) + (i < b.size() ? b[i] : bigint(0));
            if (v >= p)
                v -= p;
            r[i] = v;
        }
        trim(r);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        if (ops) ++ops->add;
        Elem r(std::max(a.size(), b.size()), bigint(0));
        for (size_t i = 0; i < r.size(); ++i) {
            bigint v = (i < a.size() ? a[i] : bigint(0)) - (i < b.size() ? b[i] : bigint(0));
            if (v < 0)
                v += p;
            r[i] = v;
        }
        trim(r);
        return r;
    }
    Elem neg(const Elem& a) const {
        if (ops) ++ops->add;
        Elem r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] == 0 ? bigint(0) : bigint(p - a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (ops) ++ops->mul;
        if (a.empty() || b.empty())
            return {};
        Elem r(a.size() + b.size() - 1, bigint(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = detail::mod_reduce(r[i + j] + a[i] * b[j], p);
        }
        trim(r);
        return r;
    }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a.size() == 1; }
    Elem invert(const Elem& a) const {
        if (a.size() != 1)
            throw error("PolyFp: only nonzero constants are units");
        if (ops) ++ops->mul;
        return {*detail::mod_inverse(a[0], p)};
    }

    std::string to_text(const Elem& a) const;
    std::optional<Elem> parse_text(const std::string& s) const;
    std::string name() const { return "polyfp:" + p.str(); }
};

// ---------------------------------------------------------------------------
// First-order jets over a base ring: B = A[L_1..L_N] / <L_1..L_N>^2.
// An element carries a constant part and a dense gradient; products truncate:
// (a0 + sum a_i L_i)(b0 + sum b_i L_i) = a0 b0 + sum (a0 b_i + b0 a_i) L_i.
// A gradient stored as an empty vector means "all zero"; this keeps the many
// constant-only jets cheap.
// ---------------------------------------------------------------------------
template <typename B>
struct JetRing {
    B base;
    int nvars = 0;

    JetRing() = default;
    JetRing(B base_, int nvars_) : base(std::move(base_)), nvars(nvars_) {}

    struct Elem {
        typename B::Elem c;
        std::vector<typename B::Elem> g; // empty or size nvars
    };

    Elem zero() const { return Elem{base.zero(), {}}; }
    Elem one() const { return Elem{base.one(), {}}; }
    Elem from_integer(const bigint& n) const { return Elem{base.from_integer(n), {}}; }
    Elem constant(typename B::Elem c) const { return Elem{std::move(c), {}}; }
    // c + 1*L_i
    Elem variable(typename B::Elem c, int i) const {
        Elem e{std::move(c), std::vector<typename B::Elem>(nvars, base.zero())};
        e.g[i] = base.one();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r{base.add(a.c, b.c), {}};
        if (a.g.empty() && b.g.empty())
            return r;
        r.g.resize(nvars);
        for (int i = 0; i < nvars; ++i) {
            if (a.g.empty())
                r.g[i] = b.g[i];
            else if (b.g.empty())
                r.g[i] = a.g[i];
            else
                r.g[i] = base.add(a.g[i], b.g[i]);
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r{base.sub(a.c, b.c), {}};
        if (a.g.empty() && b.g.empty())
            return r;
        r.g.resize(nvars);
        for (int i = 0; i < nvars; ++i) {
            if (b.g.empty())
                r.g[i] = a.g[i];
            else if (a.g.empty())
                r.g[i] = base.neg(b.g[i]);
            else
                r.g[i] = base.sub(a.g[i], b.g[i]);
        }
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r{base.neg(a.c), {}};
        if (!a.g.empty()) {
            r.g.resize(nvars);
            for (int i = 0; i < nvars; ++i)
                r.g[i] = base.neg(a.g[i]);
        }
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r{base.mul(a.c, b.c), {}};
        if (a.g.empty() && b.g.empty())
            return r;
        r.g.resize(nvars);
        for (int i = 0; i < nvars; ++i) {
            typename B::Elem v = base.zero();
            if (!b.g.empty())
                v = base.mul(a.c, b.g[i]);
            if (!a.g.empty())
                v = base.add(v, base.mul(b.c, a.g[i]));
            r.g[i] = v;
        }
        return r;
    }
    bool is_zero(const Elem& a) const {
        if (!base.is_zero(a.c))
            return false;
        for (const auto& v : a.g)
            if (!base.is_zero(v))
                return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const {
        if (!base.equal(a.c, b.c))
            return false;
        for (int i = 0; i < nvars; ++i) {
            const bool ha = !a.g.empty(), hb = !b.g.empty();
            if (ha && hb) {
                if (!base.equal(a.g[i], b.g[i]))
                    return false;
            } else if (ha) {
                if (!base.is_zero(a.g[i]))
                    return false;
            } else if (hb) {
                if (!base.is_zero(b.g[i]))
                    return false;
            }
        }
        return true;
    }
    bool is_unit(const Elem& a) const { return base.is_unit(a.c); }
    Elem invert(const Elem& a) const {
        // 1/(a0 + g) = a0^{-1} - a0^{-2} g
        typename B::Elem inv = base.invert(a.c);
        Elem r{inv, {}};
        if (!a.g.empty()) {
            typename B::Elem m = base.neg(base.mul(inv, inv));
            r.g.resize(nvars);
            for (int i = 0; i < nvars; ++i)
                r.g[i] = base.mul(m, a.g[i]);
        }
        return r;
    }

    std::string to_text(const Elem& a) const {
        std::string s = base.to_text(a.c);
        for (int i = 0; i < (int)a.g.size(); ++i) {
            if (base.is_zero(a.g[i]))
                continue;
            s += "+" + base.to_text(a.g[i]) + "*L" + std::to_string(i + 1);
        }
        return s;
    }
    std::optional<Elem> parse_text(const std::string&) const { return std::nullopt; }
    std::string name() const { return "jet:" + base.name() + ":" + std::to_string(nvars); }
};

// ---------------------------------------------------------------------------
// Element text parsing (ring-specific literal syntax; polynomial-in-x,y text
// lives in poly_io.hpp).
// ---------------------------------------------------------------------------
namespace detail {

inline bool parse_bigint(const std::string& s, bigint& out) {
    std::string t;
    for (char ch : s)
        if (!isspace((unsigned char)ch))
            t += ch;
    if (t.empty())
        return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size())
        return false;
    for (size_t j = i; j < t.size(); ++j)
        if (!isdigit((unsigned char)t[j]))
            return false;
    out = bigint(t);
    return true;
}

} // namespace detail

inline std::optional<Rationals::Elem> Rationals::parse_text(const std::string& s) const {
    auto slash = s.find('/');
    bigint num, den;
    if (slash == std::string::npos) {
        if (!detail::parse_bigint(s, num))
            return std::nullopt;
        return bigrat(num);
    }
    if (!detail::parse_bigint(s.substr(0, slash), num) ||
        !detail::parse_bigint(s.substr(slash + 1), den) || den == 0)
        return std::nullopt;
    return bigrat(num) / bigrat(den);
}

inline std::optional<ZmodPk::Elem> ZmodPk::parse_text(const std::string& s) const {
    auto slash = s.find('/');
    bigint num, den;
    if (slash == std::string::npos) {
        if (!detail::parse_bigint(s, num))
            return std::nullopt;
        return from_integer(num);
    }
    if (!detail::parse_bigint(s.substr(0, slash), num) ||
        !detail::parse_bigint(s.substr(slash + 1), den))
        return std::nullopt;
    auto inv = detail::mod_inverse(den, q);
    if (!inv)
        return std::nullopt;
    return mul(from_integer(num), *inv);
}

// t-polynomial text: "3 + 2*t + t^2" (also accepts ** for powers).
namespace detail {

inline bool parse_tpoly(const std::string& s, const bigint& p, std::vector<bigint>& coeffs);

} // namespace detail

inline std::string Tadic::to_text(const Elem& a) const {
    std::string s;
    for (unsigned i = 0; i < kappa; ++i) {
        if (a[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0)
            s += a[i].str();
        else {
            if (a[i] != 1)
                s += a[i].str() + "*";
            s += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string PolyFp::to_text(const Elem& a) const {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0)
            s += a[i].str();
        else {
            if (a[i] != 1)
                s += a[i].str() + "*";
            s += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::optional<Tadic::Elem> Tadic::parse_text(const std::string& s) const {
    std::vector<bigint> c;
    if (!detail::parse_tpoly(s, p, c))
        return std::nullopt;
    if (c.size() > kappa) // degree overflow is a parse error at fixed precision
        return std::nullopt;
    return from_coeffs(c);
}

inline std::optional<PolyFp::Elem> PolyFp::parse_text(const std::string& s) const {
    std::vector<bigint> c;
    if (!detail::parse_tpoly(s, p, c))
        return std::nullopt;
    return from_coeffs(c);
}

namespace detail {

// Minimal recursive-descent parse of sums of integer*t^k terms.
inline bool parse_tpoly(const std::string& s, const bigint& p, std::vector<bigint>& coeffs) {
    coeffs.clear();
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && isspace((unsigned char)s[i]))
            ++i;
    };
    auto add_term = [&](const bigint& c, unsigned e) {
        if (coeffs.size() <= e)
            coeffs.resize(e + 1, bigint(0));
        coeffs[e] = mod_reduce(coeffs[e] + c, p);
    };
    skip();
    if (i == s.size())
        return false;
    bool first = true;
    while (true) {
        skip();
        if (i == s.size())
            break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first)
            return false;
        first = false;
        skip();
        bigint coeff = 1;
        bool have_num = false, have_t = false;
        unsigned expo = 0;
        // number
        if (i < s.size() && isdigit((unsigned char)s[i])) {
            std::string num;
            while (i < s.size() && isdigit((unsigned char)s[i]))
                num += s[i++];
            coeff = bigint(num);
            have_num = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            have_t = true;
            expo = 1;
            skip();
            if (i < s.size() && (s[i] == '^' || (s[i] == '*' && i + 1 < s.size() && s[i + 1] == '*'))) {
                i += s[i] == '^' ? 1 : 2;
                skip();
                if (i == s.size() || !isdigit((unsigned char)s[i]))
                    return false;
                std::string num;
                while (i < s.size() && isdigit((unsigned char)s[i]))
                    num += s[i++];
                expo = (unsigned)std::stoul(num);
            }
        }
        if (!have_num && !have_t)
            return false;
        add_term(sign < 0 ? bigint(-coeff) : coeff, expo);
    }
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    return true;
}

} // namespace detail

// Basic concept capturing the coefficient-ring contract.
template <typename R>
concept CoefficientRing = requires(const R& k, const typename R::Elem& a, const typename R::Elem& b) {
    { k.zero() } -> std::same_as<typename R::Elem>;
    { k.one() } -> std::same_as<typename R::Elem>;
    { k.add(a, b) } -> std::same_as<typename R::Elem>;
    { k.sub(a, b) } -> std::same_as<typename R::Elem>;
    { k.mul(a, b) } -> std::same_as<typename R::Elem>;
    { k.neg(a) } -> std::same_as<typename R::Elem>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.equal(a, b) } -> std::same_as<bool>;
    { k.is_unit(a) } -> std::same_as<bool>;
    { k.invert(a) } -> std::same_as<typename R::Elem>;
    { k.from_integer(bigint(0)) } -> std::same_as<typename R::Elem>;
};

} // namespace bivar
