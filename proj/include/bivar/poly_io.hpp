#pragma once

// Text form of polynomials and staircases.
//
// Accepted input syntax:  terms joined by '+'/'-'; a term is a product of
// factors with '*' optional; a factor is a variable power (x, y, x^3, y**2),
// an integer or a/b literal handed to the ring's own parser, or a
// parenthesized ring element literal, e.g. (1 + 2*t)*x*y^3 over a truncated
// power series ring.
//
// Output is canonical: rows by decreasing y-power, decreasing x-power inside
// a row, '^' for exponents, coefficients printed by the ring and
// parenthesized when they are not simple literals.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "segment.hpp"

namespace bivar {

namespace detail {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i]))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c)
            throw parse_error(std::string("expected ") + what + " at position " + std::to_string(i) +
                              " in \"" + s + "\"");
        ++i;
    }
};

inline unsigned long parse_exponent(Cursor& cur) {
    cur.skip_ws();
    if (cur.i >= cur.s.size() || !std::isdigit((unsigned char)cur.s[cur.i]))
        throw parse_error("expected exponent digits in \"" + cur.s + "\"");
    unsigned long v = 0;
    while (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i])) {
        v = v * 10 + (unsigned long)(cur.s[cur.i] - '0');
        if (v > 1000000)
            throw parse_error("exponent too large in \"" + cur.s + "\"");
        ++cur.i;
    }
    return v;
}

// '^' or '**' introduces an exponent; absent means power 1
inline unsigned long maybe_exponent(Cursor& cur) {
    cur.skip_ws();
    if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
        ++cur.i;
        return parse_exponent(cur);
    }
    if (cur.i + 1 < cur.s.size() && cur.s[cur.i] == '*' && cur.s[cur.i + 1] == '*') {
        cur.i += 2;
        return parse_exponent(cur);
    }
    return 1;
}

} // namespace detail

template <typename R>
BiPoly<R> parse_poly(const R& K, const std::string& text) {
    detail::Cursor cur{text};
    BiPoly<R> result;
    if (cur.done())
        throw parse_error("empty polynomial text");
    bool first_term = true;
    while (!cur.done()) {
        // sign
        bool negative = false;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++cur.i;
        } else if (!first_term) {
            throw parse_error("expected '+' or '-' between terms in \"" + text + "\"");
        }
        first_term = false;

        typename R::Elem coeff = K.one();
        bool saw_factor = false;
        bool pending_mul = false;
        int xpow = 0, ypow = 0;
        for (;;) {
            c = cur.peek();
            if (c == '*') { // separator (single '*'; '**' only follows a variable)
                if (!saw_factor)
                    throw parse_error("'*' with no preceding factor in \"" + text + "\"");
                ++cur.i;
                pending_mul = true;
                c = cur.peek();
            } else if (saw_factor &&
                       !(c == 'x' || c == 'y' || c == '(' || std::isdigit((unsigned char)c))) {
                break; // end of term
            }
            if (c == 'x' || c == 'y') {
                ++cur.i;
                unsigned long e = detail::maybe_exponent(cur);
                (c == 'x' ? xpow : ypow) += (int)e;
            } else if (c == '(') {
                ++cur.i;
                size_t depth = 1, start = cur.i;
                while (cur.i < cur.s.size() && depth > 0) {
                    if (cur.s[cur.i] == '(')
                        ++depth;
                    else if (cur.s[cur.i] == ')')
                        --depth;
                    ++cur.i;
                }
                if (depth != 0)
                    throw parse_error("unbalanced parentheses in \"" + text + "\"");
                std::string inner = text.substr(start, cur.i - 1 - start);
                auto v = K.parse_text(inner);
                if (!v)
                    throw parse_error("cannot read \"" + inner + "\" as an element of " + K.name());
                coeff = K.mul(coeff, *v);
            } else if (std::isdigit((unsigned char)c)) {
                size_t start = cur.i;
                while (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i]))
                    ++cur.i;
                // a/b literal: slash immediately followed by digits
                if (cur.i < cur.s.size() && cur.s[cur.i] == '/') {
                    size_t save = cur.i;
                    ++cur.i;
                    if (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i])) {
                        while (cur.i < cur.s.size() && std::isdigit((unsigned char)cur.s[cur.i]))
                            ++cur.i;
                    } else {
                        cur.i = save;
                    }
                }
                std::string tok = text.substr(start, cur.i - start);
                auto v = K.parse_text(tok);
                if (!v)
                    throw parse_error("cannot read \"" + tok + "\" as an element of " + K.name());
                coeff = K.mul(coeff, *v);
            } else {
                if (!saw_factor || pending_mul)
                    throw parse_error("expected a term at position " + std::to_string(cur.i) +
                                      " in \"" + text + "\"");
                break;
            }
            saw_factor = true;
            pending_mul = false;
        }
        if (!saw_factor)
            throw parse_error("dangling sign in \"" + text + "\"");
        if (pending_mul)
            throw parse_error("dangling '*' in \"" + text + "\"");
        if (negative)
            coeff = K.neg(coeff);
        typename R::Elem prev = bi_coeff(K, result, xpow, ypow);
        bi_set_coeff(K, result, xpow, ypow, K.add(prev, coeff));
    }
    return result;
}

namespace detail {

inline bool coeff_needs_parens(const std::string& t) {
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '+' || c == '*' || c == ' ' || c == 't')
            return true;
        if (c == '-' && i > 0)
            return true;
    }
    return false;
}

inline std::string monomial_text(int xk, int yk) {
    std::string out;
    if (xk > 0) {
        out += "x";
        if (xk > 1)
            out += "^" + std::to_string(xk);
    }
    if (yk > 0) {
        if (!out.empty())
            out += "*";
        out += "y";
        if (yk > 1)
            out += "^" + std::to_string(yk);
    }
    return out;
}

} // namespace detail

template <typename R>
std::string poly_to_text(const R& K, const BiPoly<R>& f) {
    if (bi_is_zero(f))
        return "0";
    std::string out;
    for (int yk = bi_deg_y(f); yk >= 0; --yk) {
        const auto& row = bi_row(f, yk);
        for (int xk = uni_deg(row); xk >= 0; --xk) {
            if (K.is_zero(row.c[xk]))
                continue;
            std::string ct = K.to_text(row.c[xk]);
            bool neg = !ct.empty() && ct[0] == '-' && !detail::coeff_needs_parens(ct);
            if (neg)
                ct = ct.substr(1);
            if (out.empty()) {
                if (neg)
                    out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono = detail::monomial_text(xk, yk);
            if (detail::coeff_needs_parens(ct))
                ct = "(" + ct + ")";
            if (mono.empty())
                out += ct;
            else if (ct == "1")
                out += mono;
            else
                out += ct + "*" + mono;
        }
    }
    return out;
}

// ------------------------------------------------------------------ staircase

// "y^4, x*y^3, x^2*y, x^4" -> validated InitialSegment
inline InitialSegment parse_staircase(const std::string& text) {
    std::vector<std::pair<int, int>> gens;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        detail::Cursor cur{piece};
        if (!cur.done()) {
            int xk = 0, yk = 0;
            bool saw = false;
            for (;;) {
                char c = cur.peek();
                if (c == '*') {
                    ++cur.i;
                    c = cur.peek();
                }
                if (c == 'x' || c == 'y') {
                    ++cur.i;
                    unsigned long e = detail::maybe_exponent(cur);
                    (c == 'x' ? xk : yk) += (int)e;
                    saw = true;
                } else if (c == '1' && !saw) {
                    ++cur.i;
                    saw = true;
                } else {
                    break;
                }
            }
            if (!saw || !cur.done())
                throw parse_error("bad staircase generator \"" + piece + "\"");
            gens.emplace_back(xk, yk);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    try {
        return segment_from_generators(std::move(gens));
    } catch (const error& e) {
        throw parse_error(std::string("bad staircase \"") + text + "\": " + e.what());
    }
}

inline std::string staircase_to_text(const InitialSegment& t) {
    std::string out;
    for (int i = 0; i <= t.s(); ++i) {
        if (i)
            out += ", ";
        std::string mono = detail::monomial_text(t.m(i), t.n(i));
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

} // namespace bivar
