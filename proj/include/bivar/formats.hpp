#pragma once

// Line-oriented file formats shared by the command-line tool and tests.
//
// Polynomial files (bases, input systems): one polynomial per line; blank
// lines and lines starting with '#' are ignored.
//
// Parameter files: a header line `cell <mode> <staircase>` followed by one
// ring element per line, in the flat slot order used by the cell module.
// Comment and blank lines are allowed anywhere.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cell.hpp"
#include "errors.hpp"
#include "poly_io.hpp"

namespace bivar {

namespace detail {

inline std::string strip(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = line.find_last_not_of(" \t\r\n");
    return line.substr(a, b - a + 1);
}

inline bool is_content_line(const std::string& stripped) {
    return !stripped.empty() && stripped[0] != '#';
}

} // namespace detail

inline CellMode parse_cell_mode(const std::string& token) {
    if (token == "full")
        return CellMode::full;
    if (token == "punctual")
        return CellMode::punctual;
    throw parse_error("unknown cell mode '" + token + "' (expected full or punctual)");
}

// --- polynomial files ---------------------------------------------------

template <typename R>
std::vector<BiPoly<R>> read_poly_stream(const R& K, std::istream& in) {
    std::vector<BiPoly<R>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip(line);
        if (!detail::is_content_line(body))
            continue;
        try {
            out.push_back(parse_poly(K, body));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

template <typename R>
void write_poly_stream(const R& K, std::ostream& out, const std::vector<BiPoly<R>>& fs,
                       const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments)
        out << "# " << c << "\n";
    for (const auto& f : fs)
        out << poly_to_text(K, f) << "\n";
}

// --- parameter files ----------------------------------------------------

template <typename R>
CellParameters<R> read_parameter_stream(const R& K, std::istream& in) {
    CellParameters<R> P;
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip(line);
        if (!detail::is_content_line(body))
            continue;
        if (!have_header) {
            std::istringstream hs(body);
            std::string kw, mode;
            hs >> kw >> mode;
            if (kw != "cell")
                throw parse_error("line " + std::to_string(lineno) +
                                  ": parameter file must start with a 'cell <mode> <staircase>' "
                                  "header");
            P.mode = parse_cell_mode(mode);
            std::string rest;
            std::getline(hs, rest);
            P.seg = parse_staircase(detail::strip(rest));
            have_header = true;
            continue;
        }
        auto e = K.parse_text(body);
        if (!e)
            throw parse_error("line " + std::to_string(lineno) + ": cannot read ring element '" +
                              body + "'");
        P.lambda.push_back(std::move(*e));
    }
    if (!have_header)
        throw parse_error("parameter file has no 'cell' header line");
    size_t want = parameter_slots(P.seg, P.mode).size();
    if (P.lambda.size() != want)
        throw parse_error("parameter file has " + std::to_string(P.lambda.size()) +
                          " entries, staircase and mode require " + std::to_string(want));
    return P;
}

template <typename R>
void write_parameter_stream(const R& K, std::ostream& out, const CellParameters<R>& P,
                            const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments)
        out << "# " << c << "\n";
    out << "cell " << cell_mode_name(P.mode) << " " << staircase_to_text(P.seg) << "\n";
    for (const auto& l : P.lambda)
        out << K.to_text(l) << "\n";
}

} // namespace bivar
