#pragma once

// Command-line front end for the bivariate lex Groebner toolbox.
//
// Subcommands: reduce, params, basis, lift, bench.  All commands accept
// --json for machine-readable output.  Exit codes: 0 success, 2 parse
// error (bad flags, unreadable files), 3 basis-invariant violation,
// 4 oracle mismatch, 5 singular/inconsistent linear algebra (bad prime),
// 1 anything else.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <bivar/basis.hpp>
#include <bivar/cell.hpp>
#include <bivar/errors.hpp>
#include <bivar/formats.hpp>
#include <bivar/lift.hpp>
#include <bivar/oracle.hpp>
#include <bivar/poly_io.hpp>
#include <bivar/random_fixtures.hpp>
#include <bivar/reduce.hpp>
#include <bivar/rings.hpp>
#include <bivar/segment.hpp>

namespace bivartool {

using nlohmann::json;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

inline bivar::bigint parse_big(const std::string& s) {
    try {
        size_t pos = 0;
        while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || (pos == 0 && s[0] == '-')))
            ++pos;
        if (pos != s.size() || s.empty())
            throw std::runtime_error("");
        return bivar::bigint(s);
    } catch (const std::exception&) {
        throw bivar::parse_error("cannot read integer '" + s + "'");
    }
}

inline unsigned parse_kappa(const std::string& s) {
    bivar::bigint k = parse_big(s);
    if (k < 1 || k > 1u << 24)
        throw bivar::parse_error("precision out of range: '" + s + "'");
    return k.convert_to<unsigned>();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t nxt = s.find(sep, pos);
        parts.push_back(s.substr(pos, nxt == std::string::npos ? nxt : nxt - pos));
        if (nxt == std::string::npos)
            return parts;
        pos = nxt + 1;
    }
}

// Dispatch on a ring descriptor: Q | Fp:<p> | Zpk:<p>:<kappa> | tadic:<p>:<kappa>.
template <typename Fn>
int with_ring(const std::string& desc, Fn&& fn) {
    if (desc == "Q")
        return fn(bivar::Rationals{});
    auto parts = split(desc, ':');
    if (parts[0] == "Fp" && parts.size() == 2)
        return fn(bivar::ZmodPk(parse_big(parts[1]), 1));
    if (parts[0] == "Zpk" && parts.size() == 3)
        return fn(bivar::ZmodPk(parse_big(parts[1]), parse_kappa(parts[2])));
    if (parts[0] == "tadic" && parts.size() == 3)
        return fn(bivar::Tadic(parse_big(parts[1]), parse_kappa(parts[2])));
    throw bivar::parse_error("unknown ring descriptor '" + desc +
                             "' (expected Q, Fp:<p>, Zpk:<p>:<kappa>, or tadic:<p>:<kappa>)");
}

template <typename R>
std::vector<bivar::BiPoly<R>> read_poly_file(const R& K, const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw bivar::parse_error("cannot open '" + path + "'");
    try {
        return bivar::read_poly_stream(K, f);
    } catch (const bivar::parse_error& e) {
        throw bivar::parse_error(path + ": " + e.what());
    }
}

template <typename R>
bivar::CellParameters<R> read_parameter_file(const R& K, const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw bivar::parse_error("cannot open '" + path + "'");
    try {
        return bivar::read_parameter_stream(K, f);
    } catch (const bivar::parse_error& e) {
        throw bivar::parse_error(path + ": " + e.what());
    }
}

// PadicFamily with an operation counter attached to every ring it hands out.
struct CountingPadicFamily {
    bivar::PadicFamily base;
    bivar::OpCount* ops = nullptr;

    using Ring = bivar::PadicFamily::Ring;
    using Global = bivar::PadicFamily::Global;

    Ring ring(unsigned kappa) const {
        Ring K = base.ring(kappa);
        K.ops = ops;
        return K;
    }
    const Global& global() const { return base.global(); }
    Ring::Elem project(const Ring& K, const Global::Elem& c) const { return base.project(K, c); }
    Ring::Elem carry(const Ring& from, const Ring& to, const Ring::Elem& a) const {
        return base.carry(from, to, a);
    }
};

} // namespace detail

// --- reduce -------------------------------------------------------------

struct ReduceOpts {
    std::string basis_file, poly_file, ring = "Q";
    bool check_oracle = false, as_json = false;
};

inline int cmd_reduce(const ReduceOpts& o, Streams& io) {
    return detail::with_ring(o.ring, [&](auto K) {
        auto gens = detail::read_poly_file(K, o.basis_file);
        auto fs = detail::read_poly_file(K, o.poly_file);
        if (fs.empty())
            throw bivar::parse_error("no polynomial in '" + o.poly_file + "'");
        auto B = bivar::make_cell_basis(K, gens);
        std::vector<std::string> results;
        for (const auto& f : fs) {
            auto r = bivar::reduce_general(K, f, B);
            if (o.check_oracle) {
                auto want = bivar::naive_reduce(K, f, B).remainder;
                if (!bivar::bi_equal(K, r, want))
                    throw bivar::oracle_mismatch("fast and naive reduction disagree on '" +
                                                 bivar::poly_to_text(K, f) + "'");
            }
            results.push_back(bivar::poly_to_text(K, r));
        }
        if (o.as_json) {
            json j{{"ring", o.ring}, {"remainders", results}};
            if (o.check_oracle)
                j["oracle"] = "agreed";
            io.out << j.dump(2) << "\n";
        } else {
            for (const auto& t : results)
                io.out << t << "\n";
        }
        return 0;
    });
}

// --- params -------------------------------------------------------------

struct ParamsOpts {
    std::string basis_file, ring = "Q";
    bool punctual = false, as_json = false;
};

inline int cmd_params(const ParamsOpts& o, Streams& io) {
    return detail::with_ring(o.ring, [&](auto K) {
        auto gens = detail::read_poly_file(K, o.basis_file);
        auto B = bivar::make_cell_basis(K, gens);
        auto mode = o.punctual ? bivar::CellMode::punctual : bivar::CellMode::full;
        auto P = bivar::parameters_from_basis(K, B, mode);
        if (o.as_json) {
            std::vector<std::string> vals;
            for (const auto& l : P.lambda)
                vals.push_back(K.to_text(l));
            json j{{"ring", o.ring},
                   {"mode", bivar::cell_mode_name(P.mode)},
                   {"staircase", bivar::staircase_to_text(P.seg)},
                   {"parameters", vals}};
            io.out << j.dump(2) << "\n";
        } else {
            bivar::write_parameter_stream(K, io.out, P);
        }
        return 0;
    });
}

// --- basis --------------------------------------------------------------

struct BasisOpts {
    std::string params_file, staircase, ring = "Q";
    bool punctual = false, as_json = false;
};

inline int cmd_basis(const BasisOpts& o, Streams& io) {
    return detail::with_ring(o.ring, [&](auto K) {
        auto P = detail::read_parameter_file(K, o.params_file);
        if (!o.staircase.empty() && !(bivar::parse_staircase(o.staircase) == P.seg))
            throw bivar::parse_error("--staircase disagrees with the parameter file header");
        if (o.punctual && P.mode != bivar::CellMode::punctual)
            throw bivar::parse_error("--punctual given but the parameter file is a full-cell file");
        auto gs = bivar::basis_from_parameters(K, P);
        if (o.as_json) {
            std::vector<std::string> texts;
            for (const auto& g : gs)
                texts.push_back(bivar::poly_to_text(K, g));
            json j{{"ring", o.ring},
                   {"mode", bivar::cell_mode_name(P.mode)},
                   {"staircase", bivar::staircase_to_text(P.seg)},
                   {"basis", texts}};
            io.out << j.dump(2) << "\n";
        } else {
            bivar::write_poly_stream(K, io.out, gs);
        }
        return 0;
    });
}

// --- lift ---------------------------------------------------------------

struct LiftOpts {
    std::string system_file, basis_file, prime, emit = "both";
    int k = 0;
    bool punctual = false, count_ops = false, as_json = false;
};

inline int cmd_lift(const LiftOpts& o, Streams& io) {
    bivar::bigint p = detail::parse_big(o.prime);
    if (p < 2)
        throw bivar::parse_error("--prime must be at least 2");
    bivar::Rationals Q;
    auto fs = detail::read_poly_file(Q, o.system_file);

    bivar::OpCount ops;
    detail::CountingPadicFamily fam{bivar::PadicFamily(p), o.count_ops ? &ops : nullptr};
    bivar::ZmodPk F1 = fam.ring(1);

    std::vector<bivar::BiPoly<bivar::ZmodPk>> basis1;
    if (!o.basis_file.empty()) {
        basis1 = detail::read_poly_file(F1, o.basis_file);
    } else {
        std::vector<bivar::BiPoly<bivar::ZmodPk>> fp;
        for (const auto& f : fs)
            fp.push_back(bivar::bi_map(
                F1, f, [&](const bivar::Rationals::Elem& c) { return fam.project(F1, c); }));
        basis1 = bivar::buchberger(F1, fp);
        io.err << "# no residue basis supplied; computed one with the reference engine\n";
    }

    auto mode = o.punctual ? bivar::CellMode::punctual : bivar::CellMode::full;
    struct Level {
        int step;
        unsigned precision;
        double seconds;
        unsigned long long add, mul;
    };
    std::vector<Level> levels;
    unsigned long long seen_add = 0, seen_mul = 0;
    auto progress = [&](int step, unsigned precision, double seconds) {
        Level lv{step, precision, seconds, ops.add - seen_add, ops.mul - seen_mul};
        seen_add = ops.add;
        seen_mul = ops.mul;
        levels.push_back(lv);
        io.err << "# level " << step << ": precision p^" << precision << ", " << std::fixed
               << std::setprecision(3) << seconds << " s";
        if (o.count_ops)
            io.err << ", ring ops " << (lv.add + lv.mul) << " (add " << lv.add << ", mul " << lv.mul
                   << ")";
        io.err << "\n";
    };

    auto result = bivar::lift_to_precision(fam, fs, basis1, mode, o.k, progress);
    const bivar::ZmodPk& Rk = result.ring;

    std::vector<std::string> header{
        "p = " + p.str(), "precision exponent = " + std::to_string(Rk.kappa),
        "modulus = " + Rk.q.str(), std::string("mode = ") + bivar::cell_mode_name(mode),
        "staircase = " + bivar::staircase_to_text(result.params.seg)};

    if (o.as_json) {
        std::vector<std::string> vals, texts;
        for (const auto& l : result.params.lambda)
            vals.push_back(Rk.to_text(l));
        for (const auto& g : result.basis)
            texts.push_back(bivar::poly_to_text(Rk, g));
        json jl = json::array();
        for (const auto& lv : levels) {
            json e{{"step", lv.step}, {"precision_exponent", lv.precision},
                   {"seconds", lv.seconds}};
            if (o.count_ops) {
                e["ops_add"] = lv.add;
                e["ops_mul"] = lv.mul;
            }
            jl.push_back(e);
        }
        json j{{"p", p.str()},
               {"k", o.k},
               {"precision_exponent", Rk.kappa},
               {"modulus", Rk.q.str()},
               {"mode", bivar::cell_mode_name(mode)},
               {"staircase", bivar::staircase_to_text(result.params.seg)},
               {"parameters", vals},
               {"basis", texts},
               {"levels", jl}};
        io.out << j.dump(2) << "\n";
        return 0;
    }
    if (o.emit == "params" || o.emit == "both")
        bivar::write_parameter_stream(Rk, io.out, result.params, header);
    if (o.emit == "basis" || o.emit == "both")
        bivar::write_poly_stream(Rk, io.out, result.basis, header);
    return 0;
}

// --- bench --------------------------------------------------------------

struct BenchOpts {
    std::string family, ring = "Fp:101", out_file;
    int max_s = 8;
    unsigned long long seed = 0;
    bool as_json = false;
};

struct BenchRow {
    int s;
    int n0, ms;
    long long delta, paving_cost;
    unsigned long long reduce_ops, naive_reduce_ops;
};

inline BenchRow bench_instance(const bivar::ZmodPk& K0, const bivar::InitialSegment& E,
                               bivar::Rng& rng) {
    using namespace bivar;
    BenchRow row{E.s(), E.height(), E.width(), E.cardinal(), paving(E).cost, 0, 0};

    ZmodPk K = K0; // counter-free copy for setup
    CellParameters<ZmodPk> P;
    P.mode = CellMode::full;
    P.seg = E;
    for (size_t i = 0; i < parameter_slots(E, CellMode::full).size(); ++i)
        P.lambda.push_back(random_elem(K, rng));
    auto B = make_cell_basis(K, basis_from_parameters(K, P));
    auto f = random_bi_box(K, rng, E.width(), E.height(), 0.6,
                           [&] { return random_elem(K, rng); });

    (void)reduce_general(K, f, B); // warm the cofactor cache before counting

    OpCount ops;
    ZmodPk Kc = K0;
    Kc.ops = &ops;
    (void)reduce_general(Kc, f, B);
    row.reduce_ops = ops.total();
    ops.reset();
    (void)naive_reduce(Kc, f, B);
    row.naive_reduce_ops = ops.total();
    return row;
}

inline int cmd_bench(const BenchOpts& o, Streams& io) {
    using namespace bivar;
    if (o.family != "staircase-diagonal" && o.family != "random")
        throw parse_error("--family must be staircase-diagonal or random");
    auto parts = detail::split(o.ring, ':');
    if (parts.size() != 2 || parts[0] != "Fp")
        throw parse_error("bench needs a prime field ring, Fp:<p>");
    ZmodPk K0(detail::parse_big(parts[1]), 1);
    if (o.max_s < 1)
        throw parse_error("--max-s must be at least 1");
    std::ofstream csv(o.out_file);
    if (!csv)
        throw parse_error("cannot open '" + o.out_file + "' for writing");

    Rng rng(o.seed);
    std::vector<BenchRow> rows;
    for (int s = 1; s <= o.max_s; ++s) {
        InitialSegment E;
        if (o.family == "staircase-diagonal") {
            E = diagonal_staircase(s);
        } else {
            long long minimal = (long long)s * (s + 1) / 2;
            E = random_staircase(rng, s, minimal + 4 * s);
        }
        rows.push_back(bench_instance(K0, E, rng));
    }

    csv << "# bivar-bench v1: s,n0,ms,delta,paving_cost,reduce_ops,naive_reduce_ops\n";
    for (const auto& r : rows)
        csv << r.s << "," << r.n0 << "," << r.ms << "," << r.delta << "," << r.paving_cost << ","
            << r.reduce_ops << "," << r.naive_reduce_ops << "\n";
    csv.close();

    if (o.as_json) {
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back(json{{"s", r.s},
                              {"n0", r.n0},
                              {"ms", r.ms},
                              {"delta", r.delta},
                              {"paving_cost", r.paving_cost},
                              {"reduce_ops", r.reduce_ops},
                              {"naive_reduce_ops", r.naive_reduce_ops}});
        io.out << json{{"family", o.family}, {"rows", jr}}.dump(2) << "\n";
    } else {
        io.out << "wrote " << rows.size() << " rows to " << o.out_file << "\n";
    }
    return 0;
}

// --- driver -------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    Streams io{in, out, err};
    CLI::App app{"bivariate lex Groebner bases: fast reduction, cell parameters, Newton lifting"};
    app.name("bivar");
    app.require_subcommand(1);

    ReduceOpts ro;
    auto* red = app.add_subcommand("reduce", "reduce polynomials modulo a cell basis");
    red->add_option("--basis", ro.basis_file, "basis file, one element per line")->required();
    red->add_option("--poly", ro.poly_file, "file of polynomials to reduce")->required();
    red->add_option("--ring", ro.ring, "coefficient ring descriptor (default Q)");
    red->add_flag("--check-oracle", ro.check_oracle, "cross-check against the naive reducer");
    red->add_flag("--json", ro.as_json, "JSON output");

    ParamsOpts po;
    auto* par = app.add_subcommand("params", "extract cell parameters from a basis");
    par->add_option("--basis", po.basis_file, "basis file")->required();
    par->add_option("--ring", po.ring, "coefficient ring descriptor (default Q)");
    par->add_flag("--punctual", po.punctual, "use the punctual (local at the origin) chart");
    par->add_flag("--json", po.as_json, "JSON output");

    BasisOpts bo;
    auto* bas = app.add_subcommand("basis", "rebuild the basis from a parameter file");
    bas->add_option("--params", bo.params_file, "parameter file with 'cell' header")->required();
    bas->add_option("--staircase", bo.staircase, "staircase to cross-check against the header");
    bas->add_option("--ring", bo.ring, "coefficient ring descriptor (default Q)");
    bas->add_flag("--punctual", bo.punctual, "require the file to be a punctual chart file");
    bas->add_flag("--json", bo.as_json, "JSON output");

    LiftOpts lo;
    auto* lif = app.add_subcommand("lift", "Newton-lift a mod-p basis to precision p^(2^k)");
    lif->add_option("--system", lo.system_file, "input system over Q, one polynomial per line")
        ->required();
    lif->add_option("--basis-mod-p", lo.basis_file,
                    "reduced basis mod p (omitted: computed by the reference engine)");
    lif->add_option("--prime", lo.prime, "prime p")->required();
    lif->add_option("--k", lo.k, "number of doubling steps")->required();
    lif->add_flag("--punctual", lo.punctual, "lift in the punctual chart");
    lif->add_option("--emit", lo.emit, "what to print: params, basis, or both (default)")
        ->check(CLI::IsMember({"params", "basis", "both"}));
    lif->add_flag("--count-ops", lo.count_ops, "report ring-operation counts per level");
    lif->add_flag("--json", lo.as_json, "JSON output");

    BenchOpts eo;
    auto* ben = app.add_subcommand("bench", "benchmark paving cost and reduction operation counts");
    ben->add_option("--family", eo.family, "staircase-diagonal or random")->required();
    ben->add_option("--max-s", eo.max_s, "largest staircase step count")->required();
    ben->add_option("--ring", eo.ring, "prime field, Fp:<p> (default Fp:101)");
    ben->add_option("--out", eo.out_file, "CSV output path")->required();
    ben->add_option("--seed", eo.seed, "seed for the random family");
    ben->add_flag("--json", eo.as_json, "JSON row dump on stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (red->parsed())
            return cmd_reduce(ro, io);
        if (par->parsed())
            return cmd_params(po, io);
        if (bas->parsed())
            return cmd_basis(bo, io);
        if (lif->parsed())
            return cmd_lift(lo, io);
        if (ben->parsed())
            return cmd_bench(eo, io);
        err << "error: no subcommand\n";
        return 2;
    } catch (const bivar::parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const bivar::basis_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const bivar::oracle_mismatch& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const bivar::singular_system& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const bivar::inconsistent_system& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace bivartool
