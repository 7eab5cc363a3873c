// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure.  Each criterion is self-contained and seeded, so a run is
// reproducible bit for bit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

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

using namespace bivar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

// --- shared fixtures ----------------------------------------------------

InitialSegment quartic_staircase() {
    return segment_from_generators({{0, 4}, {1, 3}, {2, 1}, {4, 0}});
}

template <typename R>
std::vector<BiPoly<R>> sextic_pair(const R& K) {
    std::vector<BiPoly<R>> fs;
    fs.push_back(parse_poly(K, "-12*x*y^5 - 20*x^2*y^4 - 14*y^4 - 7*x^3*y^3 - 3*x^2*y^2 "
                               "+ 13*x^3*y - 17*x*y + 34*x^2"));
    fs.push_back(
        parse_poly(K, "-x^2*y^4 - 19*x^3*y^3 + 18*x*y^3 + 22*x^3*y^2 + 2*x^2*y^2 - 10*x^2*y"));
    return fs;
}

std::vector<BiPoly<Rationals>> rational_quartic_basis(const Rationals& Q) {
    std::vector<BiPoly<Rationals>> g;
    g.push_back(parse_poly(Q, "y^4 + 17/14*x*y - 17/7*x^2"));
    g.push_back(parse_poly(Q, "x*y^3 - 10/9*x^3"));
    g.push_back(parse_poly(Q, "x^2*y - 2*x^3"));
    g.push_back(parse_poly(Q, "x^4"));
    return g;
}

std::vector<Rationals::Elem> rational_lambda(const Rationals& Q) {
    std::vector<Rationals::Elem> l;
    for (const char* t : {"0", "17/14", "40/9", "-10/9", "-2"})
        l.push_back(*Q.parse_text(t));
    return l;
}

// staircase with at most `steps` steps and at most `max_cells` cells
InitialSegment draw_staircase(Rng& rng, int steps, long long max_cells) {
    long long minimal = (long long)steps * (steps + 1) / 2;
    long long budget = minimal + (max_cells > minimal ? rng.uniform_ll(0, max_cells - minimal) : 0);
    return random_staircase(rng, steps, budget);
}

// --- criterion 1: the worked one-step lift ------------------------------

Outcome criterion_worked_lift(double& secs) {
    auto t0 = Clock::now();
    ZmodPk Z121(11, 2);
    auto fs = sextic_pair(Z121);
    CellParameters<ZmodPk> prev{CellMode::punctual, quartic_staircase(), {}};
    for (long long a : {0, 2, 2, 5, 9})
        prev.lambda.push_back(Z121.from_integer(a));

    auto [next, sys] = lift_one_step(Z121, fs, prev);
    secs = seconds_since(t0);

    Outcome r;
    const std::vector<long long> expected{0, 79, 112, 93, 119};
    for (size_t i = 0; i < expected.size(); ++i)
        r.ok = r.ok && next.lambda.size() == 5 && next.lambda[i] == expected[i];

    std::vector<std::vector<long long>> rows;
    for (const auto& row : sys.rows) {
        bool nz = !Z121.is_zero(row.value);
        for (const auto& g : row.gradient)
            nz = nz || !Z121.is_zero(g);
        if (!nz)
            continue;
        std::vector<long long> t{row.value.convert_to<long long>()};
        for (const auto& g : row.gradient)
            t.push_back(g.convert_to<long long>());
        rows.push_back(std::move(t));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::vector<long long>> frozen{{0, 0, 0, 0, 103, 10},
                                               {0, 14, 0, 0, 0, 0},
                                               {11, 0, 14, 0, 0, 0},
                                               {44, 0, 5, 0, 0, 28},
                                               {99, 76, 0, 14, 111, 102}};
    std::sort(frozen.begin(), frozen.end());
    r.ok = r.ok && rows == frozen && secs < 1.0;
    r.detail = "one Newton step mod 121: parameters (0, 79, 112, 93, 119) and the five-form "
               "linear system, both exact";
    if (rows != frozen)
        r.detail = "system rows differ from the frozen five forms";
    return r;
}

// --- criterion 2: parameter extraction on the rational basis ------------

Outcome criterion_parameter_extraction(double&) {
    Rationals Q;
    auto gens = rational_quartic_basis(Q);
    auto B = make_cell_basis(Q, gens);
    auto P = parameters_from_basis(Q, B, CellMode::punctual);
    auto want = rational_lambda(Q);

    Outcome r;
    r.ok = P.lambda.size() == want.size();
    for (size_t i = 0; r.ok && i < want.size(); ++i)
        r.ok = Q.equal(P.lambda[i], want[i]);

    auto rebuilt = basis_from_parameters(Q, P);
    r.ok = r.ok && rebuilt.size() == gens.size();
    for (size_t i = 0; r.ok && i < gens.size(); ++i)
        r.ok = bi_equal(Q, rebuilt[i], gens[i]);
    r.detail = "punctual coordinates (0, 17/14, 40/9, -10/9, -2) over Q, inverted bit-exactly";
    return r;
}

// --- criterion 3: the Newton system vanishes at the exact point ---------

Outcome criterion_residual_at_root(double&) {
    Rationals Q;
    auto fs = sextic_pair(Q);
    CellParameters<Rationals> prev{CellMode::punctual, quartic_staircase(), rational_lambda(Q)};
    auto [next, sys] = lift_one_step(Q, fs, prev);

    Outcome r;
    int forms = 0;
    for (const auto& row : sys.rows) {
        if (!Q.is_zero(row.value))
            r.ok = false; // every constant part must vanish at the root
        bool nz = false;
        for (const auto& g : row.gradient)
            nz = nz || !Q.is_zero(g);
        if (nz)
            ++forms;
    }
    r.ok = r.ok && forms == 5;
    for (size_t i = 0; i < prev.lambda.size(); ++i)
        r.ok = r.ok && Q.equal(next.lambda[i], prev.lambda[i]);
    r.detail = "all 18 constant parts vanish at the exact rational point; 5 nonzero forms; "
               "correction is zero";
    return r;
}

// --- criterion 4: oracle equivalence ------------------------------------

Outcome criterion_oracle_equivalence(double& secs) {
    auto t0 = Clock::now();
    Rng rng(40401);
    int mul_ok = 0, red_ok = 0, total = 1000;

    auto run_ring = [&](auto K, auto gen_elem) {
        using R = decltype(K);
        // multiplication instance: box-supported times segment-supported
        InitialSegment t = draw_staircase(rng, 1 + rng.uniform(0, 9), 60);
        int ax = 1 + rng.uniform(0, 7), ay = 1 + rng.uniform(0, 5);
        auto a = random_bi_box(K, rng, ax, ay, 0.6, [&] { return gen_elem(K); });
        auto b = random_bi_segment(K, rng, t, 0.6, [&] { return gen_elem(K); });
        auto fast = multiply_segment(K, a, ax, ay, b, t);
        auto slow = naive_multiply(K, a, b);
        if (bi_equal(K, fast, slow))
            ++mul_ok;

        // reduction instance: random point of the full chart, general input
        CellParameters<R> P{CellMode::full, draw_staircase(rng, 1 + rng.uniform(0, 9), 50), {}};
        for (size_t i = 0; i < parameter_slots(P.seg, P.mode).size(); ++i)
            P.lambda.push_back(gen_elem(K));
        auto B = make_cell_basis(K, basis_from_parameters(K, P));
        auto f = random_bi_box(K, rng, P.seg.width() + 3, P.seg.height() + 2, 0.5,
                               [&] { return gen_elem(K); });
        auto r1 = reduce_general(K, f, B);
        auto r2 = naive_reduce(K, f, B).remainder;
        if (bi_equal(K, r1, r2))
            ++red_ok;
    };

    ZmodPk F101(101, 1), Z11_4(11, 4);
    Rationals Q;
    for (int i = 0; i < total; ++i) {
        switch (i % 3) {
        case 0:
            run_ring(F101, [&](const ZmodPk& K) { return random_elem(K, rng); });
            break;
        case 1:
            run_ring(Q, [&](const Rationals& K) { return random_elem(K, rng, 5); });
            break;
        default:
            run_ring(Z11_4, [&](const ZmodPk& K) { return random_elem(K, rng); });
            break;
        }
    }
    secs = seconds_since(t0);
    Outcome r;
    r.ok = mul_ok == total && red_ok == total && secs < 60.0;
    std::ostringstream d;
    d << mul_ok << "/" << total << " segment products and " << red_ok << "/" << total
      << " reductions match the oracles over F_101, Q, Z/11^4";
    r.detail = d.str();
    return r;
}

// --- criterion 5: the cell charts are bijective -------------------------

Outcome criterion_cell_bijection(double&) {
    Rng rng(50501);
    ZmodPk F101(101, 1), Z11_4(11, 4);
    Rationals Q;
    int ok_count = 0, total = 0;

    auto run_ring = [&](auto K, auto gen_elem, CellMode mode) {
        using R = decltype(K);
        CellParameters<R> P{mode, draw_staircase(rng, 1 + rng.uniform(0, 5), 25), {}};
        for (size_t i = 0; i < parameter_slots(P.seg, mode).size(); ++i)
            P.lambda.push_back(gen_elem(K));
        auto gens = basis_from_parameters(K, P);
        auto B = make_cell_basis(K, gens);
        auto P2 = parameters_from_basis(K, B, mode);
        bool good = P2.lambda.size() == P.lambda.size();
        for (size_t i = 0; good && i < P.lambda.size(); ++i)
            good = K.equal(P2.lambda[i], P.lambda[i]);
        auto rebuilt = basis_from_parameters(K, P2);
        for (size_t i = 0; good && i < gens.size(); ++i)
            good = bi_equal(K, rebuilt[i], gens[i]);
        ++total;
        if (good)
            ++ok_count;
    };

    for (CellMode mode : {CellMode::full, CellMode::punctual}) {
        for (int i = 0; i < 500; ++i) {
            switch (i % 3) {
            case 0:
                run_ring(F101, [&](const ZmodPk& K) { return random_elem(K, rng); }, mode);
                break;
            case 1:
                run_ring(Q, [&](const Rationals& K) { return random_elem(K, rng, 6); }, mode);
                break;
            default:
                run_ring(Z11_4, [&](const ZmodPk& K) { return random_elem(K, rng); }, mode);
                break;
            }
        }
    }
    Outcome r;
    r.ok = ok_count == total;
    std::ostringstream d;
    d << ok_count << "/" << total
      << " instances round-trip bit-exactly in both directions (500 per chart mode)";
    r.detail = d.str();
    return r;
}

// --- criterion 6: end-to-end lifting ------------------------------------

Outcome criterion_end_to_end_lifting(double& secs) {
    auto t0 = Clock::now();
    Rationals Q;
    Rng rng(60601);
    int fixtures = 0, good = 0, redraws = 0;
    const int wanted = 100, redraw_cap = 100;

    while (fixtures < wanted && redraws < redraw_cap) {
        int s = 1 + fixtures % 3;
        CellParameters<Rationals> P{CellMode::punctual, draw_staircase(rng, s, 30), {}};
        auto slots = parameter_slots(P.seg, P.mode).size();
        for (size_t i = 0; i < slots; ++i)
            P.lambda.push_back(Q.from_integer(rng.uniform(-20, 20)));
        auto G = basis_from_parameters(Q, P);

        // scramble the presentation with integer elementary moves: the ideal
        // is unchanged and every coefficient stays an integer
        auto fs = G;
        for (int round = 0; round < 3; ++round) {
            int i = rng.uniform(0, (int)fs.size() - 1);
            int j = rng.uniform(0, (int)fs.size() - 1);
            if (i == j)
                continue;
            BiPoly<Rationals> m;
            bi_set_coeff(Q, m, rng.uniform(0, 2), rng.uniform(0, 2),
                         Q.from_integer(rng.uniform(1, 3) * (rng.chance(0.5) ? 1 : -1)));
            fs[i] = bi_add(Q, fs[i], kronecker_multiply(Q, m, fs[j]));
        }

        bigint p = (fixtures % 2) ? 11 : 101;
        int k = 1 + fixtures % 3;
        PadicFamily fam(p);
        ZmodPk F1 = fam.ring(1);
        std::vector<BiPoly<ZmodPk>> basis1;
        for (const auto& g : G)
            basis1.push_back(
                bi_map(F1, g, [&](const Rationals::Elem& c) { return fam.project(F1, c); }));

        LiftOutcome<PadicFamily> out{F1, {}, {}};
        try {
            out = lift_to_precision(fam, fs, basis1, CellMode::punctual, k);
        } catch (const singular_system&) {
            ++redraws; // this prime degenerates for the drawn point; redraw
            continue;
        }

        bool match = out.params.lambda.size() == P.lambda.size();
        for (size_t i = 0; match && i < P.lambda.size(); ++i)
            match = out.params.lambda[i] == fam.project(out.ring, P.lambda[i]);
        auto B = make_cell_basis(out.ring, out.basis);
        for (size_t i = 0; match && i < fs.size(); ++i) {
            auto fk = bi_map(out.ring, fs[i],
                             [&](const Rationals::Elem& c) { return fam.project(out.ring, c); });
            match = bi_is_zero(reduce_general(out.ring, fk, B));
        }
        ++fixtures;
        if (match)
            ++good;
    }
    secs = seconds_since(t0);
    Outcome r;
    r.ok = fixtures == wanted && good == wanted && secs < 300.0;
    std::ostringstream d;
    d << good << "/" << wanted
      << " fixtures match the integer ground truth mod p^(2^k) with zero residuals (p in {11, "
         "101}, k <= 3, "
      << redraws << " singular redraws)";
    r.detail = d.str();
    return r;
}

// --- criteria 7 and 8: combinatorics corpus and the cost envelope -------

struct CombinatoricsReport {
    Outcome cover_shell;  // criterion 7
    Outcome cost_envelope; // criterion 8
    double secs = 0;
};

CombinatoricsReport run_combinatorics() {
    auto t0 = Clock::now();
    Rng rng(70701);
    CombinatoricsReport rep;
    int staircases = 0;
    double worst_ratio = 0;
    std::string worst_at;

    for (int i = 0; i < 1000; ++i) {
        int s = 1 + i % 50;
        long long minimal = (long long)s * (s + 1) / 2;
        InitialSegment t = random_staircase(rng, s, minimal + rng.uniform(0, 3 * s));
        Paving p = paving(t);

        // exhaustive disjoint-cover check: paint every rectangle onto the
        // bounding box, then compare against segment membership
        const int W = t.width(), H = t.height();
        std::vector<unsigned char> hits((size_t)W * H, 0);
        for (const auto& rect : p.rects)
            for (int a = rect.x0; a < rect.x1; ++a)
                for (int b = rect.y0; b < rect.y1; ++b)
                    ++hits[(size_t)b * W + a];
        for (int a = 0; rep.cover_shell.ok && a < W; ++a)
            for (int b = 0; b < H; ++b)
                if (hits[(size_t)b * W + a] != (t.contains(a, b) ? 0 : 1)) {
                    rep.cover_shell.ok = false;
                    break;
                }

        // shell: contains the segment, at most doubles it
        InitialSegment sh = shell(t);
        for (int a = 0; rep.cover_shell.ok && a < W; ++a)
            for (int b = 0; b < H; ++b)
                if (t.contains(a, b) && !sh.contains(a, b)) {
                    rep.cover_shell.ok = false;
                    break;
                }
        if (sh.cardinal() > 2 * t.cardinal())
            rep.cover_shell.ok = false;

        // cost envelope: c <= 8 n0 ms (1 + log2 s)^2
        double lg = std::log2((double)s);
        double bound = 8.0 * t.height() * t.width() * (1.0 + lg) * (1.0 + lg);
        double ratio = bound > 0 ? (double)p.cost / bound : 0.0;
        if ((double)p.cost > bound)
            rep.cost_envelope.ok = false;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_at = "s=" + std::to_string(s);
        }
        ++staircases;
    }

    // the worked paving of the diagonal quartic staircase, frozen rectangle
    // by rectangle
    {
        Paving p = paving(diagonal_staircase(4));
        std::vector<std::vector<int>> got;
        for (const auto& r : p.rects)
            got.push_back({r.index, r.x0, r.x1, r.y0, r.y1});
        std::vector<std::vector<int>> want{{1, 1, 2, 3, 4}, {2, 2, 4, 2, 4}, {3, 3, 4, 1, 2}};
        if (got != want)
            rep.cover_shell.ok = false;
    }

    rep.secs = seconds_since(t0);
    std::ostringstream d7;
    d7 << staircases << " staircases (s <= 50): paving covers the complement exactly once, "
          "shell contains the segment within 2x; diagonal-4 paving matches the worked picture";
    rep.cover_shell.detail = d7.str();
    std::ostringstream d8;
    d8 << "paving cost <= 8 n0 ms (1+log2 s)^2 on the full corpus; worst ratio "
       << std::fixed << std::setprecision(3) << worst_ratio << " at " << worst_at;
    rep.cost_envelope.detail = d8.str();
    return rep;
}

// reported (not asserted): fast-vs-naive reduction operation counts
std::string op_count_report() {
    Rng rng(80801);
    ZmodPk F(101, 1);
    std::ostringstream out;
    out << "    reduce vs naive ring-op counts (diagonal staircases, reported only):\n";
    for (int s : {4, 8, 16, 32}) {
        InitialSegment E = diagonal_staircase(s);
        CellParameters<ZmodPk> P{CellMode::full, E, {}};
        for (size_t i = 0; i < parameter_slots(E, CellMode::full).size(); ++i)
            P.lambda.push_back(random_elem(F, rng));
        auto B = make_cell_basis(F, basis_from_parameters(F, P));
        auto f = random_bi_box(F, rng, E.width(), E.height(), 0.6,
                               [&] { return random_elem(F, rng); });
        (void)reduce_general(F, f, B); // warm the cofactor cache
        OpCount ops;
        ZmodPk Fc = F;
        Fc.ops = &ops;
        (void)reduce_general(Fc, f, B);
        auto fast = ops.total();
        ops.reset();
        (void)naive_reduce(Fc, f, B);
        auto slow = ops.total();
        out << "      s=" << std::setw(2) << s << ": fast " << std::setw(8) << fast << "  naive "
            << std::setw(8) << slow << "  ratio " << std::fixed << std::setprecision(2)
            << (fast > 0 ? (double)slow / fast : 0.0) << "\n";
    }
    return out.str();
}

} // namespace

int main() {
    struct Line {
        std::string id;
        Outcome out;
        double secs;
    };
    std::vector<Line> lines;

    auto run = [&](const std::string& id, auto&& fn) {
        double secs = 0;
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = fn(secs);
            if (secs == 0)
                secs = seconds_since(t0);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
            secs = seconds_since(t0);
        }
        lines.push_back({id, o, secs});
    };

    run("1 worked one-step lift", [](double& s) { return criterion_worked_lift(s); });
    run("2 parameter extraction", [](double& s) { return criterion_parameter_extraction(s); });
    run("3 residual at the root", [](double& s) { return criterion_residual_at_root(s); });
    run("4 oracle equivalence", [](double& s) { return criterion_oracle_equivalence(s); });
    run("5 cell chart bijection", [](double& s) { return criterion_cell_bijection(s); });
    run("6 end-to-end lifting", [](double& s) { return criterion_end_to_end_lifting(s); });

    CombinatoricsReport rep;
    try {
        rep = run_combinatorics();
    } catch (const std::exception& e) {
        rep.cover_shell.ok = rep.cost_envelope.ok = false;
        rep.cover_shell.detail = rep.cost_envelope.detail = std::string("exception: ") + e.what();
    }
    lines.push_back({"7 paving and shell corpus", rep.cover_shell, rep.secs});
    lines.push_back({"8 cost envelope", rep.cost_envelope, 0.0});

    int failures = 0;
    for (const auto& l : lines) {
        std::cout << (l.out.ok ? "PASS" : "FAIL") << " criterion " << l.id << ": " << l.out.detail
                  << " [" << std::fixed << std::setprecision(2) << l.secs << " s]\n";
        if (!l.out.ok)
            ++failures;
    }
    try {
        std::cout << op_count_report();
    } catch (const std::exception& e) {
        std::cout << "    op-count report unavailable: " << e.what() << "\n";
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
