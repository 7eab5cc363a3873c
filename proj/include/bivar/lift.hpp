#pragma once

// Newton lifting of cell parameters.
//
// Setting: a zero-dimensional system f_1, ..., f_t over a "global" domain
// (integers/rationals, or polynomials in one parameter t), a maximal ideal m
// of the domain (a prime p, or <t>), and a reduced lex basis over the residue
// field that reduces every f_i to zero.  The basis is a point of its Gröbner
// cell; lifting moves that point from precision kappa to 2*kappa:
//
//   1. read the current coordinates at precision 2*kappa,
//   2. rebuild the basis with first-order jets attached to every coordinate,
//   3. reduce each f_i modulo the jet basis: each coefficient of each normal
//      form is (value, gradient) — an affine condition on the correction,
//   4. solve the linear system, add the correction.
//
// One step doubles the precision; k steps reach m^(2^k).  Each jet operation
// costs O(#coordinates) base operations, so a step costs about #coordinates
// times the plain reduction of the system.
//
// System rows are ordered: input polynomials in the given order; inside one
// polynomial, the staircase monomials x^a y^b with a ascending, then b
// ascending.  (Zero rows are kept; callers that display systems usually skip
// them.)

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "cell.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "reduce.hpp"
#include "rings.hpp"

namespace bivar {

template <typename R>
struct NewtonSystem {
    struct Row {
        typename R::Elem value;                 // at the current parameters
        std::vector<typename R::Elem> gradient; // d(value)/d(coordinate), dense
    };
    int unknowns = 0;
    std::vector<Row> rows;
};

// Solve A*x = b by Gauss-Jordan elimination with unit pivots; the base ring
// may have zero divisors (Z/p^{2k}), so only rows with a unit entry in the
// current column can pivot.  Throws singular_system when a column has no
// unit pivot (or there are fewer rows than unknowns), inconsistent_system
// when the solution fails to satisfy some original row.
template <typename R>
std::vector<typename R::Elem> linear_solve(const R& K,
                                           const std::vector<std::vector<typename R::Elem>>& A,
                                           const std::vector<typename R::Elem>& b) {
    using Elem = typename R::Elem;
    const int rows = (int)A.size();
    const int cols = rows == 0 ? 0 : (int)A[0].size();
    if ((int)b.size() != rows)
        throw error("linear_solve: matrix/rhs size mismatch");
    for (const auto& row : A)
        if ((int)row.size() != cols)
            throw error("linear_solve: ragged matrix");
    if (rows < cols)
        throw singular_system("linear_solve: fewer equations than unknowns");

    std::vector<std::vector<Elem>> W = A;
    std::vector<Elem> rhs = b;
    std::vector<int> pivot_row(cols, -1);
    std::vector<bool> used(rows, false);
    for (int c = 0; c < cols; ++c) {
        int piv = -1;
        for (int r = 0; r < rows && piv < 0; ++r)
            if (!used[r] && K.is_unit(W[r][c]))
                piv = r;
        if (piv < 0)
            throw singular_system("linear_solve: no unit pivot for column " + std::to_string(c));
        used[piv] = true;
        pivot_row[c] = piv;
        const Elem inv = K.invert(W[piv][c]);
        for (int j = 0; j < cols; ++j)
            W[piv][j] = K.mul(inv, W[piv][j]);
        rhs[piv] = K.mul(inv, rhs[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == piv || K.is_zero(W[r][c]))
                continue;
            const Elem f = W[r][c];
            for (int j = 0; j < cols; ++j)
                W[r][j] = K.sub(W[r][j], K.mul(f, W[piv][j]));
            rhs[r] = K.sub(rhs[r], K.mul(f, rhs[piv]));
        }
    }
    std::vector<Elem> x(cols, K.zero());
    for (int c = 0; c < cols; ++c)
        x[c] = rhs[pivot_row[c]];
    for (int r = 0; r < rows; ++r) {
        Elem acc = K.zero();
        for (int c = 0; c < cols; ++c)
            acc = K.add(acc, K.mul(A[r][c], x[c]));
        if (!K.equal(acc, b[r]))
            throw inconsistent_system("linear_solve: row " + std::to_string(r) +
                                      " is not satisfied by the pivot solution");
    }
    return x;
}

// One Newton step at a fixed precision.  K is the ring at precision 2*kappa;
// fs are the input polynomials reduced to that precision; prev holds cell
// coordinates correct at precision kappa, canonically lifted into K.
// Returns the corrected coordinates together with the linear system that
// produced them.
template <typename R>
std::pair<CellParameters<R>, NewtonSystem<R>>
lift_one_step(const R& K, const std::vector<BiPoly<R>>& fs, const CellParameters<R>& prev) {
    using Elem = typename R::Elem;
    const int N = (int)prev.lambda.size();
    const JetRing<R> J(K, N);

    CellParameters<JetRing<R>> PJ;
    PJ.mode = prev.mode;
    PJ.seg = prev.seg;
    for (int k = 0; k < N; ++k)
        PJ.lambda.push_back(J.variable(prev.lambda[k], k));

    CellBasis<JetRing<R>> BJ = make_cell_basis(J, basis_from_parameters(J, PJ));

    NewtonSystem<R> sys;
    sys.unknowns = N;
    for (const BiPoly<R>& f : fs) {
        BiPoly<JetRing<R>> fj =
            bi_map(J, f, [&](const Elem& c) { return J.constant(c); });
        BiPoly<JetRing<R>> r = reduce_general(J, fj, BJ);
        for (int a = 0; a < prev.seg.width(); ++a)
            for (int b = 0; prev.seg.contains(a, b); ++b) {
                typename JetRing<R>::Elem e = bi_coeff(J, r, a, b);
                e.g.resize(N, K.zero());
                sys.rows.push_back({std::move(e.c), std::move(e.g)});
            }
    }

    std::vector<std::vector<Elem>> A;
    std::vector<Elem> rhs;
    A.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
        A.push_back(row.gradient);
        rhs.push_back(K.neg(row.value));
    }
    std::vector<Elem> eps = linear_solve(K, A, rhs);

    CellParameters<R> next;
    next.mode = prev.mode;
    next.seg = prev.seg;
    for (int k = 0; k < N; ++k)
        next.lambda.push_back(K.add(prev.lambda[k], eps[k]));
    return {std::move(next), std::move(sys)};
}

// ---------------------------------------------------------------------------
// Coefficient families: how to build the ring at a given precision, project
// global input into it, and carry elements from one precision to the next.
// ---------------------------------------------------------------------------

// m = <p> inside Z: precision kappa is Z/p^kappa, global data is rational.
struct PadicFamily {
    bigint p;
    Rationals rationals;

    using Ring = ZmodPk;
    using Global = Rationals;

    explicit PadicFamily(bigint p_) : p(std::move(p_)) {}

    Ring ring(unsigned kappa) const { return ZmodPk(p, kappa); }
    const Global& global() const { return rationals; }

    Ring::Elem project(const Ring& K, const Global::Elem& c) const {
        const bigint num = boost::multiprecision::numerator(c);
        const bigint den = boost::multiprecision::denominator(c);
        if (den % p == 0)
            throw singular_system("p divides a denominator of the input system");
        return K.mul(K.from_integer(num), K.invert(K.from_integer(den)));
    }
    Ring::Elem carry(const Ring&, const Ring& to, const Ring::Elem& a) const {
        return lift_precision(to, a);
    }
};

// m = <t> inside F_p[t]: precision kappa is F_p[t]/(t^kappa), global data is
// a polynomial in t.
struct TadicFamily {
    bigint p;
    PolyFp polys;

    using Ring = Tadic;
    using Global = PolyFp;

    explicit TadicFamily(bigint p_) : p(p_), polys(p_) {}

    Ring ring(unsigned kappa) const { return Tadic(p, kappa); }
    const Global& global() const { return polys; }

    Ring::Elem project(const Ring& K, const Global::Elem& c) const {
        return K.from_coeffs(c); // truncates to the precision of K
    }
    Ring::Elem carry(const Ring&, const Ring& to, const Ring::Elem& a) const {
        return lift_precision(to, a);
    }
};

template <typename Family>
struct LiftOutcome {
    typename Family::Ring ring; // the ring at the final precision
    CellParameters<typename Family::Ring> params;
    std::vector<BiPoly<typename Family::Ring>> basis;
};

using LiftProgress = std::function<void(int step, unsigned precision, double seconds)>;

// Full driver: read the coordinates of the basis over the residue field,
// then double the precision k times, projecting the input system to each
// level on the way.  k = 0 just validates and echoes.
template <typename Family>
LiftOutcome<Family> lift_to_precision(const Family& fam,
                                      const std::vector<BiPoly<typename Family::Global>>& fs,
                                      const std::vector<BiPoly<typename Family::Ring>>& basis_mod,
                                      CellMode mode, int k, const LiftProgress& progress = {}) {
    using Ring = typename Family::Ring;
    if (k < 0)
        throw error("lift_to_precision: need k >= 0");
    if (fs.empty())
        throw error("lift_to_precision: empty input system");

    Ring R1 = fam.ring(1);
    CellBasis<Ring> B1 = make_cell_basis(R1, basis_mod);
    CellParameters<Ring> cur = parameters_from_basis(R1, B1, mode);

    auto project_poly = [&](const Ring& K, const BiPoly<typename Family::Global>& f) {
        return bi_map(K, f, [&](const auto& c) { return fam.project(K, c); });
    };
    for (const auto& f : fs)
        if (!bi_is_zero(reduce_general(R1, project_poly(R1, f), B1)))
            throw basis_error("basis does not reduce the input system to zero over the "
                              "residue field");

    Ring cur_ring = R1;
    for (int step = 1; step <= k; ++step) {
        const unsigned precision = 1u << step;
        Ring R2 = fam.ring(precision);
        CellParameters<Ring> lifted;
        lifted.mode = cur.mode;
        lifted.seg = cur.seg;
        for (const auto& l : cur.lambda)
            lifted.lambda.push_back(fam.carry(cur_ring, R2, l));
        std::vector<BiPoly<Ring>> fs2;
        fs2.reserve(fs.size());
        for (const auto& f : fs)
            fs2.push_back(project_poly(R2, f));
        const auto t0 = std::chrono::steady_clock::now();
        cur = lift_one_step(R2, fs2, lifted).first;
        if (progress) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            progress(step, precision, dt.count());
        }
        cur_ring = std::move(R2);
    }

    LiftOutcome<Family> out{std::move(cur_ring), {}, {}};
    out.params = std::move(cur);
    out.basis = k == 0 ? basis_mod : basis_from_parameters(out.ring, out.params);
    return out;
}

} // namespace bivar
