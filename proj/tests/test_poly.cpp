#include "support.hpp"

using namespace bivar;
using ts::P;
using ts::slow_mul;

TEST_CASE("polynomial text round trips", "[poly]") {
    Rationals Q;
    std::string s = "y^4 + 17/14*x*y - 17/7*x^2";
    CHECK(poly_to_text(Q, P(Q, s)) == s);
    CHECK(bi_equal(Q, P(Q, "y**4+17/14 x y - 17/7 x^2"), P(Q, s)));
    CHECK(poly_to_text(Q, P(Q, "x - x")) == "0");
    CHECK(poly_to_text(Q, P(Q, "-x + 2")) == "-x + 2");
    CHECK(poly_to_text(Q, P(Q, "3*x*x*y")) == "3*x^2*y");

    ZmodPk F(11, 1);
    CHECK(poly_to_text(F, P(F, "-12*x*y^5 - 20*x^2*y^4")) == "10*x*y^5 + 2*x^2*y^4");
    CHECK(bi_equal(F, P(F, "17/14*x"), P(F, "2*x")));

    Tadic S(5, 3);
    std::string ts_text = "(1+2*t)*x*y^3 + (t^2)*y + 3*x";
    CHECK(poly_to_text(S, P(S, ts_text)) == "(1+2*t)*x*y^3 + (t^2)*y + 3*x");
}

TEST_CASE("polynomial parse errors", "[poly]") {
    Rationals Q;
    CHECK_THROWS_AS(P(Q, ""), parse_error);
    CHECK_THROWS_AS(P(Q, "x +"), parse_error);
    CHECK_THROWS_AS(P(Q, "x y +* 2"), parse_error);
    CHECK_THROWS_AS(P(Q, "2*"), parse_error);
    CHECK_THROWS_AS(P(Q, "z"), parse_error);
    CHECK_THROWS_AS(P(Q, "x^"), parse_error);
    CHECK_THROWS_AS(P(Q, "(1+2"), parse_error);
}

TEST_CASE("univariate division", "[poly]") {
    Rationals Q;
    auto f = P(Q, "x^3 + 2*x + 1").rows[0];
    auto g = P(Q, "x^2 + 1").rows[0];
    auto [q, r] = uni_divrem(Q, f, g);
    CHECK(uni_equal(Q, q, P(Q, "x").rows[0]));
    CHECK(uni_equal(Q, r, P(Q, "x + 1").rows[0]));
    CHECK_THROWS_AS(uni_exact_div(Q, f, g), error);
    CHECK(uni_equal(Q, uni_exact_div(Q, uni_mul(Q, f, g), g), f));
    CHECK_THROWS_AS(uni_divrem(Q, f, uni_zero(Q)), error);

    // unit but non-monic leading coefficient
    ZmodPk F(11, 1);
    Rng rng(5);
    auto gen = [&] { return random_elem(F, rng); };
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_uni(F, rng, rng.uniform(0, 9), 0.7, gen);
        auto b = random_uni(F, rng, rng.uniform(0, 5), 0.7, gen);
        if (uni_is_zero(b))
            continue;
        auto [qq, rr] = uni_divrem(F, a, b);
        CHECK(uni_deg(rr) < uni_deg(b));
        auto back = uni_add(F, uni_mul(F, qq, b), rr);
        CHECK(uni_equal(F, back, a));
    }

    // non-unit leading coefficient is rejected
    ZmodPk Z4(2, 2);
    CHECK_THROWS_AS(uni_divrem(Z4, P(Z4, "x^2").rows[0], P(Z4, "2*x + 1").rows[0]), error);
}

TEST_CASE("division with respect to y over R[x]/m", "[poly]") {
    ZmodPk F(11, 1);
    auto f = P(F, "y^4 + 2*x*y + 7*x^2");
    auto g = P(F, "y^3 + 5*x^2");
    auto m = P(F, "x^3").rows[0];
    auto [q, r] = divrem_y_mod(F, f, g, m);
    CHECK(bi_equal(F, q, P(F, "y")));
    CHECK(bi_equal(F, r, P(F, "2*x*y + 7*x^2 + 6*x^2*y")));

    // random property: f = q*g + r mod m, deg_y r < deg_y g, rows reduced
    Rng rng(17);
    auto gen = [&] { return random_elem(F, rng); };
    for (int trial = 0; trial < 100; ++trial) {
        auto ff = random_bi_box(F, rng, 6, 7, 0.6, gen);
        auto mm = uni_add(F, uni_x_power(F, rng.uniform(1, 4)),
                          random_uni(F, rng, 0, 0.8, gen)); // monic
        int ey = rng.uniform(1, 4);
        auto gg = random_bi_box(F, rng, uni_deg(mm), ey, 0.6, gen);
        gg = bi_add(F, gg, bi_monomial(F, F.one(), 0, ey)); // top y-row = 1
        auto [qq, rr] = divrem_y_mod(F, ff, gg, mm);
        CHECK(bi_deg_y(rr) < bi_deg_y(gg));
        CHECK(bi_deg_x(rr) < uni_deg(mm));
        CHECK(bi_deg_x(qq) < uni_deg(mm));
        auto back = bi_add(F, slow_mul(F, qq, gg), rr);
        CHECK(bi_is_zero(bi_rem_x(F, bi_sub(F, back, ff), mm)));
    }

    CHECK_THROWS_AS(divrem_y_mod(F, f, P(F, "x*y"), m), error); // top row not constant
}

TEST_CASE("multiplication through one variable", "[poly]") {
    Rng rng(29);
    ZmodPk F(101, 1);
    auto gen = [&] { return random_elem(F, rng); };
    for (int trial = 0; trial < 150; ++trial) {
        auto a = random_bi_box(F, rng, rng.uniform(1, 8), rng.uniform(1, 8), 0.5, gen);
        auto b = random_bi_box(F, rng, rng.uniform(1, 8), rng.uniform(1, 8), 0.5, gen);
        CHECK(bi_equal(F, kronecker_multiply(F, a, b), slow_mul(F, a, b)));
    }
    Rationals Q;
    auto qgen = [&] { return random_elem(Q, rng, 9); };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_bi_box(Q, rng, 5, 4, 0.5, qgen);
        auto b = random_bi_box(Q, rng, 3, 6, 0.5, qgen);
        CHECK(bi_equal(Q, kronecker_multiply(Q, a, b), slow_mul(Q, a, b)));
    }
    CHECK(bi_is_zero(kronecker_multiply(Q, bi_zero(Q), P(Q, "x"))));
}

TEST_CASE("segment-aware multiplication", "[poly]") {
    Rng rng(31);
    ZmodPk F(101, 1);
    auto gen = [&] { return random_elem(F, rng); };
    for (int trial = 0; trial < 150; ++trial) {
        InitialSegment t = random_staircase(rng, rng.uniform(1, 10), 400, 48);
        int ax = rng.uniform(1, 6), ay = rng.uniform(1, 6);
        auto a = random_bi_box(F, rng, ax, ay, 0.6, gen);
        auto b = random_bi_segment(F, rng, t, 0.6, gen);
        CHECK(bi_equal(F, multiply_segment(F, a, ax, ay, b, t), slow_mul(F, a, b)));
    }

    InitialSegment t = segment_from_generators({{0, 2}, {2, 0}});
    ZmodPk F11(11, 1);
    CHECK_THROWS_AS(multiply_segment(F11, P(F11, "x^5"), 2, 2, P(F11, "x"), t), error);
    CHECK_THROWS_AS(multiply_segment(F11, P(F11, "x"), 2, 2, P(F11, "x^2*y^2"), t), error);
}

TEST_CASE("rowwise division", "[poly]") {
    ZmodPk F(11, 1);
    auto f = P(F, "x^3*y + 5*x^2 + x");
    auto m = P(F, "x^2").rows[0];
    auto [d, r] = bi_divrem_x(F, f, m);
    CHECK(bi_equal(F, d, P(F, "x*y + 5")));
    CHECK(bi_equal(F, r, P(F, "x")));
    CHECK(bi_equal(F, bi_rem_x(F, f, m), r));
    CHECK(bi_equal(F, bi_div_x(F, f, m), d));
    CHECK_THROWS_AS(bi_exact_div_x(F, f, m), error);
    CHECK(bi_equal(F, bi_exact_div_x(F, bi_mul_uni(F, f, m), m), f));
}

TEST_CASE("support predicates and building blocks", "[poly]") {
    ZmodPk F(11, 1);
    InitialSegment t = segment_from_generators({{0, 4}, {1, 3}, {2, 1}, {4, 0}});
    CHECK(bi_supported_on(F, P(F, "y^3 + 3*x*y^2 + x^3"), t));
    CHECK(!bi_supported_on(F, P(F, "y^4"), t));
    CHECK(!bi_supported_on(F, P(F, "x^2*y"), t));
    CHECK(bi_supported_in_box(F, P(F, "x*y + 3"), 2, 2));
    CHECK(!bi_supported_in_box(F, P(F, "x^2*y"), 2, 2));

    CHECK(bi_equal(F, bi_shift_x(F, P(F, "y + 1"), 2), P(F, "x^2*y + x^2")));
    CHECK(bi_equal(F, bi_shift_y(F, P(F, "x + 1"), 3), P(F, "x*y^3 + y^3")));
    CHECK(bi_deg_x(P(F, "x^4*y + y^2")) == 4);
    CHECK(bi_deg_y(P(F, "x^4*y + y^2")) == 2);
    auto e = bi_coeff(F, P(F, "7*x^2*y^3"), 2, 3);
    CHECK(F.equal(e, F.from_integer(7)));
}
