#include "support.hpp"

using namespace bivar;

static_assert(CoefficientRing<Rationals>);
static_assert(CoefficientRing<ZmodPk>);
static_assert(CoefficientRing<Tadic>);
static_assert(CoefficientRing<PolyFp>);
static_assert(CoefficientRing<JetRing<ZmodPk>>);
static_assert(CoefficientRing<JetRing<Rationals>>);

TEST_CASE("rational arithmetic and text", "[rings]") {
    Rationals Q;
    auto a = *Q.parse_text("17/14");
    auto b = *Q.parse_text("-3");
    CHECK(Q.to_text(a) == "17/14");
    CHECK(Q.to_text(Q.mul(a, b)) == "-51/14");
    CHECK(Q.to_text(Q.add(a, Q.invert(b))) == "37/42");
    CHECK(Q.is_unit(b));
    CHECK(!Q.is_unit(Q.zero()));
    CHECK(Q.equal(Q.mul(b, Q.invert(b)), Q.one()));
    CHECK_THROWS_AS(Q.invert(Q.zero()), error);
    CHECK(!Q.parse_text("1/0"));
    CHECK(!Q.parse_text("a"));
}

TEST_CASE("integers mod p^k", "[rings]") {
    ZmodPk R(11, 2);
    CHECK(R.q == 121);
    CHECK(R.equal(R.invert(R.from_integer(14)), R.from_integer(26)));
    CHECK(R.equal(R.invert(R.from_integer(9)), R.from_integer(27)));
    CHECK(R.is_unit(R.from_integer(14)));
    CHECK(!R.is_unit(R.from_integer(11)));
    CHECK(!R.is_unit(R.from_integer(0)));
    CHECK_THROWS_AS(R.invert(R.from_integer(22)), error);
    CHECK(R.equal(R.from_integer(-1), R.from_integer(120)));
    CHECK(R.equal(R.neg(R.zero()), R.zero()));
    CHECK(R.name() == "Zpk:11:2");

    ZmodPk F(11, 1);
    CHECK(F.name() == "Fp:11");
    CHECK(F.equal(F.invert(F.from_integer(3)), F.from_integer(4)));
    // a/b literals invert the denominator
    CHECK(F.equal(*F.parse_text("17/14"), F.from_integer(2)));
    CHECK(!F.parse_text("1/11"));

    // precision change: drop or reinject high digits
    CHECK(F.equal(reduce_precision(F, R.from_integer(57)), F.from_integer(2)));
    CHECK(R.equal(lift_precision(R, F.from_integer(7)), R.from_integer(7)));

    CHECK_THROWS_AS(ZmodPk(1, 1), error);
    CHECK_THROWS_AS(ZmodPk(11, 0), error);
}

TEST_CASE("truncated power series", "[rings]") {
    Tadic S(5, 3);
    auto a = *S.parse_text("1+2*t");
    auto b = *S.parse_text("1 + 3t"); // '*' between coefficient and t is optional
    CHECK(S.to_text(S.mul(a, b)) == "1+t^2"); // 1 + 5t + 6t^2
    CHECK(S.equal(S.mul(a, S.invert(a)), S.one()));
    CHECK(S.to_text(S.invert(a)) == "1+3*t+4*t^2");
    CHECK(S.is_unit(a));
    CHECK(!S.is_unit(*S.parse_text("t")));
    CHECK_THROWS_AS(S.invert(*S.parse_text("2*t")), error);
    CHECK(!S.parse_text("t^3")); // degree at or above the precision
    CHECK(S.equal(*S.parse_text("t^2 + t^2"), *S.parse_text("2*t^2")));

    Tadic S2(5, 2);
    CHECK(S2.equal(reduce_precision(S2, a), *S2.parse_text("1+2*t")));
    CHECK(S.equal(lift_precision(S, *S2.parse_text("1+2*t")), a));
}

TEST_CASE("polynomials in t over a prime field", "[rings]") {
    PolyFp K(5);
    auto a = *K.parse_text("2 + t");
    auto b = *K.parse_text("3");
    CHECK(K.to_text(K.mul(a, b)) == "1+3*t");
    CHECK(K.to_text(K.mul(a, a)) == "4+4*t+t^2");
    CHECK(K.is_unit(b));
    CHECK(!K.is_unit(a));
    CHECK_THROWS_AS(K.invert(a), error);
    CHECK(K.equal(K.mul(b, K.invert(b)), K.one()));
    CHECK(K.is_zero(K.sub(a, a)));
}

TEST_CASE("first-order jets", "[rings]") {
    JetRing<ZmodPk> J(ZmodPk(11, 1), 2);
    auto x = J.variable(J.base.from_integer(3), 0);
    auto y = J.variable(J.base.from_integer(5), 1);
    auto xy = J.mul(x, y);
    CHECK(J.base.equal(xy.c, J.base.from_integer(4)));  // 15 mod 11
    CHECK(J.base.equal(xy.g[0], J.base.from_integer(5)));
    CHECK(J.base.equal(xy.g[1], J.base.from_integer(3)));

    auto inv = J.invert(x); // 1/(3 + L1) = 4 - 16 L1 = 4 + 6 L1
    CHECK(J.base.equal(inv.c, J.base.from_integer(4)));
    CHECK(J.base.equal(inv.g[0], J.base.from_integer(6)));
    CHECK(J.equal(J.mul(x, inv), J.one()));

    // empty gradient is the same as an explicit zero gradient vector
    auto c7 = J.constant(J.base.from_integer(7));
    auto c7e = J.sub(J.add(c7, x), x);
    CHECK(J.equal(c7, c7e));
    CHECK(J.is_zero(J.sub(c7e, c7)));
    CHECK(!J.is_unit(J.variable(J.base.zero(), 1)));
    CHECK(J.is_unit(x));
}

TEST_CASE("operation counters", "[rings]") {
    OpCount ops;
    ZmodPk F(101, 1);
    F.ops = &ops;
    auto a = F.from_integer(7), b = F.from_integer(9);
    (void)F.add(a, b);
    (void)F.sub(a, b);
    (void)F.neg(a);
    (void)F.mul(a, b);
    (void)F.invert(b);
    CHECK(ops.add == 3);
    CHECK(ops.mul == 2);
    CHECK(ops.total() == 5);
    ops.reset();
    CHECK(ops.total() == 0);
}
