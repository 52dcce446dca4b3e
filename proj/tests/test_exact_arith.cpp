#include <doctest.h>

#include "testutil.hpp"

using namespace holonomica;
using testutil::poly_from_text;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4/2") == Rat(-2));
    CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), input_error);
    CHECK_THROWS_AS(parse_rat("abc"), input_error);
}

TEST_CASE("Gaussian rationals") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    CHECK(parse_gauss("1/2+3/4*i") == GaussRat(Rat(1, 2), Rat(3, 4)));
    CHECK(parse_gauss("-i") == GaussRat(Rat(0), Rat(-1)));
    CHECK(parse_gauss("2*i") == GaussRat(Rat(0), Rat(2)));
    CHECK(parse_gauss("1-1/2*i") == GaussRat(Rat(1), Rat(-1, 2)));
    GaussRat a(Rat(3), Rat(-2));
    CHECK(a / a == GaussRat(1));
    CHECK(gauss_to_string(parse_gauss("0-1/2*i")) == "0-1/2*i");
}

TEST_CASE("poly gcd examples") {
    PolyQ a = poly_from_text("z^2-1");
    PolyQ b = poly_from_text("z-1");
    CHECK(poly_gcd(a, b) == b);
}

TEST_CASE("poly divrem examples") {
    auto [q, r] = PolyQ::divrem(poly_from_text("4*z^2-4"), poly_from_text("z-1"));
    CHECK(q == poly_from_text("4*z+4"));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(PolyQ::divrem(poly_from_text("z"), PolyQ::zero()), precondition_error);
}

TEST_CASE("zero polynomial is absorbing and has sentinel degree") {
    PolyQ p = poly_from_text("3*z^5-1/2");
    CHECK((PolyQ::zero() * p).is_zero());
    CHECK(PolyQ::zero().degree() == kZeroPolyDegree);
    CHECK(kZeroPolyDegree < p.degree());
}

TEST_CASE("poly_eval examples") {
    CHECK(poly_from_text("2*z").eval(Rat(1)) == Rat(2));
    PolyQ p = poly_from_text("7-3*z+z^4");
    CHECK(p.eval(Rat(0)) == p.constant_coeff());
    CHECK(poly_from_text("4*z^2-1").eval(Rat(1)) == Rat(3));
}

TEST_CASE("integer_roots examples") {
    PolyQ n = PolyQ::variable();
    CHECK(integer_roots(n - PolyQ::constant(Rat(3))) == std::vector<Int>{Int(3)});
    CHECK(integer_roots(n * n + PolyQ::one()).empty());
    // (n-3)(2n-1): rational root 1/2 excluded.
    PolyQ p = (n - PolyQ::constant(Rat(3))) * (Rat(2) * n - PolyQ::one());
    CHECK(integer_roots(p) == std::vector<Int>{Int(3)});
    CHECK_THROWS_AS(integer_roots(PolyQ::zero()), precondition_error);
    // Root at zero.
    CHECK(integer_roots(n * n - Rat(4) * n) == std::vector<Int>{Int(0), Int(4)});
}

TEST_CASE("ring axioms on randomized polynomials") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyQ a = testutil::random_polyq();
        PolyQ b = testutil::random_polyq();
        PolyQ c = testutil::random_polyq();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("divrem reconstruction on randomized pairs") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyQ a = testutil::random_polyq(8);
        PolyQ b = testutil::random_polyq(4);
        if (b.is_zero()) continue;
        auto [q, r] = PolyQ::divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("eval is a ring morphism") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyG a = testutil::random_polyg();
        PolyG b = testutil::random_polyg();
        GaussRat x = testutil::random_gauss();
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("rational functions stay canonical") {
    PolyQ z = PolyQ::variable();
    RatFuncQ f(z * z - PolyQ::one(), Rat(2) * z - PolyQ::constant(Rat(2)));
    // (z^2-1)/(2z-2) = (z+1)/2 after reduction and monic normalization.
    CHECK(f.den() == PolyQ::one());
    CHECK(f.num() == poly_from_text("1/2*z+1/2"));
    for (int trial = 0; trial < 20; ++trial) {
        PolyQ a = testutil::random_polyq(5);
        PolyQ b = testutil::random_polyq(4);
        if (b.is_zero()) continue;
        RatFuncQ r(a, b);
        // Normalization is idempotent.
        RatFuncQ again(r.num(), r.den());
        CHECK(again == r);
        CHECK(r.den().leading_coeff() == Rat(1));
        if (!r.num().is_zero()) CHECK(poly_gcd(r.num(), r.den()).degree() == 0);
    }
}

TEST_CASE("ratfunc derivative obeys the quotient rule") {
    PolyQ z = PolyQ::variable();
    RatFuncQ f(PolyQ::one(), PolyQ::one() - z);  // 1/(1-z)
    RatFuncQ expected(PolyQ::one(), (PolyQ::one() - z) * (PolyQ::one() - z));
    CHECK(f.derivative() == expected);
}
