#include <doctest.h>

#include "test_util.hpp"

using namespace crsym;
using testutil::F;
using testutil::P;

TEST_CASE("polynomial grammar") {
    CHECK(P("Re(z1 * conj(z2)^2)") ==
          Poly::monomial(Monomial{{1, 0, 0, 2, 0, 0}}, Gauss(rat(1, 2))) +
              Poly::monomial(Monomial{{0, 2, 1, 0, 0, 0}}, Gauss(rat(1, 2))));
    CHECK(P("z1*conj(z1) + z2*conj(z2)") ==
          Poly::monomial(Monomial{{1, 0, 1, 0, 0, 0}}, Gauss(1)) +
              Poly::monomial(Monomial{{0, 1, 0, 1, 0, 0}}, Gauss(1)));
    // zb spelling, ** synonym, whitespace insensitivity
    CHECK(P("z1*zb2^2+z2 ** 2*zb1") == P("z1*conj(z2)^2 + conj(z1)*z2^2"));
    CHECK(P("3/2 * z1*zb1") == P("z1*conj(z1)").scaled(Gauss(rat(3, 2))));
    CHECK(P("Im(i*z1*conj(z1))") == P("z1*conj(z1)"));
    CHECK(P("-(z1*zb1) + 2*z1*zb1") == P("z1*zb1"));
}

TEST_CASE("polynomial rejections") {
    CHECK_THROWS_AS(P("z1^2"), Error); // not real
    try {
        P("z1 + w");
    } catch (const ParseError& e) {
        CHECK(e.code() == Errc::w_illegal);
        CHECK(e.diagnostic().offset == 5); // points at the w token
    }
    CHECK_THROWS_AS(P("w + conj(w)"), Error);       // w illegal
    CHECK_THROWS_AS(P("u^2"), Error);               // u illegal
    CHECK_THROWS_AS(P("z1*"), ParseError);
    CHECK_THROWS_AS(P("q1"), ParseError);
    CHECK_THROWS_AS(P("z1/z2"), ParseError);        // division by non-constant

    try {
        P("z1*conj(z2");
    } catch (const ParseError& e) {
        CHECK(e.diagnostic().offset == 10);
        CHECK(e.diagnostic().line == 1);
        CHECK(e.diagnostic().column == 11);
        CHECK(!e.diagnostic().expected.empty());
    }
}

TEST_CASE("field grammar") {
    VectorField y = F("i*z2^2*d/dz1");
    CHECK(y.f1 == Poly::monomial(Monomial{{0, 2, 0, 0, 0, 0}}, Gauss::i()));
    CHECK(y.f2.is_zero());
    CHECK(y.g.is_zero());

    VectorField t = F("z1^2*d/dz1 - z1*z2*d/dz2");
    CHECK(t.f1 == Poly::monomial(Monomial{{2, 0, 0, 0, 0, 0}}, Gauss(1)));
    CHECK(t.f2 == Poly::monomial(Monomial{{1, 1, 0, 0, 0, 0}}, Gauss(-1)));

    // w-dependent coefficients are allowed in fields
    VectorField e = F("1/3*z1*d/dz1 + 1/3*z2*d/dz2 + w*d/dw");
    CHECK(e == euler_field(Weight{rat(1, 3), rat(1, 3)}));

    try {
        F("conj(z1)*d/dz1");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.code() == Errc::antiholomorphic_coefficient);
    }
    CHECK_THROWS_AS(F("zb1*d/dz2"), Error);
    CHECK_THROWS_AS(F("u*d/dz1"), Error);
    CHECK_THROWS_AS(F("d/dz1 * d/dz2"), ParseError);
    CHECK_THROWS_AS(F("z1 + d/dz1"), ParseError);
    CHECK_THROWS_AS(F("z1*z2"), Error); // no marker
    CHECK(F("0") == VectorField{});
}

TEST_CASE("print-parse identity on random polynomials and fields") {
    Rng rng(71);
    for (int k = 0; k < 200; ++k) {
        Poly p = testutil::random_real_poly(rng);
        if (p.is_zero()) continue;
        CHECK(parse_real_poly(p.str()) == p);
    }
    for (int k = 0; k < 200; ++k) {
        VectorField f = testutil::random_field(rng);
        CHECK(parse_field(f.str()) == f);
    }
}

TEST_CASE("model files") {
    ModelFile f1 = parse_model_file("weights: 1/3, 1/3\nRe(z1*conj(z2)^2)\n");
    REQUIRE(f1.weight.has_value());
    CHECK(*f1.weight == Weight{rat(1, 3), rat(1, 3)});
    CHECK(f1.poly == P("Re(z1*conj(z2)^2)"));

    ModelFile f2 = parse_model_file("\n  \nz1*conj(z1) + z2*conj(z2)\n");
    CHECK_FALSE(f2.weight.has_value());
    CHECK(f2.poly == P("z1*conj(z1) + z2*conj(z2)"));

    // multi-line expression
    ModelFile f3 = parse_model_file("z1*conj(z1)\n + z2*conj(z2)");
    CHECK(f3.poly == f2.poly);
}
