#include <doctest.h>

#include "test_util.hpp"

using namespace crsym;
using testutil::F;
using testutil::M;
using testutil::P;

TEST_CASE("field application") {
    VectorField y = F("i*z2^2*d/dz1");
    CHECK(apply(y, Poly::variable(Var::z1)) ==
          Poly::monomial(Monomial{{0, 2, 0, 0, 0, 0}}, Gauss::i()));

    VectorField t = F("z1^2*d/dz1 - z1*z2*d/dz2");
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
            Monomial m;
            m.exp(Var::z1) = static_cast<int32_t>(a);
            m.exp(Var::z2) = static_cast<int32_t>(b);
            Monomial up = m;
            up.exp(Var::z1) += 1;
            CHECK(apply(t, Poly::monomial(m, Gauss(1))) ==
                  Poly::monomial(up, Gauss(rat(a - b))));
        }

    CHECK(apply(y, Poly::constant(Gauss(7))).is_zero());
}

TEST_CASE("field weight") {
    Weight third{rat(1, 3), rat(1, 3)};
    VectorField w_field = F("d/dw");
    CHECK(field_weight(w_field, third) == -1);
    CHECK(field_weight(F("i*z2^2*d/dz1"), third) == rat(1, 3));
    CHECK(field_weight(euler_field(third), third) == 0);
    Weight mixed{rat(1, 2), rat(1, 4)};
    CHECK(field_weight(euler_field(mixed), mixed) == 0);
    CHECK_THROWS_AS(field_weight(VectorField{}, third), Error);
    CHECK_THROWS_AS(field_weight(F("z1*d/dz1 + z2^2*d/dz2"), third), Error);
}

TEST_CASE("rigidity") {
    CHECK(is_rigid(F("i*z2^2*d/dz1")));
    CHECK_FALSE(is_rigid(euler_field(Weight{rat(1, 3), rat(1, 3)})));
    CHECK(is_rigid(F("d/dw")));
}

TEST_CASE("euler field") {
    Weight w{rat(1, 2), rat(1, 4)};
    VectorField e = euler_field(w);
    CHECK(e.f1 == Poly::variable(Var::z1).scaled(Gauss(rat(1, 2))));
    CHECK(e.g == Poly::variable(Var::w));
    CHECK(e.str() == "(1/2*z1)*d/dz1 + (1/4*z2)*d/dz2 + (w)*d/dw");
}

TEST_CASE("tangency residual") {
    Model m = M("Re(z1*conj(z2)^2)");
    CHECK(tangency_residual(F("i*z2^2*d/dz1"), m).is_zero());
    CHECK(tangency_residual(F("d/dw"), m).is_zero());
    CHECK(tangency_residual(F("d/dz1"), m) == -P("Re(conj(z2)^2)"));
    CHECK_THROWS_AS(tangency_residual(euler_field(m.weight), m), Error);
}

TEST_CASE("tangency is real-linear") {
    Model m = M("Re(z1*conj(z2)^2)");
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        VectorField x = testutil::random_field(rng);
        VectorField y = testutil::random_field(rng);
        if (!is_rigid(x) || !is_rigid(y)) continue;
        Gauss a(rat(rng.range(-3, 3)));
        Gauss b(rat(rng.range(-3, 3)));
        Poly lhs = tangency_residual(x.scaled(a) + y.scaled(b), m);
        Poly rhs = tangency_residual(x, m).scaled(a) + tangency_residual(y, m).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tangent fields are closed under bracket") {
    Model m = M("Re(z1*conj(z2)^2)");
    // two tangent fields: the generalized rotation and a rigid rotation
    VectorField a = F("i*z2^2*d/dz1");
    VectorField b = F("i*z1*d/dz1 + 1/2*i*z2*d/dz2");
    REQUIRE(tangency_residual(a, m).is_zero());
    REQUIRE(tangency_residual(b, m).is_zero());
    CHECK(tangency_residual(bracket(a, b), m).is_zero());
}

TEST_CASE("bracket") {
    VectorField w_field = F("d/dw");
    VectorField y = F("i*z2^2*d/dz1");
    CHECK(bracket(w_field, y).is_zero());
    Weight third{rat(1, 3), rat(1, 3)};
    CHECK(bracket(w_field, euler_field(third)) == w_field);
    Rng rng(9);
    for (int k = 0; k < 10; ++k) {
        VectorField x = testutil::random_field(rng);
        CHECK(bracket(x, x).is_zero());
        // Jacobi identity
        VectorField u = testutil::random_field(rng);
        VectorField v = testutil::random_field(rng);
        VectorField j = bracket(x, bracket(u, v)) + bracket(u, bracket(v, x)) +
                        bracket(v, bracket(x, u));
        CHECK(j.is_zero());
    }
}

TEST_CASE("field classification") {
    Weight third{rat(1, 3), rat(1, 3)};
    CHECK(classify_field(F("i*z2^2*d/dz1"), third) == FieldClass::GeneralizedRotation);
    CHECK(classify_field(F("d/dz2"), third) == FieldClass::Shift);
    CHECK(classify_field(F("i*z1*d/dz1"), third) == FieldClass::Rotation);
    CHECK(classify_field(F("d/dw"), third) == FieldClass::Shift);
    CHECK(classify_field(euler_field(third), third) == FieldClass::Other);
    CHECK(classify_field(F("w*d/dw"), third) == FieldClass::Other);
}

TEST_CASE("euler identity on models") {
    CHECK(euler_tangency_holds(M("Re(z1*conj(z2)^2)")));
    CHECK(euler_tangency_holds(M("z1*conj(z1) + z2*conj(z2)")));
}

TEST_CASE("field rendering round-trip") {
    VectorField y = F("i*z2^2*d/dz1");
    CHECK(y.str() == "(i*z2^2)*d/dz1 + (0)*d/dz2 + (0)*d/dw");
    CHECK(parse_field(y.str()) == y);
}
