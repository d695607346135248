/**
 * @file test_qtorus.cpp
 * @brief Unit tests for the rank-3 quantum torus.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kernel/qtorus.hpp"

using namespace kernel;

namespace {
TorusElement E(int a, int b, int c) { return TorusElement::e(a, b, c); }
} // namespace

TEST_CASE("symplectic form and product phase") {
    CHECK(torus_omega({1, 0, 0}, {0, 1, 0}) == 1);
    CHECK(torus_omega({0, 1, 0}, {0, 0, 1}) == 1);
    CHECK(torus_omega({0, 0, 1}, {1, 0, 0}) == 1);
    CHECK(torus_omega({1, 1, 1}, {1, 0, 0}) == 0);

    // e^{S1} e^{S2} = Q^{-1} e^{S1+S2}
    TorusElement p = E(1, 0, 0) * E(0, 1, 0);
    CHECK(p == TorusElement::e(1, 1, 0, rf_Q(-1)));

    // Swapping the factors flips the phase: e^m e^n = Q^{-2 omega(m,n)} e^n e^m.
    TorusElement lhs = E(2, -1, 3) * E(0, 1, 1);
    int w = torus_omega({2, -1, 3}, {0, 1, 1});
    TorusElement rhs = (E(0, 1, 1) * E(2, -1, 3)).scale(rf_Q(-2 * w));
    CHECK(lhs == rhs);
}

TEST_CASE("associativity on sample triples") {
    // Deterministic sample exponents exercising mixed signs.
    const TorusExp ms[3] = {{1, -2, 0}, {0, 3, 1}, {-1, 1, 2}};
    const TorusExp ns[3] = {{2, 0, -1}, {1, 1, 1}, {0, -1, 3}};
    const TorusExp ks[3] = {{-2, 1, 1}, {3, 0, 0}, {1, 2, -2}};
    for (int t = 0; t < 3; ++t) {
        TorusElement A = TorusElement::e(ms[t][0], ms[t][1], ms[t][2], rf_var("k0"));
        TorusElement B = TorusElement::e(ns[t][0], ns[t][1], ns[t][2], rf_var("u1") + rf_int(1));
        TorusElement C = TorusElement::e(ks[t][0], ks[t][1], ks[t][2]) + TorusElement(1);
        CHECK((A * B) * C == A * (B * C));
    }
}

TEST_CASE("centrality") {
    CHECK(E(1, 1, 1).is_central());
    CHECK(E(-1, -1, -1).is_central());
    CHECK(!E(1, 0, 0).is_central());
    CHECK(!(E(1, 1, 1) + E(0, 1, 0)).is_central());
    CHECK(TorusElement(7).is_central());

    // Central elements commute with everything.
    TorusElement z = TorusElement::e(-1, -1, -1, rf_var("u0"));
    TorusElement x = E(2, 0, 1) + E(0, 1, 0);
    CHECK(z.commutator(x).is_zero());
}

TEST_CASE("inverses") {
    TorusElement t = TorusElement::e(1, 2, -1, rf_var("k0"));
    CHECK(t * t.inverse() == TorusElement(1));
    CHECK(t.inverse() * t == TorusElement(1));
    CHECK_THROWS_AS((E(1, 0, 0) + E(0, 1, 0)).inverse(), NoInverseAvailable);
}

TEST_CASE("classical limit") {
    // Q -> 1 is a ring homomorphism onto the commutative torus: products of
    // limits still pick up Q^{-omega} phases, which the final limit removes.
    TorusElement A = TorusElement::e(1, 0, 0, rf_Q(3)) + TorusElement::e(0, 1, 0, rf_var("k1"));
    TorusElement B = TorusElement::e(0, 0, 1, rf_Q(-2)) - TorusElement(1);
    CHECK((A * B).classical_limit() == (A.classical_limit() * B.classical_limit()).classical_limit());

    // Coefficient poles at Q = 1 are reported.
    TorusElement p = TorusElement::e(1, 0, 0, rf_int(1) / (rf_Q() - rf_int(1)));
    CHECK_THROWS_AS(p.classical_limit(), PoleAtQ1);
}

TEST_CASE("central specialisation e^{S1+S2+S3} = -i") {
    // e^{S1+S2+S3} collapses to the scalar -i.
    CHECK(E(1, 1, 1).reduce_central() == TorusElement(RationalFunction(-GaussianRational::i())));
    // Negative powers pick up +i per unit.
    TorusElement r = E(0, 0, -1).reduce_central();
    CHECK(r == TorusElement::e(1, 1, 0, RationalFunction(GaussianRational::i())));
    // The map kills exactly the ideal generated by e^{S1+S2+S3} + i.
    TorusElement gen = E(1, 1, 1) + TorusElement(RationalFunction(GaussianRational::i()));
    TorusElement y = E(2, 0, 1) * gen;
    CHECK(y.reduce_central().is_zero());
}

TEST_CASE("rendering") {
    TorusElement t = TorusElement::e(1, 0, -1, rf_Q(2)) + TorusElement::e(0, 2, 0, rf_var("k0")) - E(1, 1, 1);
    CHECK(t.render() == "k0·e^{2 S2} + Q^2·e^{S1 - S3} - e^{S1 + S2 + S3}");
    CHECK(TorusElement().render() == "0");
    CHECK(TorusElement(5).render() == "5");
}
