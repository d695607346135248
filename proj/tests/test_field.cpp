/**
 * @file test_field.cpp
 * @brief Unit tests for the exact coefficient layer (Gaussian rationals,
 *        Laurent monomials, polynomials, rational functions).
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kernel/field.hpp"

using namespace kernel;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational one(1);
    GaussianRational i = GaussianRational::i();

    // (1 + i) * (1 - i) = 2
    GaussianRational p = (one + i) * (one - i);
    CHECK(p == GaussianRational(2));

    // i^2 = -1, division brings it back
    CHECK(i * i == GaussianRational(-1));
    CHECK((one / i) == -i);
    CHECK_THROWS_AS(one / GaussianRational(0), DivisionByZero);

    CHECK(GaussianRational(mpq_class(1, 2)).render() == "1/2");
    CHECK(i.render() == "i");
    CHECK((-i).render() == "-i");
    CHECK((one - i - i).render() == "1-2*i");
    CHECK(GaussianRational(0).render() == "0");
}

TEST_CASE("monomial order follows the registry") {
    // Registry order starts Q < k0 < k1 < u0 < u1 < ...
    ParamMonomial q2 = ParamMonomial::variable(var_id("Q"), 2);
    ParamMonomial qm1 = ParamMonomial::variable(var_id("Q"), -1);
    ParamMonomial unit;
    CHECK(qm1 < unit);
    CHECK(unit < q2);
    CHECK(qm1 < q2);

    // Q dominates: Q^1 > k0^5 because Q is earlier in the registry.
    ParamMonomial q1 = ParamMonomial::variable(var_id("Q"), 1);
    ParamMonomial k05 = ParamMonomial::variable(var_id("k0"), 5);
    CHECK(k05 < q1);

    ParamMonomial prod = q2 * qm1;
    CHECK(prod == ParamMonomial::variable(var_id("Q"), 1));
    CHECK((q2 / q2).is_unit());
    CHECK(q2.pow(-2) == ParamMonomial::variable(var_id("Q"), -4));
}

TEST_CASE("polynomial arithmetic and rendering") {
    Poly Q = Poly::variable("Q");
    Poly k0 = Poly::variable("k0");
    Poly u1 = Poly::variable("u1");

    Poly p = Q * Q * k0 - u1 * Poly(2) + Poly(1);
    CHECK(p.render() == "Q^2*k0 - 2*u1 + 1");
    CHECK(p.leading_monomial() == (ParamMonomial::variable(var_id("Q"), 2) * ParamMonomial::variable(var_id("k0"))));

    Poly zero = p - p;
    CHECK(zero.is_zero());
    CHECK(zero.render() == "0");

    // Laurent exponents are ordinary group elements.
    Poly lau = Poly::variable("Q", -2) * Poly::variable("Q", 3);
    CHECK(lau == Q);

    // Mixed complex coefficients are parenthesized.
    Poly mix = Q * GaussianRational(mpq_class(1), mpq_class(1)) + Poly(1);
    CHECK(mix.render() == "(1+i)*Q + 1");
}

TEST_CASE("exact division") {
    Poly Q = Poly::variable("Q");
    Poly one(1);

    Poly a = Q.pow(4) - one; // Q^4 - 1
    Poly b = Q.pow(2) - one; // Q^2 - 1
    auto quo = divide_exact(a, b);
    REQUIRE(quo.has_value());
    CHECK(*quo == Q.pow(2) + one);

    CHECK(!divide_exact(Q.pow(2) + one, Q + one).has_value());

    // Monomial content is handled: (Q^3 - Q) / (Q^2 - 1) = Q.
    auto quo2 = divide_exact(Q.pow(3) - Q, b);
    REQUIRE(quo2.has_value());
    CHECK(*quo2 == Q);

    // Laurent content: (Q - Q^-1) / (Q^2 - 1) = Q^-1.
    auto quo3 = divide_exact(Q - Poly::variable("Q", -1), b);
    REQUIRE(quo3.has_value());
    CHECK(*quo3 == Poly::variable("Q", -1));
}

TEST_CASE("rational function canonicalization") {
    RationalFunction Q = rf_Q();
    RationalFunction one = rf_int(1);

    // (1 - Q^4)/(1 - Q^2) equals 1 + Q^2 and collapses to a polynomial.
    RationalFunction r(Poly(1) - Poly::variable("Q", 4), Poly(1) - Poly::variable("Q", 2));
    CHECK(r.is_equal(one + Q * Q));
    CHECK(r.is_polynomial());

    // Monomial denominators are absorbed entirely.
    RationalFunction m(Poly(1) + Poly::variable("Q", 2), Poly::variable("Q", 1));
    CHECK(m.is_polynomial());
    CHECK(m.is_equal(rf_Q(-1) + rf_Q(1)));

    // A genuinely unreduced quotient still compares correctly.
    RationalFunction u1 = rf_var("u1");
    RationalFunction s = one / (one + u1 * u1) + (u1 * u1) / (one + u1 * u1);
    CHECK(s.is_equal(one));

    CHECK_THROWS_AS(RationalFunction(Poly(1), Poly()), DivisionByZero);
    CHECK_THROWS_AS(rf_int(0).inverse(), DivisionByZero);

    // Denominator leading coefficient is normalized to 1.
    RationalFunction n(Poly(1), Poly(1) - Poly::variable("Q", 2));
    CHECK(n.den().leading_coefficient().is_one());
    CHECK(n.den().render() == "Q^2 - 1");
    CHECK(n.render() == "(-1)/(Q^2 - 1)");
}

TEST_CASE("rational function arithmetic") {
    RationalFunction Q = rf_Q();
    RationalFunction q = Q * Q;

    // q^(1/2) - q^(-1/2) times its conjugate combination.
    RationalFunction s = (Q - inv(Q)) * (Q + inv(Q));
    CHECK(s.is_equal(q - inv(q)));

    CHECK(Q.pow(-3).is_equal(inv(Q * Q * Q)));
    CHECK((Q - Q).is_zero());
    CHECK(bar(Q).is_equal(Q - inv(Q)));

    CHECK(rf_frac(3, 6).is_equal(rf_frac(1, 2)));
}

TEST_CASE("substitution is simultaneous and exact") {
    RationalFunction a = rf_var("a");
    RationalFunction b = rf_var("b");
    RationalFunction u1 = rf_var("u1");
    RationalFunction k1 = rf_var("k1");

    // ab with a -> -u1/k1, b -> k1*u1 gives -u1^2.
    RationalFunction ab = a * b;
    RationalFunction sub = ab.substitute(make_subst({{"a", -u1 / k1}, {"b", k1 * u1}}));
    CHECK(sub.is_equal(-(u1 * u1)));

    // Simultaneity: swapping two variables through each other.
    RationalFunction expr = a - b;
    RationalFunction swapped = expr.substitute(make_subst({{"a", b}, {"b", a}}));
    CHECK(swapped.is_equal(b - a));

    // Zero into a negative power throws.
    RationalFunction u0inv = rf_var("u0", -1);
    CHECK_THROWS_AS(u0inv.substitute(make_subst({{"u0", rf_int(0)}})), SubstituteZeroIntoNegativePower);

    // Zero into a positive power is fine.
    RationalFunction lin = a + rf_int(5);
    CHECK(lin.substitute(make_subst({{"a", rf_int(0)}})).is_equal(rf_int(5)));

    // Substituting into a denominator that then vanishes throws.
    RationalFunction pole = rf_int(1) / (rf_var("Q") - rf_int(1));
    CHECK_THROWS_AS(pole.substitute(make_subst({{"Q", rf_int(1)}})), DivisionByZero);
}

TEST_CASE("rendering is deterministic") {
    RationalFunction r = rf_var("k0") + rf_var("Q", 2) * rf_var("u1", -1);
    CHECK(r.render() == "Q^2*u1^-1 + k0");
    std::string first = r.render();
    for (int rep = 0; rep < 3; ++rep) { CHECK(r.render() == first); }
}
