/**
 * @file spherical.cpp
 * @brief Symmetrisers, loop triples, skein relations, quantum cubics and
 *        Zhedanov images for the six embedded algebras.
 */

#include "kernel/spherical.hpp"

namespace kernel {

namespace {

using M = TorusMatrix2;
using E = TorusElement;

E sc(const RationalFunction &c) { return E(c); }
M Id(const E &c = E(1)) { return M::identity(c); }

RationalFunction q2() { return rf_Q(2); }   // q
RationalFunction qm() { return rf_Q(2) - rf_Q(-2); } // q - 1/q
RationalFunction qh() { return rf_Q(1) - rf_Q(-1); } // sqrt(q) - 1/sqrt(q)

struct Checker {
    std::vector<CheckOutcome> out;
    bool reduce = false;

    void operator()(const std::string &id, const std::string &anchor, const M &residual) {
        M r = reduce ? residual.reduce_central() : residual;
        CheckOutcome o;
        o.id = id;
        o.anchor = anchor;
        o.pass = r.is_zero();
        if (!o.pass) { o.residual = r.render(); }
        out.push_back(std::move(o));
    }
};

} // namespace

//-----------------------------------------------------------------------------
// Data tables
//-----------------------------------------------------------------------------

SphericalData spherical_data(const std::string &algebra_id) {
    EmbeddingAssignment g = embed(algebra_id);
    const M V0 = g.generators.at("V0");
    const M V1 = g.generators.at("V1");
    const M Vc0 = g.generators.at("Vc0");
    const M Vc1 = g.generators.at("Vc1");
    const RationalFunction k0 = rf_var("k0"), k1 = rf_var("k1"), u1 = rf_var("u1");

    SphericalData d;
    d.algebra_id = algebra_id;
    d.reduce = g.reduce_residuals;
    d.Vc1 = Vc1;
    d.u0 = u0_central();
    d.u0inv = d.u0.inverse();
    d.u0bar = d.u0 - d.u0inv;
    d.k0bar = bar(k0);
    d.k1bar = bar(k1);
    d.u1bar = bar(u1);

    const M one = Id();
    const M V1i = V1 - Id(sc(bar(k1)));     // V1^{-1} via its quadratic
    const M V1u = V1 + one;                 // unipotent substitute
    const M V0i = V0 - Id(sc(bar(k0)));
    const M V0u = V0 + one;
    const M Vc1i = Vc1 - Id(sc(bar(u1)));
    const M Vc1u = Vc1 + one;

    if (algebra_id == "H" || algebra_id == "H_V" || algebra_id == "H_IV" || algebra_id == "H_III") {
        d.e = (one + Vc1.scale(u1)).scale(RationalFunction(1) / (RationalFunction(1) + u1 * u1));
        d.S = Vc1.scale(rf_Q(-1)) - Vc1i.scale(rf_Q(1));
        d.sigma = rf_Q(-1) * u1 - rf_Q(1) / u1;
    } else {
        d.e = one + Vc1;
        d.S = Vc1.scale(rf_Q(-1)) - Vc1u.scale(rf_Q(1));
        d.sigma.reset();
    }

    if (algebra_id == "H") {
        d.X1 = Vc1 * V1 + V1i * Vc1i;
        d.X2 = Vc1 * V0 + V0i * Vc1i;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0i * V1i).scale(rf_Q(-1));
    } else if (algebra_id == "H_V") {
        d.X1 = Vc1 * V1 + V1i * Vc1i;
        d.X2 = Vc1 * V0 + V0u * Vc1i;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0u * V1i).scale(rf_Q(-1));
    } else if (algebra_id == "H_IV") {
        d.X1 = Vc1 * V1 + V1u * Vc1i;
        d.X2 = Vc1 * V0 + V0u * Vc1i;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0u * V1u).scale(rf_Q(-1));
    } else if (algebra_id == "H_III") {
        d.X1 = Vc1 * V1 + V1i * Vc1i;
        d.X2 = Vc1 * V0 + V0 * Vc1i;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0 * V1i).scale(rf_Q(-1));
    } else if (algebra_id == "H_II") {
        d.X1 = Vc1 * V1 + V1u * Vc1u;
        d.X2 = Vc1 * V0 + V0u * Vc1u;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0u * V1u).scale(rf_Q(-1));
    } else if (algebra_id == "H_I") {
        d.X1 = Vc1 * V1 + V1u * Vc1u;
        d.X2 = Vc1 * V0 + V0 * Vc1u;
        d.X3 = (V1 * V0).scale(rf_Q(1)) + (V0 * V1u).scale(rf_Q(-1));
    } else {
        throw UnknownAlgebra("no spherical data for: " + algebra_id);
    }

    // omega table.
    const E u0b = d.u0bar, u0i = d.u0inv;
    const RationalFunction k0b = d.k0bar, k1b = d.k1bar;
    const RationalFunction sig = rf_Q(-1) * u1 - rf_Q(1) / u1;
    if (algebra_id == "H") {
        d.omega1 = u0b.scale(k0b) + sc(k1b * sig);
        d.omega2 = u0b.scale(k1b) + sc(k0b * sig);
        d.omega3 = sc(k0b * k1b) + u0b.scale(sig);
        d.omega4 = sc(k0b * k0b + k1b * k1b) + u0b * u0b + sc(sig * sig) -
                   u0b.scale(k0b * k1b * sig) +
                   sc((RationalFunction(1) + q2()) * (RationalFunction(1) + q2()) / q2());
    } else if (algebra_id == "H_V") {
        d.omega1 = u0i;
        d.omega2 = -u0i.scale(k1b) - sc(sig);
        d.omega3 = sc(-k1b) - u0i.scale(sig);
        d.omega4 = sc(1) + u0i * u0i - u0i.scale(k1b * sig);
    } else if (algebra_id == "H_IV") {
        d.omega1 = u0i;
        d.omega2 = u0i;
        d.omega3 = sc(1) - u0i.scale(sig);
        d.omega4 = u0i * u0i + u0i.scale(sig);
    } else if (algebra_id == "H_III") {
        d.omega1 = E();
        d.omega2 = -u0i.scale(k1b);
        d.omega3 = -u0i.scale(sig);
        d.omega4 = u0i * u0i;
    } else if (algebra_id == "H_II") {
        d.omega1 = u0i;
        d.omega2 = u0i;
        d.omega3 = u0i.scale(rf_Q(1));
        d.omega4 = u0i * u0i - u0i.scale(rf_Q(1));
    } else { // H_I
        d.omega1 = E();
        d.omega2 = sc(1);
        d.omega3 = sc(rf_Q(1));
        d.omega4 = sc(1);
    }
    return d;
}

//-----------------------------------------------------------------------------
// Main verification battery
//-----------------------------------------------------------------------------

std::vector<CheckOutcome> check_spherical(const std::string &algebra_id) {
    const SphericalData d = spherical_data(algebra_id);
    const std::string &alg = d.algebra_id;
    Checker chk;
    chk.reduce = d.reduce;

    const M e = d.e, S = d.S, X1 = d.X1, X2 = d.X2, X3 = d.X3;
    const M one = Id();
    const E u0b = d.u0bar, u0i = d.u0inv;
    const RationalFunction k0b = d.k0bar, k1b = d.k1bar, u1b = d.u1bar;
    const RationalFunction u1 = rf_var("u1");
    const RationalFunction Qm = qm(), Qh = qh();

    chk("e-idempotent", "e^2 = e", e * e - e);
    chk("e-comm-X1", "[e, X1] = 0", e.commutator(X1));
    chk("e-comm-X2", "[e, X2] = 0", e.commutator(X2));
    chk("e-comm-X3", "[e, X3] = 0", e.commutator(X3));
    if (d.sigma) {
        chk("e-Vc1", "e Vc1 = u1 e", e * d.Vc1 - e.scale(u1));
        chk("e-S", "e S = sigma e", e * S - e.scale(*d.sigma));
    } else {
        chk("e-Vc1", "e Vc1 = 0", e * d.Vc1);
        chk("e-S", "e S = -q^(1/2) e", e * S + e.scale(rf_Q(1)));
    }

    // ---- unhatted skeins --------------------------------------------------
    M r1, r2, r3;
    if (alg == "H") {
        r1 = qcomm(X2, X1) - (X3.scale(Qm) - (Id(sc(k0b * k1b)) + S.scale(u0b)).scale(Qh));
        r2 = qcomm(X3, X2) - (X1.scale(Qm) - (Id(u0b.scale(k0b)) + S.scale(k1b)).scale(Qh));
        r3 = qcomm(X1, X3) - (X2.scale(Qm) - (Id(u0b.scale(k1b)) + S.scale(k0b)).scale(Qh));
    } else if (alg == "H_V") {
        r1 = qcomm(X2, X1) - (X3.scale(Qm) + (Id(sc(k1b)) + S.scale(u0i)).scale(Qh));
        r2 = qcomm(X3, X2) + Id(u0i).scale(Qh);
        r3 = qcomm(X1, X3) - (X2.scale(Qm) + (Id(u0i.scale(k1b)) + S).scale(Qh));
    } else if (alg == "H_IV") {
        r1 = qcomm(X2, X1) - (X3.scale(Qm) + (Id(sc(-1)) + S.scale(u0i)).scale(Qh));
        r2 = qcomm(X3, X2) + Id(u0i).scale(Qh);
        r3 = qcomm(X1, X3) + Id(u0i).scale(Qh);
    } else if (alg == "H_III") {
        r1 = qcomm(X2, X1) - (X3.scale(Qm) + S.scale(u0i).scale(Qh));
        r2 = qcomm(X3, X2);
        r3 = qcomm(X1, X3) - (X2.scale(Qm) + Id(u0i.scale(k1b)).scale(Qh));
    } else if (alg == "H_II") {
        r1 = qcomm(X2, X1) - S.scale(u0i).scale(Qh);
        r2 = qcomm(X3, X2) + Id(u0i).scale(Qh);
        r3 = qcomm(X1, X3) + Id(u0i).scale(Qh);
    } else { // H_I
        r1 = qcomm(X2, X1) - S.scale(Qh);
        r2 = qcomm(X3, X2);
        r3 = qcomm(X1, X3) + one.scale(Qh);
    }
    chk("skein-1", "q-commutator of (X2, X1)", r1);
    chk("skein-2", "q-commutator of (X3, X2)", r2);
    chk("skein-3", "q-commutator of (X1, X3)", r3);

    // ---- unhatted quantum cubic -------------------------------------------
    M c = (X2 * X1 * X3).scale(rf_Q(1));
    if (alg == "H") {
        c = c - (X2 * X2).scale(q2()) - (X1 * X1).scale(rf_Q(-2)) - (X3 * X3).scale(q2());
        c = c + ((Id(u0b.scale(k1b)) + S.scale(k0b)) * X2).scale(rf_Q(1));
        c = c + ((Id(u0b.scale(k0b)) + S.scale(k1b)) * X1).scale(rf_Q(-1));
        c = c + ((Id(sc(k0b * k1b)) + S.scale(u0b)) * X3).scale(rf_Q(1));
        const E diag = sc(k0b * k0b + k1b * k1b - u1b * u1b + (q2() + rf_Q(-2)) * 2) + u0b * u0b;
        const E scoef = sc((q2() + 1) / rf_Q(1) * u1b) - u0b.scale(k0b * k1b);
        c = c + Id(diag) + S.scale(scoef);
    } else if (alg == "H_V") {
        c = c - (X2 * X2).scale(q2()) - (X3 * X3).scale(q2());
        c = c - ((Id(u0i.scale(k1b)) + S) * X2).scale(rf_Q(1));
        c = c + X1.scale(u0i).scale(rf_Q(-1));
        c = c - ((Id(sc(k1b)) + S.scale(u0i)) * X3).scale(rf_Q(1));
        c = c + Id(sc(1) + u0i * u0i) - S.scale(u0i.scale(k1b));
    } else if (alg == "H_IV") {
        c = c - (X3 * X3).scale(q2());
        c = c + X2.scale(u0i).scale(rf_Q(1));
        c = c + X1.scale(u0i).scale(rf_Q(-1));
        c = c + Id(u0i * u0i) + S.scale(u0i);
        c = c + ((one - S.scale(u0i)) * X3).scale(rf_Q(1));
    } else if (alg == "H_III") {
        c = c - (X2 * X2).scale(q2()) - (X3 * X3).scale(q2());
        c = c - X2.scale(u0i.scale(k1b)).scale(rf_Q(1));
        c = c - (S.scale(u0i) * X3).scale(rf_Q(1));
        c = c + Id(u0i * u0i);
    } else if (alg == "H_II") {
        c = c + X2.scale(u0i).scale(rf_Q(1));
        c = c + X1.scale(u0i).scale(rf_Q(-1));
        c = c + Id(u0i * u0i) + S.scale(u0i);
        c = c - (S.scale(u0i) * X3).scale(rf_Q(1));
    } else { // H_I
        c = c + X2.scale(rf_Q(1));
        c = c - (S * X3).scale(rf_Q(1));
        c = c + one;
    }
    chk("cubic", "quantum cubic relation", c);

    // ---- hatted triple: both projection paths agree -----------------------
    const M h1 = e * X1, h2 = e * X2, h3 = e * X3;
    chk("hat-two-path-X1", "e X1 e = e X1", e * X1 * e - h1);
    chk("hat-two-path-X2", "e X2 e = e X2", e * X2 * e - h2);
    chk("hat-two-path-X3", "e X3 e = e X3", e * X3 * e - h3);

    const E w1 = d.omega1, w2 = d.omega2, w3 = d.omega3, w4 = d.omega4;

    // ---- hatted skeins ------------------------------------------------------
    M hr1, hr2, hr3;
    if (alg == "H") {
        hr1 = qcomm(h2, h1) - (h3.scale(Qm) - e.scale(w3).scale(Qh));
        hr2 = qcomm(h3, h2) - (h1.scale(Qm) - e.scale(w1).scale(Qh));
        hr3 = qcomm(h1, h3) - (h2.scale(Qm) - e.scale(w2).scale(Qh));
    } else if (alg == "H_V") {
        hr1 = qcomm(h2, h1) - (h3.scale(Qm) - e.scale(w3).scale(Qh));
        hr2 = qcomm(h3, h2) + e.scale(w1).scale(Qh);
        hr3 = qcomm(h1, h3) - (h2.scale(Qm) - e.scale(w2).scale(Qh));
    } else if (alg == "H_IV") {
        hr1 = qcomm(h2, h1) - (h3.scale(Qm) - e.scale(w3).scale(Qh));
        hr2 = qcomm(h3, h2) + e.scale(w1).scale(Qh);
        hr3 = qcomm(h1, h3) + e.scale(w2).scale(Qh);
    } else if (alg == "H_III") {
        hr1 = qcomm(h2, h1) - (h3.scale(Qm) - e.scale(w3).scale(Qh));
        hr2 = qcomm(h3, h2);
        hr3 = qcomm(h1, h3) - (h2.scale(Qm) - e.scale(w2).scale(Qh));
    } else if (alg == "H_II") {
        hr1 = qcomm(h2, h1) + e.scale(w3).scale(Qh);
        hr2 = qcomm(h3, h2) + e.scale(w1).scale(Qh);
        hr3 = qcomm(h1, h3) + e.scale(w2).scale(Qh);
    } else { // H_I
        hr1 = qcomm(h2, h1) + e.scale(w3).scale(Qh);
        hr2 = qcomm(h3, h2);
        hr3 = qcomm(h1, h3) + e.scale(w2).scale(Qh);
    }
    chk("hatted-skein-1", "projected q-commutator, slot (X2, X1)", hr1);
    chk("hatted-skein-2", "projected q-commutator, slot (X3, X2)", hr2);
    chk("hatted-skein-3", "projected q-commutator, slot (X1, X3)", hr3);

    // ---- hatted cubic (constant term +omega4 e) ----------------------------
    M hc = (h2 * h1 * h3).scale(rf_Q(1));
    if (alg == "H") {
        hc = hc - (h2 * h2).scale(q2()) - (h1 * h1).scale(rf_Q(-2)) - (h3 * h3).scale(q2());
    } else if (alg == "H_V" || alg == "H_III") {
        hc = hc - (h2 * h2).scale(q2()) - (h3 * h3).scale(q2());
    } else if (alg == "H_IV") {
        hc = hc - (h3 * h3).scale(q2());
    }
    hc = hc + h2.scale(w2).scale(rf_Q(1));
    hc = hc + h1.scale(w1).scale(rf_Q(-1));
    hc = hc + h3.scale(w3).scale(rf_Q(1));
    hc = hc + e.scale(w4);
    chk("hatted-cubic", "projected cubic with scalar table", hc);

    // ---- classical limit: scalar loop elements, classical cubic ------------
    auto reduced = [&](const M &m) { return d.reduce ? m.reduce_central() : m; };
    bool scalars_ok = true;
    std::string scalar_residual;
    for (const auto &[nm, Xi] : {std::pair<const char *, const M &>{"X1", X1}, {"X2", X2}, {"X3", X3}}) {
        const M z = reduced(Xi).classical_limit();
        const bool off = !z.at(0, 1).is_zero() || !z.at(1, 0).is_zero() ||
                         !(z.at(0, 0) - z.at(1, 1)).is_zero();
        if (off) {
            scalars_ok = false;
            scalar_residual += std::string(nm) + " ";
        }
    }
    {
        CheckOutcome o;
        o.id = "classical-scalar";
        o.anchor = "X1, X2, X3 become scalar multiples of the identity at Q = 1";
        o.pass = scalars_ok;
        o.residual = scalar_residual;
        chk.out.push_back(std::move(o));
    }

    M cc = X1 * X2 * X3;
    if (alg == "H") {
        cc = cc - X1 * X1 - X2 * X2 - X3 * X3;
        cc = cc + X1.scale(u0b.scale(k0b) + sc(k1b * u1b));
        cc = cc + X2.scale(u0b.scale(k1b) + sc(k0b * u1b));
        cc = cc + X3.scale(sc(k0b * k1b) + u0b.scale(u1b));
        cc = cc + Id(sc(k0b * k0b + k1b * k1b + u1b * u1b + 4) + u0b * u0b -
                     u0b.scale(k0b * k1b * u1b));
    } else if (alg == "H_V") {
        cc = cc - X2 * X2 - X3 * X3;
        cc = cc + X1.scale(u0i);
        cc = cc - X2.scale(sc(u1b) + u0i.scale(k1b));
        cc = cc - X3.scale(u0i.scale(u1b) + sc(k1b));
        cc = cc + Id(sc(1) + u0i * u0i - u0i.scale(k1b * u1b));
    } else if (alg == "H_IV") {
        cc = cc - X3 * X3;
        cc = cc + X1.scale(u0i) + X2.scale(u0i);
        cc = cc + X3.scale(sc(1) - u0i.scale(u1b));
        cc = cc + Id(u0i * u0i + u0i.scale(u1b));
    } else if (alg == "H_III") {
        cc = cc - X2 * X2 - X3 * X3;
        cc = cc - X2.scale(u0i.scale(k1b));
        cc = cc - X3.scale(u0i.scale(u1b));
        cc = cc + Id(u0i * u0i);
    } else if (alg == "H_II") {
        cc = cc + X1.scale(u0i) + X2.scale(u0i) + X3.scale(u0i);
        cc = cc + Id(u0i * u0i - u0i * u0i * d.u0); // (1 - u0)/u0^2
    } else { // H_I
        cc = cc + X2 + X3 + one;
    }
    chk("classical-cubic", "affine cubic relation at Q = 1", reduced(cc).classical_limit());

    return chk.out;
}

//-----------------------------------------------------------------------------
// Zhedanov isomorphism images (H_V, H_IV, H_III)
//-----------------------------------------------------------------------------

std::vector<CheckOutcome> check_zhedanov_image(const std::string &algebra_id) {
    if (algebra_id != "H_V" && algebra_id != "H_IV" && algebra_id != "H_III") {
        throw UnknownAlgebra("no Zhedanov image for: " + algebra_id);
    }
    const SphericalData d = spherical_data(algebra_id);
    Checker chk;
    const M e = d.e;
    const M h1 = e * d.X1, h2 = e * d.X2, h3 = e * d.X3;
    const RationalFunction u1 = rf_var("u1");
    const RationalFunction k1b = d.k1bar;
    const E u0i = d.u0inv;
    const RationalFunction Qm = qm(), Qh = qh();
    const RationalFunction qq = q2();
    const RationalFunction qm1sq = (qq - 1) * (qq - 1); // (q-1)^2

    const M K0 = h2.scale(u1);
    const M K1 = h1;
    const M K2 = qcomm(K0, K1);

    // Dictionary values from the omega table.
    const E B = d.omega3.scale(-u1 * qm1sq / qq);
    const E D0d = d.omega2.scale(-u1 * Qm * Qh);
    const E D1d = d.omega1.scale(-u1 * u1 * Qm * Qh);

    // Printed tables.
    E Btab, D0, D1;
    RationalFunction C0;
    const RationalFunction uqh = rf_Q(1) / u1 - u1 / rf_Q(1); // sqrt(q)/u1 - u1/sqrt(q)
    if (algebra_id == "H_V") {
        Btab = sc(u1 * qm1sq / qq * k1b) - u0i.scale(u1 * qm1sq / qq * uqh);
        D0 = (sc(u1 * (qq + 1) * qm1sq / qq)) *
             (u0i.scale(k1b / rf_Q(1)) - sc(RationalFunction(1) / u1 - u1 / qq));
        D1 = -u0i.scale(u1 * u1 * (qq + 1) * qm1sq / rf_Q(3));
        C0 = Qm * Qm;
    } else if (algebra_id == "H_IV") {
        Btab = sc(-u1 * qm1sq / qq) - u0i.scale(u1 * qm1sq / qq * uqh);
        D0 = -u0i.scale(u1 * (qq + 1) * qm1sq / rf_Q(3));
        D1 = -u0i.scale(u1 * u1 * (qq + 1) * qm1sq / rf_Q(3));
        C0 = RationalFunction(0);
    } else { // H_III
        Btab = -u0i.scale(u1 * qm1sq / qq * uqh);
        D0 = u0i.scale(u1 * (qq + 1) * qm1sq / rf_Q(3) * k1b);
        D1 = E();
        C0 = Qm * Qm;
    }

    auto scalar_diff = [&](const std::string &id, const std::string &anchor, const E &lhs,
                           const E &rhs) {
        CheckOutcome o;
        o.id = id;
        o.anchor = anchor;
        const E df = lhs - rhs;
        o.pass = df.is_zero();
        if (!o.pass) { o.residual = df.render(); }
        chk.out.push_back(std::move(o));
    };
    scalar_diff("dict-B", "B dictionary matches printed table", B, Btab);
    scalar_diff("dict-D0", "D0 dictionary matches printed table", D0d, D0);
    scalar_diff("dict-D1", "D1 dictionary matches printed table", D1d, D1);

    chk("zhe1-image", "q^(1/2)K0K1 - q^(-1/2)K1K0 = K2", qcomm(K0, K1) - K2);
    chk("zhe2-image", "q^(1/2)K1K2 - q^(-1/2)K2K1 = B K1 + C0 K0 + D0 e",
        qcomm(K1, K2) - (K1.scale(Btab) + K0.scale(C0) + e.scale(D0)));
    chk("zhe3-image", "q^(1/2)K2K0 - q^(-1/2)K0K2 = B K0 + D1 e",
        qcomm(K2, K0) - (K0.scale(Btab) + e.scale(D1)));
    return chk.out;
}

//-----------------------------------------------------------------------------
// gamma on the hatted triple of H_V
//-----------------------------------------------------------------------------

std::vector<CheckOutcome> check_gamma_spherical() {
    const SphericalData d = spherical_data("H_V");
    Checker chk;
    const M e = d.e;
    const M h1 = e * d.X1, h2 = e * d.X2, h3 = e * d.X3;
    const RationalFunction Qm = qm(), Qh = qh();
    const E w1 = d.omega1, w2 = d.omega2, w3 = d.omega3, w4 = d.omega4;

    const M g1 = h3.commutator(h1).scale(rf_Q(1) / (q2() - 1)) + h2;
    const M g2 = h1, g3 = h3;

    chk("gamma-slot-1", "q-commutator of (Y2, Y1) = (q - 1/q)Y3 - (q^(1/2)-q^(-1/2)) w3 e",
        qcomm(g2, g1) - (g3.scale(Qm) - e.scale(w3).scale(Qh)));
    chk("gamma-slot-2", "q-commutator of (Y3, Y2) = (q - 1/q)Y1 - (q^(1/2)-q^(-1/2)) w2 e",
        qcomm(g3, g2) - (g1.scale(Qm) - e.scale(w2).scale(Qh)));
    chk("gamma-inverse", "hX2 = q^(-1/2)Y2Y3 - q^(-1)Y1 + q^(-1/2) w2 e",
        (g2 * g3).scale(rf_Q(-1)) - g1.scale(rf_Q(-2)) + e.scale(w2).scale(rf_Q(-1)) - h2);

    M hcg = (g2 * g3 * g1).scale(rf_Q(-1));
    hcg = hcg - (g1 * g1).scale(rf_Q(-2));
    hcg = hcg - (g3 * g3).scale(q2());
    hcg = hcg + g1.scale(w2).scale(rf_Q(-1));
    hcg = hcg + g2.scale(w1).scale(rf_Q(-1));
    hcg = hcg + g3.scale(w3).scale(rf_Q(1));
    hcg = hcg + e.scale(w4);
    chk("gamma-image-cubic", "image triple satisfies the conjugated cubic, original scalars", hcg);

    chk("identity-slot-1", "original triple satisfies its own slot 1",
        qcomm(h2, h1) - (h3.scale(Qm) - e.scale(w3).scale(Qh)));
    return chk.out;
}

std::vector<CheckOutcome> check_gamma_zhedanov() {
    const SphericalData d = spherical_data("H_V");
    Checker chk;
    const M e = d.e;
    const M h1 = e * d.X1, h2 = e * d.X2;
    const RationalFunction u1 = rf_var("u1"), k1 = rf_var("k1");
    const E u0i = d.u0inv;
    const RationalFunction qq = q2(), qi = rf_Q(-2);
    const RationalFunction qm1sq = (qq - 1) * (qq - 1);

    const M K0 = h2.scale(u1);
    const M K1 = h1;
    const M K2 = qcomm(K0, K1);
    const RationalFunction pref = rf_Q(3) / ((qq + 1) * qm1sq);
    const M K0g = K1.scale(k1 * u1);
    const M K1g = (K0 + K2.commutator(K1).scale(pref)).scale(RationalFunction(1) / u1);

    const E Bg = u0i.scale(-(qm1sq / rf_Q(3) * (qq * k1 - k1 * u1 * u1))) +
                 sc(qm1sq / rf_Q(3) * rf_Q(1) * (k1 * k1 - 1) * u1);
    const E D0g = -u0i.scale((qq + 1) * qm1sq * k1 * u1 / rf_Q(3));
    const RationalFunction C1g = (qq * qq - 1) * (qq * qq - 1) * k1 * k1 * u1 * u1 / (qq * qq);
    const E D1g = sc(-u1 * k1 * (qq + 1) * qm1sq / (qq * qq) * (k1 * (qq - u1 * u1))) +
                  u0i.scale(u1 * k1 * (qq + 1) * qm1sq / (qq * qq) * rf_Q(1) * (k1 * k1 - 1) * u1);

    const M lhs1 = (K1g * K0g * K1g).scale(qq + qi) - K1g * K1g * K0g - K0g * (K1g * K1g);
    chk("gamma-zhe-rel1", "(q + 1/q)K1'K0'K1' - K1'^2 K0' - K0' K1'^2 = B' K1' + D0' e",
        lhs1 - (K1g.scale(Bg) + e.scale(D0g)));
    const M lhs2 = (K0g * K1g * K0g).scale(qq + qi) - K0g * K0g * K1g - K1g * (K0g * K0g);
    chk("gamma-zhe-rel2", "(q + 1/q)K0'K1'K0' - K0'^2 K1' - K1' K0'^2 = B' K0' + C1' K1' + D1' e",
        lhs2 - (K0g.scale(Bg) + K1g.scale(C1g) + e.scale(D1g)));
    return chk.out;
}

//-----------------------------------------------------------------------------
// Mutation evidence
//-----------------------------------------------------------------------------

bool omega_mutation_detected(const std::string &algebra_id, int which) {
    SphericalData d = spherical_data(algebra_id);
    E *slots[4] = {&d.omega1, &d.omega2, &d.omega3, &d.omega4};
    if (which < 1 || which > 4) { return false; }
    E &w = *slots[which - 1];
    if (w.is_zero()) { return false; } // flipping a zero entry changes nothing
    w = -w;

    const M e = d.e;
    const M h1 = e * d.X1, h2 = e * d.X2, h3 = e * d.X3;
    M hc = (h2 * h1 * h3).scale(rf_Q(1));
    if (d.algebra_id == "H") {
        hc = hc - (h2 * h2).scale(q2()) - (h1 * h1).scale(rf_Q(-2)) - (h3 * h3).scale(q2());
    } else if (d.algebra_id == "H_V" || d.algebra_id == "H_III") {
        hc = hc - (h2 * h2).scale(q2()) - (h3 * h3).scale(q2());
    } else if (d.algebra_id == "H_IV") {
        hc = hc - (h3 * h3).scale(q2());
    }
    hc = hc + h2.scale(d.omega2).scale(rf_Q(1));
    hc = hc + h1.scale(d.omega1).scale(rf_Q(-1));
    hc = hc + h3.scale(d.omega3).scale(rf_Q(1));
    hc = hc + e.scale(d.omega4);
    if (d.reduce) { hc = hc.reduce_central(); }
    return !hc.is_zero();
}

} // namespace kernel
