/// @file zhedanov.cpp
/// @brief Scalar structure-constant tables and the identity battery relating
///        their two published coordinate systems (see zhedanov.hpp).

#include "kernel/zhedanov.hpp"

#include "kernel/errors.hpp"

namespace kernel {

namespace {

using RF = RationalFunction;

// Shared parameter shorthands.  q = Q^2 throughout.
RF vQ() { return rf_Q(1); }
RF vq() { return rf_Q(2); }
RF vk0() { return rf_var("k0"); }
RF vk1() { return rf_var("k1"); }
RF vu0() { return rf_var("u0"); }
RF vu1() { return rf_var("u1"); }
RF va() { return rf_var("a"); }
RF vb() { return rf_var("b"); }
RF vc() { return rf_var("c"); }
RF vd() { return rf_var("d"); }
RF vlam() { return rf_var("lam"); }

RF kb0() { return bar(vk0()); }
RF kb1() { return bar(vk1()); }
RF ub0() { return bar(vu0()); }
/// sigma = u1/Q - Q/u1.
RF sig() { return vu1() * rf_Q(-1) - vQ() / vu1(); }

/// (q - 1)^2 / q, the ubiquitous prefactor.
RF qm1sq_over_q() { return (vq() - 1).pow(2) / vq(); }
/// (q - 1/q)^2.
RF c0_generic() { return bar(vq()).pow(2); }
/// (q + 1)(q - 1)^2.
RF qp1_qm1sq() { return (vq() + 1) * (vq() - 1).pow(2); }

//-----------------------------------------------------------------------------
// u-form tables
//-----------------------------------------------------------------------------

ZhedanovParams u_form_AW() {
    const RF q = vq(), Q = vQ(), k0 = vk0(), u1 = vu1();
    const RF mix = inv(u1) - u1 / q; // (1/u1 - u1/q)
    ZhedanovParams p;
    p.B = k0 * u1 * qm1sq_over_q() * (ub0() * mix * Q - kb0() * kb1());
    p.C0 = c0_generic();
    p.C1 = k0.pow(2) * u1.pow(2) * c0_generic();
    p.D0 = k0 * u1 * qp1_qm1sq() * rf_Q(-3) *
           (kb0() * mix * Q - kb1() * ub0());
    p.D1 = k0.pow(2) * u1.pow(2) * qp1_qm1sq() * rf_Q(-3) *
           (kb1() * mix * Q - kb0() * ub0());
    return p;
}

ZhedanovParams u_form_V() {
    const RF q = vq(), Q = vQ(), u0 = vu0(), u1 = vu1();
    ZhedanovParams p;
    p.B = u1 * qm1sq_over_q() * (kb1() - (Q / u1 - u1 / Q) / u0);
    p.C0 = c0_generic();
    p.C1 = RF(0);
    p.D0 = u1 * qp1_qm1sq() / q * (kb1() / (Q * u0) - (inv(u1) - u1 / q));
    p.D1 = u1.pow(2) * qp1_qm1sq() * rf_Q(-3) / u0 * (-1);
    return p;
}

ZhedanovParams u_form_IV() {
    const RF q = vq(), Q = vQ(), u0 = vu0(), u1 = vu1();
    ZhedanovParams p;
    p.B = u1 * qm1sq_over_q() * ((Q / u1 - u1 / Q) / u0 + 1) * (-1);
    p.C0 = RF(0);
    p.C1 = RF(0);
    p.D0 = qp1_qm1sq() * rf_Q(-3) * u1 / u0 * (-1);
    p.D1 = u1.pow(2) / u0 * qp1_qm1sq() * rf_Q(-3) * (-1);
    return p;
}

ZhedanovParams u_form_III() {
    const RF Q = vQ(), u0 = vu0(), u1 = vu1();
    ZhedanovParams p;
    p.B = u1 / u0 * qm1sq_over_q() * (Q / u1 - u1 / Q) * (-1);
    p.C0 = c0_generic();
    p.C1 = RF(0);
    p.D0 = u1 * qp1_qm1sq() * rf_Q(-3) * kb1() / u0;
    p.D1 = RF(0);
    return p;
}

ZhedanovParams u_form_D7() {
    ZhedanovParams p;
    p.B = qm1sq_over_q();
    p.C0 = c0_generic();
    p.C1 = RF(0);
    p.D0 = qp1_qm1sq() / vq().pow(2) * va() * (-1);
    p.D1 = RF(0);
    return p;
}

ZhedanovParams u_form_D8() {
    ZhedanovParams p = u_form_D7();
    p.D0 = RF(0);
    return p;
}

ZhedanovParams u_form_Vg() {
    const RF q = vq(), Q = vQ(), k1 = vk1(), u0 = vu0(), u1 = vu1();
    ZhedanovParams p;
    p.B = rf_Q(-3) / u0 *
          (q * k1 - k1 * u1.pow(2) - Q * (k1.pow(2) - 1) * u0 * u1) *
          (vq() - 1).pow(2) * (-1);
    p.C0 = RF(0);
    p.C1 = (q.pow(2) - 1).pow(2) * k1.pow(2) * u1.pow(2) / q.pow(2);
    p.D0 = qp1_qm1sq() * rf_Q(-3) * k1 * u1 / u0 * (-1);
    p.D1 = u1 * k1 / u0 * qp1_qm1sq() / q.pow(2) *
           (k1 * u0 * (q - u1.pow(2)) - Q * (k1.pow(2) - 1) * u1) * (-1);
    return p;
}

//-----------------------------------------------------------------------------
// operator-coordinate tables
//-----------------------------------------------------------------------------

ZhedanovParams abc_form_V() {
    const RF q = vq(), a = va(), b = vb(), c = vc();
    ZhedanovParams p;
    p.B = qm1sq_over_q() * ((a * b / q + 1) * c + (b / a + 1) * a);
    p.C0 = c0_generic();
    p.C1 = RF(0);
    p.D0 = qp1_qm1sq() / q * ((b / a + 1) * a * c / q + (a * b / q + 1)) * (-1);
    p.D1 = qp1_qm1sq() / q.pow(2) * a * b * c * (-1);
    return p;
}

ZhedanovParams abc_form_IV() {
    const RF q = vq(), a = va(), c = vc(), lam = vlam();
    ZhedanovParams p;
    p.B = (q - 1).pow(2) * (c + a * (c + 1)) / lam;
    p.C0 = RF(0);
    p.C1 = RF(0);
    p.D0 = qp1_qm1sq() * a * c / lam.pow(2) * (-1);
    p.D1 = qp1_qm1sq() * a * c / lam * (-1);
    return p;
}

ZhedanovParams abc_form_III() {
    const RF q = vq(), a = va(), b = vb(), c = vc();
    ZhedanovParams p;
    p.B = qm1sq_over_q() * (a * b / q + 1) * c;
    p.C0 = c0_generic();
    p.C1 = RF(0);
    p.D0 = qp1_qm1sq() / q.pow(2) * (a + b) * c * (-1);
    p.D1 = RF(0);
    return p;
}

ZhedanovParams abc_form_Vg() {
    const RF q = vq(), a = va(), b = vb(), c = vc(), lam = vlam();
    ZhedanovParams p;
    p.B = (q - 1).pow(2) * (c + a * (b + c + 1)) / lam;
    p.C0 = RF(0);
    p.C1 = q * c0_generic() * a * b;
    p.D0 = qp1_qm1sq() * a * c / lam.pow(2) * (-1);
    p.D1 = qp1_qm1sq() * a * (c + b * (a + c + 1)) / lam * (-1);
    return p;
}

} // namespace

ZhedanovParams zhedanov_u_form(const std::string &table_id) {
    if (table_id == "AW") { return u_form_AW(); }
    if (table_id == "V") { return u_form_V(); }
    if (table_id == "IV") { return u_form_IV(); }
    if (table_id == "III") { return u_form_III(); }
    if (table_id == "D7") { return u_form_D7(); }
    if (table_id == "D8") { return u_form_D8(); }
    if (table_id == "Vg") { return u_form_Vg(); }
    throw UnknownAlgebra("zhedanov_u_form: unknown table id '" + table_id + "'");
}

ZhedanovParams zhedanov_abcd_form() {
    const RF q = vq(), a = va(), b = vb(), c = vc(), d = vd();
    ZhedanovParams p;
    p.B = qm1sq_over_q() *
          ((a * b / q + 1) * (d / c + 1) * c + (b / a + 1) * (c * d / q + 1) * a);
    p.C0 = c0_generic();
    p.C1 = a * b * c * d / q * c0_generic();
    p.D0 = qp1_qm1sq() / q *
           ((b / a + 1) * (d / c + 1) * a * c / q +
            (a * b / q + 1) * (c * d / q + 1)) *
           (-1);
    p.D1 = qp1_qm1sq() / q.pow(2) *
           ((b / a + 1) * (a * b / q + 1) * a * c * d +
            (d / c + 1) * (c * d / q + 1) * a * b * c) *
           (-1);
    return p;
}

ZhedanovParams zhedanov_abc_form(const std::string &table_id) {
    if (table_id == "V") { return abc_form_V(); }
    if (table_id == "IV") { return abc_form_IV(); }
    if (table_id == "III") { return abc_form_III(); }
    if (table_id == "D7") { return u_form_D7(); } // operator coordinates coincide
    if (table_id == "D8") { return u_form_D8(); }
    if (table_id == "Vg") { return abc_form_Vg(); }
    throw UnknownAlgebra("zhedanov_abc_form: unknown table id '" + table_id + "'");
}

Substitution parameter_dictionary(const std::string &dict_id) {
    const RF Q = vQ(), k0 = vk0(), k1 = vk1(), u0 = vu0(), u1 = vu1();
    if (dict_id == "SO1") {
        return make_subst({{"a", u1 / k1 * (-1)},
                           {"b", k1 * u1},
                           {"c", Q * k0 / u0 * (-1)},
                           {"d", Q * u0 * k0}});
    }
    if (dict_id == "CONF") {
        return make_subst({{"a", u1 / k1 * (-1)},
                           {"b", k1 * u1},
                           {"c", Q / u0 * (-1)}});
    }
    if (dict_id == "KU") {
        return make_subst({{"lam", u1},
                           {"a", k1 * u1 / (Q * u0) * (-1)},
                           {"b", k1 * u0 * u1 / Q * (-1)},
                           {"c", u1.pow(2) / vq() * (-1)}});
    }
    if (dict_id == "KUIV") {
        return make_subst({{"lam", u1},
                           {"a", u1 / (Q * u0) * (-1)},
                           {"c", u1.pow(2) / vq() * (-1)}});
    }
    throw UnknownAlgebra("parameter_dictionary: unknown dictionary id '" +
                         dict_id + "'");
}

RationalFunction dict_B(const RationalFunction &lam, const RationalFunction &w3) {
    return lam * w3 * qm1sq_over_q() * (-1);
}

RationalFunction dict_D0(const RationalFunction &lam, const RationalFunction &w2) {
    return lam * bar(vq()) * bar(vQ()) * w2 * (-1);
}

RationalFunction dict_D1(const RationalFunction &lam, const RationalFunction &w1) {
    return lam.pow(2) * bar(vq()) * bar(vQ()) * w1 * (-1);
}

std::array<RationalFunction, 3> omega_scalars(const std::string &table_id) {
    const RF u0 = vu0();
    if (table_id == "AW") {
        return {ub0() * kb0() + kb1() * sig(), kb1() * ub0() + kb0() * sig(),
                kb0() * kb1() + ub0() * sig()};
    }
    if (table_id == "V") {
        return {inv(u0), (kb1() / u0 + sig()) * (-1), (kb1() + sig() / u0) * (-1)};
    }
    if (table_id == "IV") {
        return {inv(u0), inv(u0), sig() / u0 * (-1) + 1};
    }
    if (table_id == "III") {
        return {RF(0), kb1() / u0 * (-1), sig() / u0 * (-1)};
    }
    if (table_id == "D7") {
        return {RF(0), va() / vQ(), RF(-1)};
    }
    throw UnknownAlgebra("omega_scalars: unknown table id '" + table_id + "'");
}

std::vector<CheckOutcome> check_scalar_tables() {
    std::vector<CheckOutcome> out;
    auto chk = [&](std::string id, std::string anchor, const RF &diff) {
        const bool ok = diff.is_zero();
        out.push_back({std::move(id), std::move(anchor), ok,
                       ok ? std::string() : diff.render()});
    };
    auto chk_nonzero = [&](std::string id, std::string anchor, const RF &diff) {
        const bool ok = !diff.is_zero();
        out.push_back({std::move(id), std::move(anchor), ok, diff.render()});
    };
    auto sub = [](const ZhedanovParams &p, const Substitution &s) {
        return ZhedanovParams{p.B.substitute(s), p.C0.substitute(s),
                              p.C1.substitute(s), p.D0.substitute(s),
                              p.D1.substitute(s)};
    };

    const RF q = vq(), Q = vQ(), k0 = vk0(), u0 = vu0(), u1 = vu1(), a = va(),
             b = vb(), c = vc(), d = vd();

    // ---- full algebra: u-form vs abcd-form vs omega dictionary ----
    const ZhedanovParams AWu = u_form_AW();
    const ZhedanovParams AWab = zhedanov_abcd_form();
    const Substitution so1 = parameter_dictionary("SO1");
    const ZhedanovParams AWso = sub(AWab, so1);
    chk("aw-abcd-value", "product a*b*c*d under the dictionary",
        (a * b * c * d).substitute(so1) - q * u1.pow(2) * k0.pow(2));
    chk("aw-B-uform-abcd", "B: u-form == abcd-form", AWu.B - AWso.B);
    chk("aw-C1-uform-abcd", "C1: u-form == abcd-form", AWu.C1 - AWso.C1);
    chk("aw-D0-uform-abcd", "D0: u-form == abcd-form", AWu.D0 - AWso.D0);
    chk("aw-D1-uform-abcd", "D1: u-form == abcd-form", AWu.D1 - AWso.D1);

    const auto w6 = omega_scalars("AW");
    const RF lam6 = u1 * k0;
    chk("aw-B-dict", "B == lambda-dictionary at lam = u1 k0",
        AWu.B - dict_B(lam6, w6[2]));
    chk("aw-C1-C0", "C1 == (u1 k0)^2 C0", AWu.C1 - lam6.pow(2) * AWu.C0);
    chk("aw-D0-dict", "D0 == lambda-dictionary at lam = u1 k0",
        AWu.D0 - dict_D0(lam6, w6[1]));
    chk("aw-D1-dict", "D1 == lambda-dictionary at lam = u1 k0",
        AWu.D1 - dict_D1(lam6, w6[0]));

    // ---- member V: u-form vs abc-form (with misprint witnesses) ----
    const ZhedanovParams Vu = u_form_V();
    const ZhedanovParams Vab = abc_form_V();
    const Substitution conf = parameter_dictionary("CONF");
    const ZhedanovParams Vco = sub(Vab, conf);
    chk("v-B-uform-abc", "B: u-form == abc-form", Vu.B - Vco.B);
    chk("v-D0-uform-abc", "D0: u-form == corrected abc-form", Vu.D0 - Vco.D0);
    chk("v-D1-uform-abc", "D1: u-form == corrected abc-form", Vu.D1 - Vco.D1);

    const RF D0V_printed =
        qp1_qm1sq() / q * ((b / a + 1) * a * c + (a * b / q + 1)) * (-1);
    const RF D1V_printed =
        qp1_qm1sq() / q * (c * d / q + 1) * a * b * c * (-1);
    Substitution conf_d = conf;
    conf_d[var_id("d")] = Q * u0;
    chk_nonzero("v-D0-printed-differs",
                "printed D0 (missing 1/q on the first summand) differs",
                Vu.D0 - D0V_printed.substitute(conf));
    chk_nonzero("v-D1-printed-differs",
                "printed D1 (stray 1 + cd/q factor, wrong power) differs",
                Vu.D1 - D1V_printed.substitute(conf_d));

    Substitution d_to_0 = make_subst({{"d", RF(0)}});
    chk("v-B-limit-d0", "abc-form == d->0 limit of the abcd-form (B)",
        Vab.B - AWab.B.substitute(d_to_0));
    chk("v-D0-limit-d0", "abc-form == d->0 limit of the abcd-form (D0)",
        Vab.D0 - AWab.D0.substitute(d_to_0));
    chk("v-D1-limit-d0", "abc-form == d->0 limit of the abcd-form (D1)",
        Vab.D1 - AWab.D1.substitute(d_to_0));

    const auto w5 = omega_scalars("V");
    chk("v-B-dict", "B == lambda-dictionary at lam = u1",
        Vu.B - dict_B(u1, w5[2]));
    chk("v-D0-dict", "D0 == lambda-dictionary at lam = u1",
        Vu.D0 - dict_D0(u1, w5[1]));
    chk("v-D1-dict", "D1 == lambda-dictionary at lam = u1",
        Vu.D1 - dict_D1(u1, w5[0]));

    // ---- member IV ----
    const ZhedanovParams IVu = u_form_IV();
    const ZhedanovParams IVab = abc_form_IV();
    const ZhedanovParams IVku = sub(IVab, parameter_dictionary("KUIV"));
    chk("iv-B-uform-abc", "B: u-form == abc-form", IVu.B - IVku.B);
    chk("iv-D0-uform-abc", "D0: u-form == abc-form", IVu.D0 - IVku.D0);
    chk("iv-D1-uform-abc", "D1: u-form == abc-form", IVu.D1 - IVku.D1);
    const auto w4 = omega_scalars("IV");
    chk("iv-B-dict", "B == lambda-dictionary at lam = u1",
        IVu.B - dict_B(u1, w4[2]));
    chk("iv-D0-dict", "D0 == lambda-dictionary at lam = u1",
        IVu.D0 - dict_D0(u1, w4[1]));
    chk("iv-D1-dict", "D1 == lambda-dictionary at lam = u1",
        IVu.D1 - dict_D1(u1, w4[0]));

    // ---- member III ----
    const ZhedanovParams IIIu = u_form_III();
    const ZhedanovParams IIIab = abc_form_III();
    const ZhedanovParams IIIco = sub(IIIab, conf);
    chk("iii-B-uform-abc", "B: u-form == abc-form", IIIu.B - IIIco.B);
    chk("iii-D0-uform-abc", "D0: u-form == abc-form", IIIu.D0 - IIIco.D0);
    const auto w3 = omega_scalars("III");
    chk("iii-B-dict", "B == lambda-dictionary at lam = u1",
        IIIu.B - dict_B(u1, w3[2]));
    chk("iii-D0-dict", "D0 == lambda-dictionary at lam = u1",
        IIIu.D0 - dict_D0(u1, w3[1]));

    // ---- members D7 / D8: tail of the degeneration chain ----
    const ZhedanovParams D7 = u_form_D7();
    Substitution b0c1 = make_subst({{"b", RF(0)}, {"c", RF(1)}});
    chk("d7-B-limit", "B == III abc-form at b = 0, c = 1",
        D7.B - IIIab.B.substitute(b0c1));
    chk("d7-D0-limit", "D0 == III abc-form at b = 0, c = 1",
        D7.D0 - IIIab.D0.substitute(b0c1));
    const auto w7 = omega_scalars("D7");
    chk("d7-B-dict", "B == lambda-dictionary at lam = 1", D7.B - dict_B(RF(1), w7[2]));
    chk("d7-D0-dict", "D0 == lambda-dictionary at lam = 1",
        D7.D0 - dict_D0(RF(1), w7[1]));
    const ZhedanovParams D8 = u_form_D8();
    Substitution a_to_0 = make_subst({{"a", RF(0)}});
    chk("d8-B-limit", "B == D7 B at a = 0", D8.B - D7.B.substitute(a_to_0));
    chk("d8-D0-limit", "D0 == D7 D0 at a = 0", D8.D0 - D7.D0.substitute(a_to_0));

    // ---- conjugated member Vg ----
    const ZhedanovParams Vgu = u_form_Vg();
    const ZhedanovParams Vgab = abc_form_Vg();
    const ZhedanovParams Vgku = sub(Vgab, parameter_dictionary("KU"));
    chk("vg-B-uform-abc", "B: u-form == abc-form", Vgu.B - Vgku.B);
    chk("vg-D0-uform-abc", "D0: u-form == abc-form", Vgu.D0 - Vgku.D0);
    chk("vg-C1-uform-abc", "C1: u-form == abc-form", Vgu.C1 - Vgku.C1);
    chk("vg-D1-uform-abc", "D1: u-form == abc-form", Vgu.D1 - Vgku.D1);
    Substitution b_to_0 = make_subst({{"b", RF(0)}});
    chk("iv-B-limit-b0", "IV abc-form == b->0 limit of Vg abc-form (B)",
        IVab.B - Vgab.B.substitute(b_to_0));
    chk("iv-D0-limit-b0", "IV abc-form == b->0 limit of Vg abc-form (D0)",
        IVab.D0 - Vgab.D0.substitute(b_to_0));
    chk("iv-D1-limit-b0", "IV abc-form == b->0 limit of Vg abc-form (D1)",
        IVab.D1 - Vgab.D1.substitute(b_to_0));
    chk("iv-C1-limit-b0", "IV abc-form == b->0 limit of Vg abc-form (C1)",
        IVab.C1 - Vgab.C1.substitute(b_to_0));

    return out;
}

} // namespace kernel
