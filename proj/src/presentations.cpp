/**
 * @file presentations.cpp
 * @brief Relation catalogues, generator maps, beta/gamma checks.
 */

#include "kernel/presentations.hpp"

#include "json.hpp"

namespace kernel {

namespace {

NCExpression S(const std::string &n, int e = 1) { return NCExpression::symbol(n, e); }
NCExpression C(const RationalFunction &c) { return NCExpression(c); }

RationalFunction K0() { return rf_var("k0"); }
RationalFunction K1() { return rf_var("k1"); }
RationalFunction U1() { return rf_var("u1"); }

Relation rel(std::string id, std::string anchor, NCExpression e) {
    return Relation{std::move(id), std::move(anchor), std::move(e)};
}

} // namespace

//-----------------------------------------------------------------------------
// Evaluation
//-----------------------------------------------------------------------------

std::vector<RelationOutcome> check_presentation(const AlgebraPresentation &pres, const EmbeddingAssignment &asg) {
    std::vector<RelationOutcome> out;
    out.reserve(pres.relations.size());
    for (const Relation &r : pres.relations) {
        TorusMatrix2 res = residual(r.expr, asg);
        RelationOutcome o;
        o.id = r.id;
        o.anchor = r.anchor;
        o.pass = res.is_zero();
        if (!o.pass) { o.residual = res.render(); }
        out.push_back(std::move(o));
    }
    return out;
}

//-----------------------------------------------------------------------------
// Generator maps
//-----------------------------------------------------------------------------

NCExpression apply_generator_map(const NCExpression &expr, const GeneratorMap &map) {
    NCExpression out;
    for (const NCTerm &t : expr.terms()) {
        NCExpression term{t.coeff};
        for (const WordFactor &f : t.word) {
            auto it = map.images.find(f.symbol);
            NCExpression factor;
            if (it == map.images.end()) {
                factor = S(f.symbol, f.exp);
            } else if (f.exp >= 0) {
                factor = it->second.pow(static_cast<std::uint32_t>(f.exp));
            } else {
                factor = it->second.inverse().pow(static_cast<std::uint32_t>(-f.exp));
            }
            term = term * factor;
        }
        out = out + term;
    }
    return out;
}

EmbeddingAssignment apply_to_assignment(const GeneratorMap &map, const EmbeddingAssignment &asg, bool merge) {
    EmbeddingAssignment out;
    out.algebra_id = asg.algebra_id;
    out.scalars = asg.scalars;
    out.reduce_residuals = asg.reduce_residuals;
    if (merge) { out.generators = asg.generators; }
    // Evaluate every image against the ORIGINAL assignment first.
    std::map<std::string, TorusMatrix2> images;
    for (const auto &[name, expr] : map.images) { images[name] = eval_nc(expr, asg); }
    for (auto &[name, mat] : images) { out.generators[name] = std::move(mat); }
    return out;
}

//-----------------------------------------------------------------------------
// Defining relation lists
//-----------------------------------------------------------------------------

AlgebraPresentation daha_presentation(const std::string &algebra_id) {
    AlgebraPresentation p;
    p.id = "daha:" + algebra_id;
    p.algebra_id = algebra_id;
    p.generators = {"V0", "V1", "Vc0", "Vc1"};
    const RationalFunction k0 = K0(), k1 = K1(), u1 = U1();
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    const NCExpression u0 = S("u0"), u0i = S("u0inv");
    const NCExpression one(1);

    if (algebra_id == "H") {
        p.relations = {
            rel("daha1", "(V0-k0)(V0+1/k0)", (V0 - C(k0)) * (V0 + C(inv(k0)))),
            rel("daha2", "(V1-k1)(V1+1/k1)", (V1 - C(k1)) * (V1 + C(inv(k1)))),
            rel("daha3", "(Vc0-u0)(Vc0+1/u0)", (Vc0 - u0) * (Vc0 + u0i)),
            rel("daha4", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
            rel("daha5", "Vc1*V1*V0*Vc0 - q^(-1/2)", Vc1 * V1 * V0 * Vc0 - C(rf_Q(-1))),
        };
        return p;
    }
    if (algebra_id == "H_V") {
        p.relations = {
            rel("dahaV1", "V0^2+V0", V0 * V0 + V0),
            rel("dahaV2", "(V1-k1)(V1+1/k1)", (V1 - C(k1)) * (V1 + C(inv(k1)))),
            rel("dahaV3", "Vc0^2+(1/u0)Vc0", Vc0 * Vc0 + u0i * Vc0),
            rel("dahaV4", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
            rel("dahaV5", "q^(1/2)Vc1*V1*V0 - Vc0 - 1/u0", (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - u0i),
            rel("dahaV6", "q^(1/2)Vc0*Vc1*V1 - V0 - 1", (Vc0 * Vc1 * V1).scale(rf_Q(1)) - V0 - one),
        };
        return p;
    }
    if (algebra_id == "H_IV") {
        p.relations = {
            rel("dahaIV1", "V0^2+V0", V0 * V0 + V0),
            rel("dahaIV2", "V1^2+V1", V1 * V1 + V1),
            rel("dahaIV3", "Vc0^2+(1/u0)Vc0", Vc0 * Vc0 + u0i * Vc0),
            rel("dahaIV4", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
            rel("dahaIV5", "q^(1/2)Vc1*V1*V0 - Vc0 - 1/u0", (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - u0i),
            rel("dahaIV6", "Vc0*Vc1*V1 [omitted from statement list]", Vc0 * Vc1 * V1),
            rel("dahaIV7", "V0*Vc0", V0 * Vc0),
        };
        return p;
    }
    if (algebra_id == "H_III") {
        p.relations = {
            rel("dahaIII1", "V0^2", V0 * V0),
            rel("dahaIII2", "(V1-k1)(V1+1/k1)", (V1 - C(k1)) * (V1 + C(inv(k1)))),
            rel("dahaIII3", "Vc0^2+(1/u0)Vc0", Vc0 * Vc0 + u0i * Vc0),
            rel("dahaIII4", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
            rel("dahaIII5", "q^(1/2)Vc1*V1*V0 - Vc0 - 1/u0", (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - u0i),
            rel("dahaIII6", "q^(1/2)Vc0*Vc1*V1 - V0", (Vc0 * Vc1 * V1).scale(rf_Q(1)) - V0),
        };
        return p;
    }
    if (algebra_id == "H_II") {
        p.relations = {
            rel("dahaII1", "V0^2+V0", V0 * V0 + V0),
            rel("dahaII2", "V1^2+V1", V1 * V1 + V1),
            rel("dahaII3", "Vc0^2+(1/u0)Vc0", Vc0 * Vc0 + u0i * Vc0),
            rel("daha-lim4-3", "Vc1^2+Vc1 [not in statement list]", Vc1 * Vc1 + Vc1),
            rel("dahaII4", "q^(1/2)Vc1*V1*V0 - Vc0 - 1/u0", (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - u0i),
            rel("dahaII5", "Vc0*Vc1", Vc0 * Vc1),
            rel("dahaII6", "V0*Vc0", V0 * Vc0),
        };
        return p;
    }
    if (algebra_id == "H_I") {
        p.relations = {
            rel("dahaI1", "V0^2", V0 * V0),
            rel("dahaI2", "V1^2+V1", V1 * V1 + V1),
            rel("dahaI3", "Vc0^2+Vc0", Vc0 * Vc0 + Vc0),
            rel("dahaI4", "Vc1^2+Vc1", Vc1 * Vc1 + Vc1),
            rel("dahaI5", "q^(1/2)Vc1*V1*V0 - Vc0 - 1", (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - one),
            rel("dahaI6", "Vc0*Vc1 [omitted from statement list]", Vc0 * Vc1),
            rel("dahaI7", "V0*Vc0", V0 * Vc0),
        };
        return p;
    }
    throw UnknownAlgebra("no defining relation list for: " + algebra_id);
}

AlgebraPresentation rewritten_presentation() {
    AlgebraPresentation p;
    p.id = "rewritten:H";
    p.algebra_id = "H";
    p.generators = {"V0", "V1", "Vc0", "Vc1"};
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    p.relations = {
        rel("rewritten1", "q^(1/2)Vc1*V1*V0 - (Vc0 - (u0 - 1/u0))",
            (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 + S("u0") - S("u0inv")),
        rel("rewritten2", "q^(1/2)Vc0*Vc1*V1 - (V0 - (k0 - 1/k0))",
            (Vc0 * Vc1 * V1).scale(rf_Q(1)) - V0 + C(bar(K0()))),
    };
    return p;
}

//-----------------------------------------------------------------------------
// Sahi-type presentations
//-----------------------------------------------------------------------------

GeneratorMap sahi_map(const std::string &algebra_id) {
    GeneratorMap m;
    m.id = "sahi-map:" + algebra_id;
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    const NCExpression V1i = V1 - C(bar(K1()));
    const NCExpression Vc1i = Vc1 - C(bar(U1()));
    if (algebra_id == "H") {
        m.images["T0"] = V0.scale(K0());
        m.images["T1"] = Vc1.scale(U1());
        m.images["X"] = (V0 * Vc0).scale(rf_Q(1));
        m.images["W"] = Vc1 * V1;
        return m;
    }
    if (algebra_id == "H_V" || algebra_id == "H_III") {
        m.images["T0"] = V0;
        m.images["T1"] = Vc1.scale(U1());
        m.images["X"] = V1i * Vc1i;
        m.images["W"] = Vc1 * V1;
        return m;
    }
    if (algebra_id == "H_IV") {
        m.images["T0"] = V0;
        m.images["T1"] = Vc1.scale(U1());
        m.images["X"] = (V1 + NCExpression(1)) * Vc1i;
        m.images["W"] = Vc1 * V1;
        return m;
    }
    throw UnknownAlgebra("no Sahi generator map for: " + algebra_id);
}

AlgebraPresentation sahi_presentation(const std::string &algebra_id) {
    AlgebraPresentation p;
    p.id = "sahi:" + algebra_id;
    p.algebra_id = algebra_id;
    p.generators = {"T0", "T1", "X", "W"};
    const NCExpression T0 = S("T0"), T1 = S("T1"), X = S("X"), W = S("W");
    const NCExpression one(1);
    const RationalFunction u1 = U1();

    if (algebra_id == "H") {
        const RationalFunction a = -u1 / K1(), b = K1() * u1, ab = a * b;
        const NCExpression c = S("u0inv").scale(-rf_Q(1) * K0()); // -q^(1/2) k0/u0
        const NCExpression d = S("u0").scale(rf_Q(1) * K0());     // q^(1/2) k0 u0
        const NCExpression qT0W = (T0 * W).scale(rf_Q(2));
        p.relations = {
            rel("sahi1-XW", "XW - 1", X * W - one),
            rel("sahi1-WX", "WX - 1", W * X - one),
            rel("sahi2", "(T1+ab)(T1+1)", (T1 + C(ab)) * (T1 + one)),
            rel("sahi3", "(T0+q^(-1)cd)(T0+1)", (T0 + C(-(K0() * K0()))) * (T0 + one)),
            rel("sahi4", "(T1X+a)(T1X+b)", (T1 * X + C(a)) * (T1 * X + C(b))),
            rel("sahi5", "(qT0X^(-1)+c)(qT0X^(-1)+d), X^(-1)=W", (qT0W + c) * (qT0W + d)),
        };
        return p;
    }
    if (algebra_id == "H_V" || algebra_id == "H_IV" || algebra_id == "H_III") {
        const RationalFunction kk1 = (algebra_id == "H_IV") ? RationalFunction(1) : K1();
        const RationalFunction a = -u1 / kk1, b = kk1 * u1, ab = a * b;
        const NCExpression c = S("u0inv").scale(-rf_Q(1)); // -q^(1/2)/u0
        const NCExpression T1i = T1.scale(-inv(ab)) + C(-(RationalFunction(1) + inv(ab)));
        p.relations.push_back(rel("sahi2", "(T1+ab)(T1+1)", (T1 + C(ab)) * (T1 + one)));
        if (algebra_id == "H_III") {
            p.relations.push_back(rel("sahi3-III", "T0^2", T0 * T0));
        } else {
            p.relations.push_back(rel("sahi3", "T0(T0+1)", T0 * (T0 + one)));
        }
        if (algebra_id == "H_IV") {
            p.relations.push_back(rel("sahi1-IV-XW", "XW", X * W));
            p.relations.push_back(rel("sahi1-IV-WX", "WX", W * X));
            p.relations.push_back(
                rel("sahi7-IV", "T1X + a - W(T1+ab+1)", T1 * X + C(a) - W * (T1 + C(ab + 1))));
        } else {
            p.relations.push_back(rel("sahi1-XW", "XW - 1", X * W - one));
            p.relations.push_back(rel("sahi1-WX", "WX - 1", W * X - one));
            p.relations.push_back(
                rel("sahi4", "(T1X+a)(T1X+b)", (T1 * X + C(a)) * (T1 * X + C(b))));
        }
        if (algebra_id == "H_III") {
            p.relations.push_back(rel("sahi6-III", "qT0W + c - XT0 [constant adjudicated to c]",
                                      (T0 * W).scale(rf_Q(2)) + c - X * T0));
        } else {
            p.relations.push_back(
                rel("sahi6", "qT0W + c - X(T0+1)", (T0 * W).scale(rf_Q(2)) + c - X * (T0 + one)));
        }
        p.relations.push_back(
            rel("sahi-inverse", "T1(-(1/ab)T1 - (1+1/ab)) - 1", T1 * T1i - one));
        return p;
    }
    throw UnknownAlgebra("no Sahi presentation for: " + algebra_id);
}

AlgebraPresentation sahi_roundtrip_presentation(const std::string &algebra_id) {
    if (algebra_id != "H_V" && algebra_id != "H_IV" && algebra_id != "H_III") {
        throw UnknownAlgebra("no Sahi round trip for: " + algebra_id);
    }
    AlgebraPresentation p;
    p.id = "sahi-roundtrip:" + algebra_id;
    p.algebra_id = algebra_id;
    p.generators = {"V0", "V1", "Vc0", "Vc1", "T0", "T1", "W"};
    const RationalFunction u1 = U1();
    const RationalFunction kk1 = (algebra_id == "H_IV") ? RationalFunction(1) : K1();
    const RationalFunction ab = (-u1 / kk1) * (kk1 * u1);
    const NCExpression T0 = S("T0"), T1 = S("T1"), W = S("W");
    const NCExpression T1i = T1.scale(-inv(ab)) + C(-(RationalFunction(1) + inv(ab)));
    p.relations = {
        rel("so3-V0", "V0 == T0", S("V0") - T0),
        rel("so3-Vc1", "Vc1 == (1/u1)T1", S("Vc1") - T1.scale(inv(u1))),
        rel("so3-Vc0", "Vc0 == q^(1/2)WT0 - 1/u0", S("Vc0") - (W * T0).scale(rf_Q(1)) + S("u0inv")),
        rel("so3-V1", "V1 == u1*T1^(-1)W", S("V1") - (T1i * W).scale(u1)),
    };
    return p;
}

//-----------------------------------------------------------------------------
// Lusztig-Demazure presentations
//-----------------------------------------------------------------------------

GeneratorMap ld_map(const std::string &algebra_id) {
    GeneratorMap m;
    m.id = "ld-map:" + algebra_id;
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    const NCExpression V1i = V1 - C(bar(K1()));
    const NCExpression Vc1i = Vc1 - C(bar(U1()));
    if (algebra_id == "H") {
        m.images["X"] = (V0 * Vc0).scale(rf_Q(1));
        m.images["Y"] = Vc1 * V0;
        m.images["T"] = Vc1;
        m.images["Xinv"] = Vc1 * V1; // = W by sahi1
        m.images["Tinv"] = Vc1i;
        m.images["Yinv"] = (V0 - C(bar(K0()))) * Vc1i;
        return m;
    }
    if (algebra_id == "H_V" || algebra_id == "H_III" || algebra_id == "H_IV") {
        m.images["X"] = (algebra_id == "H_IV") ? (V1 + NCExpression(1)) * Vc1i : V1i * Vc1i;
        m.images["Y"] = Vc1 * V0;
        m.images["T"] = Vc1;
        m.images["W"] = Vc1 * V1;
        m.images["Z"] = (algebra_id == "H_III") ? V0 * Vc1i : (V0 + NCExpression(1)) * Vc1i;
        m.images["Tinv"] = Vc1i;
        return m;
    }
    throw UnknownAlgebra("no Lusztig-Demazure map for: " + algebra_id);
}

AlgebraPresentation ld_presentation(const std::string &algebra_id) {
    AlgebraPresentation p;
    p.id = "ld:" + algebra_id;
    p.algebra_id = algebra_id;
    const NCExpression one(1);
    const RationalFunction k0 = K0(), k1 = K1(), u1 = U1();
    const NCExpression T = S("T"), X = S("X"), Y = S("Y"), Tinv = S("Tinv");

    if (algebra_id == "H") {
        p.generators = {"X", "Y", "T", "Xinv", "Tinv", "Yinv"};
        const NCExpression Xinv = S("Xinv"), Yinv = S("Yinv");
        const NCExpression u0bar = S("u0") - S("u0inv");
        p.relations = {
            rel("ld-Yinv", "Y Y^(-1) - 1", Y * Yinv - one),
            rel("LD1", "XT - T^(-1)X^(-1) - (1/k1-k1)", X * T - Tinv * Xinv - C(inv(k1) - k1)),
            rel("LD2", "Y^(-1)T - T^(-1)Y - (1/k0-k0)", Yinv * T - Tinv * Y - C(inv(k0) - k0)),
            rel("LD3", "(T-u1)(T+1/u1)", (T - C(u1)) * (T + C(inv(u1)))),
            rel("LD4",
                "YX - qT^2XY - q(k1-1/k1)TY - (k0-1/k0)TX - q^(1/2)(u0-1/u0)T",
                Y * X - (T * T * X * Y).scale(rf_Q(2)) - (T * Y).scale(rf_Q(2) * bar(k1)) -
                    (T * X).scale(bar(k0)) - (u0bar * T).scale(rf_Q(1))),
        };
        return p;
    }
    if (algebra_id == "H_V" || algebra_id == "H_IV" || algebra_id == "H_III") {
        p.generators = {"X", "Y", "T", "W", "Z"};
        const NCExpression W = S("W"), Z = S("Z");
        if (algebra_id == "H_V") {
            p.relations.push_back(rel("LD0-WX", "WX - 1", W * X - one));
            p.relations.push_back(rel("LD0-XW", "XW - 1", X * W - one));
        } else if (algebra_id == "H_IV") {
            p.relations.push_back(rel("LD0-WX", "WX", W * X));
            p.relations.push_back(rel("LD0-XW", "XW", X * W));
        } else {
            p.relations.push_back(
                rel("LD0-WX", "WX - 1 [adjudicated; printed as WX = 0]", W * X - one));
            p.relations.push_back(rel("LD0-XW", "XW - 1 [adjudicated]", X * W - one));
        }
        p.relations.push_back(rel("LD00-ZY", "ZY", Z * Y));
        p.relations.push_back(rel("LD00-YZ", "YZ", Y * Z));
        if (algebra_id == "H_IV") {
            p.relations.push_back(rel("LD1", "XT - T^(-1)W - 1", X * T - Tinv * W - one));
        } else {
            p.relations.push_back(
                rel("LD1", "XT - T^(-1)W - (1/k1-k1)", X * T - Tinv * W - C(inv(k1) - k1)));
        }
        if (algebra_id == "H_III") {
            p.relations.push_back(rel("LD2", "ZT - T^(-1)Y", Z * T - Tinv * Y));
        } else {
            p.relations.push_back(rel("LD2", "ZT - T^(-1)Y - 1", Z * T - Tinv * Y - one));
        }
        p.relations.push_back(rel("LD3", "(T-u1)(T+1/u1)", (T - C(u1)) * (T + C(inv(u1)))));
        const NCExpression quad = (T * T * X * Y).scale(rf_Q(2));
        const NCExpression tail = (S("u0inv") * T).scale(rf_Q(1));
        if (algebra_id == "H_V") {
            p.relations.push_back(rel("LD4-V", "YX - qT^2XY - q(k1-1/k1)TY + TX + q^(1/2)(1/u0)T",
                                      Y * X - quad - (T * Y).scale(rf_Q(2) * bar(k1)) + T * X + tail));
        } else if (algebra_id == "H_IV") {
            p.relations.push_back(rel("LD4-IV", "YX - qT^2XY + qTY + TX + q^(1/2)(1/u0)T",
                                      Y * X - quad + (T * Y).scale(rf_Q(2)) + T * X + tail));
        } else {
            p.relations.push_back(rel("LD4-III", "YX - qT^2XY - q(k1-1/k1)TY + q^(1/2)(1/u0)T",
                                      Y * X - quad - (T * Y).scale(rf_Q(2) * bar(k1)) + tail));
        }
        return p;
    }
    throw UnknownAlgebra("no Lusztig-Demazure presentation for: " + algebra_id);
}

AlgebraPresentation ld_roundtrip_presentation(const std::string &algebra_id) {
    if (algebra_id != "H_V" && algebra_id != "H_IV" && algebra_id != "H_III") {
        throw UnknownAlgebra("no Lusztig-Demazure round trip for: " + algebra_id);
    }
    AlgebraPresentation p;
    p.id = "ld-roundtrip:" + algebra_id;
    p.algebra_id = algebra_id;
    p.generators = {"V0", "V1", "Vc0", "Vc1", "Y", "T", "W", "Tinv"};
    const NCExpression Y = S("Y"), T = S("T"), W = S("W"), Tinv = S("Tinv");
    p.relations = {
        rel("ldinv-Vc1", "Vc1 == T", S("Vc1") - T),
        rel("ldinv-V0", "V0 == T^(-1)Y", S("V0") - Tinv * Y),
        rel("ldinv-Vc0", "Vc0 == q^(1/2)WT^(-1)Y - 1/u0",
            S("Vc0") - (W * Tinv * Y).scale(rf_Q(1)) + S("u0inv")),
        rel("ldinv-V1", "V1 == T^(-1)W", S("V1") - Tinv * W),
    };
    return p;
}

//-----------------------------------------------------------------------------
// gamma twist of H_V
//-----------------------------------------------------------------------------

GeneratorMap gamma_map() {
    GeneratorMap m;
    m.id = "gamma:H_V";
    m.images["V0"] = S("V1");
    m.images["V1"] = S("V1") * S("V0") * S("V1", -1);
    m.images["Vc1"] = S("Vc1");
    m.images["Vc0"] = S("Vc0");
    return m;
}

AlgebraPresentation gamma_presentation() {
    AlgebraPresentation p;
    p.id = "gamma:H_V";
    p.algebra_id = "H_V";
    p.generators = {"V0", "V1", "Vc0", "Vc1"};
    const RationalFunction k1 = K1(), u1 = U1();
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    const NCExpression u0i = S("u0inv"), one(1);
    p.relations = {
        rel("dahaV1-gamma", "(V0-k0)(V0+1/k0) with k0 := former k1",
            (V0 - C(k1)) * (V0 + C(inv(k1)))),
        rel("dahaV2-gamma", "(V1+1)V1", (V1 + one) * V1),
        rel("dahaV3-gamma", "Vc0^2+(1/u0)Vc0", Vc0 * Vc0 + u0i * Vc0),
        rel("dahaV4-gamma", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
        rel("dahaV5-gamma", "q^(1/2)Vc1*V1*V0 - Vc0 - 1/u0",
            (Vc1 * V1 * V0).scale(rf_Q(1)) - Vc0 - u0i),
        rel("dahaV6-gamma", "q^(1/2)V0*Vc0*Vc1 - V1 - 1",
            (V0 * Vc0 * Vc1).scale(rf_Q(1)) - V1 - one),
    };
    return p;
}

EmbeddingAssignment gamma_assignment() { return apply_to_assignment(gamma_map(), embed("H_V"), false); }

//-----------------------------------------------------------------------------
// beta involution of H
//-----------------------------------------------------------------------------

GeneratorMap beta_map() {
    GeneratorMap m;
    m.id = "beta:H";
    m.images["V0"] = S("Vc0");
    m.images["Vc0"] = S("Vc0", -1) * S("V0") * S("Vc0");
    m.images["V1"] = S("V1");
    m.images["Vc1"] = S("Vc1");
    return m;
}

AlgebraPresentation beta_presentation() {
    AlgebraPresentation p;
    p.id = "beta:H";
    p.algebra_id = "H";
    p.generators = {"V0", "V1", "Vc0", "Vc1"};
    const RationalFunction k0 = K0(), k1 = K1(), u1 = U1();
    const NCExpression V0 = S("V0"), V1 = S("V1"), Vc0 = S("Vc0"), Vc1 = S("Vc1");
    // Parameter placement after beta: (u1, k1, u0, k0) -> (u1, k1, k0, u0).
    p.relations = {
        rel("beta-daha1", "(V0'-u0)(V0'+1/u0)", (V0 - S("u0")) * (V0 + S("u0inv"))),
        rel("beta-daha2", "(V1-k1)(V1+1/k1)", (V1 - C(k1)) * (V1 + C(inv(k1)))),
        rel("beta-daha3", "(Vc0'-k0)(Vc0'+1/k0)", (Vc0 - C(k0)) * (Vc0 + C(inv(k0)))),
        rel("beta-daha4", "(Vc1-u1)(Vc1+1/u1)", (Vc1 - C(u1)) * (Vc1 + C(inv(u1)))),
        rel("beta-daha5", "Vc1*V1*V0'*Vc0' - q^(-1/2)", Vc1 * V1 * V0 * Vc0 - C(rf_Q(-1))),
    };
    return p;
}

AlgebraPresentation beta_T_presentation() {
    AlgebraPresentation p;
    p.id = "beta-T:H";
    p.algebra_id = "H";
    p.generators = {"T0", "W"};
    const RationalFunction k0 = K0();
    const NCExpression one(1);
    // beta T0 = -(q/c) X^(-1) T0 - (1+d/c), with q/c = -q^(1/2) u0/k0 central
    // and d/c = -u0^2; X^(-1) = W.
    const NCExpression bT0 =
        (S("u0") * S("W") * S("T0")).scale(rf_Q(1) / k0) - one + S("u0") * S("u0");
    const NCExpression cp = S("u0").scale(-rf_Q(1) / k0); // c' = q/c
    const NCExpression dp = S("u0").scale(rf_Q(1) * k0);  // d' = d
    const NCExpression qbT0W = (bT0 * S("W")).scale(rf_Q(2));
    p.relations = {
        rel("beta-sahi3", "(T0'+q^(-1)c'd')(T0'+1)", (bT0 - S("u0") * S("u0")) * (bT0 + one)),
        rel("beta-sahi5", "(qT0'X^(-1)+c')(qT0'X^(-1)+d')", (qbT0W + cp) * (qbT0W + dp)),
    };
    return p;
}

EmbeddingAssignment beta_assignment(const std::string &algebra_id) {
    return apply_to_assignment(beta_map(), embed(algebra_id), false);
}

//-----------------------------------------------------------------------------
// Assignments binding mapped generators
//-----------------------------------------------------------------------------

EmbeddingAssignment sahi_assignment(const std::string &algebra_id) {
    return apply_to_assignment(sahi_map(algebra_id), embed(algebra_id), true);
}

EmbeddingAssignment ld_assignment(const std::string &algebra_id) {
    return apply_to_assignment(ld_map(algebra_id), embed(algebra_id), true);
}

//-----------------------------------------------------------------------------
// Catalogue
//-----------------------------------------------------------------------------

std::vector<AlgebraPresentation> presentation_catalogue() {
    std::vector<AlgebraPresentation> out;
    for (const char *alg : {"H", "H_V", "H_IV", "H_III", "H_II", "H_I"}) {
        out.push_back(daha_presentation(alg));
    }
    out.push_back(rewritten_presentation());
    for (const char *alg : {"H", "H_V", "H_IV", "H_III"}) { out.push_back(sahi_presentation(alg)); }
    for (const char *alg : {"H_V", "H_IV", "H_III"}) { out.push_back(sahi_roundtrip_presentation(alg)); }
    for (const char *alg : {"H", "H_V", "H_IV", "H_III"}) { out.push_back(ld_presentation(alg)); }
    for (const char *alg : {"H_V", "H_IV", "H_III"}) { out.push_back(ld_roundtrip_presentation(alg)); }
    out.push_back(gamma_presentation());
    out.push_back(beta_presentation());
    out.push_back(beta_T_presentation());
    return out;
}

std::string catalogue_to_json() {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const AlgebraPresentation &p : presentation_catalogue()) {
        nlohmann::ordered_json jp;
        jp["id"] = p.id;
        jp["algebra"] = p.algebra_id;
        jp["generators"] = p.generators;
        nlohmann::ordered_json rels = nlohmann::ordered_json::array();
        for (const Relation &r : p.relations) {
            nlohmann::ordered_json jr;
            jr["id"] = r.id;
            jr["anchor"] = r.anchor;
            jr["expr"] = r.expr.render();
            rels.push_back(std::move(jr));
        }
        jp["relations"] = std::move(rels);
        root.push_back(std::move(jp));
    }
    return root.dump(2) + "\n";
}

} // namespace kernel
