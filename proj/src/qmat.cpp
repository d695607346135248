/**
 * @file qmat.cpp
 * @brief 2x2 torus matrices, the six embeddings, and word evaluation.
 */

#include "kernel/qmat.hpp"

#include <cstdlib>

namespace kernel {

//-----------------------------------------------------------------------------
// TorusMatrix2
//-----------------------------------------------------------------------------

TorusMatrix2::TorusMatrix2(TorusElement a, TorusElement b, TorusElement c, TorusElement d) {
    m_[0][0] = std::move(a);
    m_[0][1] = std::move(b);
    m_[1][0] = std::move(c);
    m_[1][1] = std::move(d);
}

TorusMatrix2 TorusMatrix2::identity(const TorusElement &c) {
    TorusMatrix2 out;
    out.m_[0][0] = c;
    out.m_[1][1] = c;
    return out;
}

bool TorusMatrix2::is_zero() const {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (!m_[r][c].is_zero()) { return false; }
        }
    }
    return true;
}

TorusMatrix2 TorusMatrix2::operator-() const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = -m_[r][c]; }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::operator+(const TorusMatrix2 &o) const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][c] + o.m_[r][c]; }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::operator-(const TorusMatrix2 &o) const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][c] - o.m_[r][c]; }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::operator*(const TorusMatrix2 &o) const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][0] * o.m_[0][c] + m_[r][1] * o.m_[1][c]; }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::scale(const TorusElement &c) const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < 2; ++k) { out.m_[r][k] = c * m_[r][k]; }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::scale(const RationalFunction &c) const { return scale(TorusElement(c)); }

TorusMatrix2 TorusMatrix2::pow(std::uint32_t n) const {
    TorusMatrix2 out = identity();
    for (std::uint32_t k = 0; k < n; ++k) { out = out * *this; }
    return out;
}

TorusMatrix2 TorusMatrix2::commutator(const TorusMatrix2 &o) const { return *this * o - o * *this; }

TorusMatrix2 TorusMatrix2::classical_limit() const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][c].classical_limit(); }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::substitute(const Substitution &s) const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][c].substitute(s); }
    }
    return out;
}

TorusMatrix2 TorusMatrix2::reduce_central() const {
    TorusMatrix2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) { out.m_[r][c] = m_[r][c].reduce_central(); }
    }
    return out;
}

std::string TorusMatrix2::render() const {
    return "[[" + m_[0][0].render() + ", " + m_[0][1].render() + "], [" + m_[1][0].render() + ", " +
           m_[1][1].render() + "]]";
}

TorusMatrix2 qcomm(const TorusMatrix2 &a, const TorusMatrix2 &b) {
    return (a * b).scale(rf_Q(1)) - (b * a).scale(rf_Q(-1));
}

//-----------------------------------------------------------------------------
// NCExpression
//-----------------------------------------------------------------------------

NCExpression::NCExpression(long c) {
    if (c != 0) { terms_.push_back({RationalFunction(c), {}}); }
}

NCExpression::NCExpression(const RationalFunction &c) {
    if (!c.is_zero()) { terms_.push_back({c, {}}); }
}

NCExpression NCExpression::symbol(const std::string &name, int exp) {
    NCExpression out;
    NCTerm t;
    t.coeff = RationalFunction(1);
    if (exp != 0) { t.word.push_back({name, exp}); }
    out.terms_.push_back(std::move(t));
    return out;
}

NCExpression NCExpression::operator-() const {
    NCExpression out;
    for (const NCTerm &t : terms_) { out.terms_.push_back({-t.coeff, t.word}); }
    return out;
}

NCExpression NCExpression::operator+(const NCExpression &o) const {
    NCExpression out = *this;
    for (const NCTerm &t : o.terms_) { out.terms_.push_back(t); }
    return out;
}

NCExpression NCExpression::operator-(const NCExpression &o) const { return *this + (-o); }

NCExpression NCExpression::operator*(const NCExpression &o) const {
    NCExpression out;
    for (const NCTerm &t1 : terms_) {
        for (const NCTerm &t2 : o.terms_) {
            NCTerm t;
            t.coeff = t1.coeff * t2.coeff;
            t.word = t1.word;
            for (const WordFactor &f : t2.word) {
                // Merge adjacent equal symbols so words stay tidy.
                if (!t.word.empty() && t.word.back().symbol == f.symbol) {
                    t.word.back().exp += f.exp;
                    if (t.word.back().exp == 0) { t.word.pop_back(); }
                } else {
                    t.word.push_back(f);
                }
            }
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

NCExpression NCExpression::scale(const RationalFunction &c) const {
    NCExpression out;
    if (c.is_zero()) { return out; }
    for (const NCTerm &t : terms_) { out.terms_.push_back({t.coeff * c, t.word}); }
    return out;
}

NCExpression NCExpression::pow(std::uint32_t n) const {
    NCExpression out(1);
    for (std::uint32_t k = 0; k < n; ++k) { out = out * *this; }
    return out;
}

NCExpression NCExpression::inverse() const {
    if (terms_.size() != 1) { throw NoInverseAvailable("NC inverse requires a single-term expression"); }
    const NCTerm &t = terms_.front();
    NCTerm inv_t;
    inv_t.coeff = t.coeff.inverse();
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) { inv_t.word.push_back({it->symbol, -it->exp}); }
    NCExpression out;
    out.terms_.push_back(std::move(inv_t));
    return out;
}

std::string NCExpression::render() const {
    if (terms_.empty()) { return "0"; }
    std::string out;
    bool first = true;
    for (const NCTerm &t : terms_) {
        std::string word;
        for (const WordFactor &f : t.word) {
            if (!word.empty()) { word += "*"; }
            word += f.symbol;
            if (f.exp != 1) { word += "^" + std::to_string(f.exp); }
        }
        std::string term;
        bool simple_coeff = t.coeff.is_polynomial() && t.coeff.num().term_count() <= 1;
        if (word.empty()) {
            term = simple_coeff ? t.coeff.render() : "(" + t.coeff.render() + ")";
        } else if (t.coeff == RationalFunction(1)) {
            term = word;
        } else if (t.coeff == RationalFunction(-1)) {
            term = "-" + word;
        } else if (simple_coeff) {
            term = t.coeff.render() + "*" + word;
        } else {
            term = "(" + t.coeff.render() + ")*" + word;
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

//-----------------------------------------------------------------------------
// Embeddings
//-----------------------------------------------------------------------------

TorusElement u0_central() { return TorusElement::e(-1, -1, -1, -rf_i()); }

namespace {

TorusElement te(int a, int b, int c, const RationalFunction &k = RationalFunction(1)) {
    return TorusElement::e(a, b, c, k);
}

const std::string kAlgebras[] = {"H", "H_V", "H_IV", "H_III", "H_II", "H_I"};

} // namespace

EmbeddingAssignment embed(const std::string &algebra_id, const std::string &variant) {
    bool known = false;
    for (const std::string &a : kAlgebras) { known = known || (a == algebra_id); }
    if (!known) { throw UnknownAlgebra("unknown algebra id: " + algebra_id); }
    if (variant != "" && variant != "printed" && variant != "printed_q") {
        throw UnknownAlgebra("unknown embedding variant: " + variant);
    }

    const RationalFunction I = rf_i();
    const RationalFunction k0 = rf_var("k0"), k1 = rf_var("k1"), u1 = rf_var("u1");
    const RationalFunction k0i = inv(k0), k1i = inv(k1), u1i = inv(u1);
    const TorusElement u0 = u0_central();
    const TorusElement u0i = u0.inverse();

    EmbeddingAssignment out;
    out.algebra_id = algebra_id;
    out.scalars["u0"] = u0;
    out.scalars["u0inv"] = u0i;

    // Shared building blocks.
    const TorusMatrix2 V1_generic(TorusElement(k1 - k1i) + te(0, 1, 0, -I),
                                  TorusElement(k1 - k1i) + te(0, -1, 0, -I) + te(0, 1, 0, -I),
                                  te(0, 1, 0, I), te(0, 1, 0, I));
    const TorusMatrix2 V1_unipotent(TorusElement(-1) + te(0, 1, 0, -I), TorusElement(-1) + te(0, 1, 0, -I),
                                    te(0, 1, 0, I), te(0, 1, 0, I));
    const TorusMatrix2 Vc1_generic(TorusElement(), te(1, 0, 0, -I), te(-1, 0, 0, I), TorusElement(u1 - u1i));
    const TorusMatrix2 Vc1_unipotent(TorusElement(), te(1, 0, 0, -I), TorusElement(), TorusElement(-1));
    const TorusMatrix2 V0_reflection(TorusElement(-1), TorusElement(),
                                     TorusElement(1) + te(0, 0, 1, I), TorusElement());
    const TorusMatrix2 V0_nilpotent(TorusElement(), TorusElement(), te(0, 0, 1, I), TorusElement());

    if (algebra_id == "H") {
        TorusMatrix2 V0(TorusElement(k0 - k0i) + te(0, 0, -1, -I), te(0, 0, -1, -I),
                        TorusElement(k0i - k0) + te(0, 0, -1, I) + te(0, 0, 1, I), te(0, 0, -1, I));
        TorusElement s = te(-1, -1, 0, k0i - k0) + te(-1, 0, 1, k1i - k1) + te(0, 1, 1, u1i - u1) +
                         te(-1, -1, 1, I) + te(-1, 1, 1, I) - u0;
        TorusElement entry21 = s;
        if (variant == "printed") {
            TorusElement sp = te(-1, -1, 0, k0 - k0i) + te(-1, 0, 1, k1 - k1i) + te(0, 1, 1, u1 - u1i) +
                              te(-1, -1, 1, I) + te(-1, 1, 1, I) - u0;
            entry21 = sp.scale(rf_Q(1));
        }
        out.generators["V0"] = V0;
        out.generators["V1"] = V1_generic;
        out.generators["Vc1"] = Vc1_generic;
        out.generators["Vc0"] = TorusMatrix2(u0, TorusElement(), entry21, -u0i);
        return out;
    }
    if (algebra_id == "H_V") {
        TorusElement s = te(-1, -1, 0, RationalFunction(1)) + te(-1, 0, 1, k1i - k1) + te(0, 1, 1, u1i - u1) +
                         te(-1, -1, 1, I) + te(-1, 1, 1, I);
        TorusElement entry21 = (variant == "printed") ? s.scale(rf_Q(1)) : s;
        out.generators["V0"] = V0_reflection;
        out.generators["V1"] = V1_generic;
        out.generators["Vc1"] = Vc1_generic;
        out.generators["Vc0"] = TorusMatrix2(TorusElement(), TorusElement(), entry21, -u0i);
        return out;
    }
    if (algebra_id == "H_IV") {
        TorusElement s = te(-1, 0, 1, RationalFunction(1)) + te(0, 1, 1, u1i - u1) + te(-1, 1, 1, I);
        TorusElement entry21 = (variant == "printed") ? s.scale(rf_Q(1)) : s;
        out.generators["V0"] = V0_reflection;
        out.generators["V1"] = V1_unipotent;
        out.generators["Vc1"] = Vc1_generic;
        out.generators["Vc0"] = TorusMatrix2(TorusElement(), TorusElement(), entry21, -u0i);
        return out;
    }
    if (algebra_id == "H_III") {
        TorusElement s = te(-1, 0, 1, k1i - k1) + te(0, 1, 1, u1i - u1) + te(-1, -1, 1, I) + te(-1, 1, 1, I);
        TorusElement entry21 = s;
        if (variant == "printed") {
            TorusElement sp = te(-1, -1, 0, RationalFunction(1)) + te(-1, 0, 1, k1i - k1) +
                              te(0, 1, 1, u1i - u1) + te(-1, -1, 1, I) + te(-1, 1, 1, I);
            entry21 = sp.scale(rf_Q(1));
        }
        out.generators["V0"] = V0_nilpotent;
        out.generators["V1"] = V1_generic;
        out.generators["Vc1"] = Vc1_generic;
        out.generators["Vc0"] = TorusMatrix2(TorusElement(), TorusElement(), entry21, -u0i);
        return out;
    }
    if (algebra_id == "H_II") {
        TorusMatrix2 Vc0 =
            (variant == "printed_q")
                ? TorusMatrix2(TorusElement(), TorusElement(), te(0, 1, 1, rf_Q(1)), (-u0i).scale(rf_Q(1)))
                : TorusMatrix2(TorusElement(), TorusElement(), te(0, 1, 1, RationalFunction(1)), -u0i);
        out.generators["V0"] = V0_reflection;
        out.generators["V1"] = V1_unipotent;
        out.generators["Vc1"] = Vc1_unipotent;
        out.generators["Vc0"] = Vc0;
        return out;
    }
    // H_I
    TorusMatrix2 Vc0 = (variant == "printed_q")
                           ? TorusMatrix2(TorusElement(), TorusElement(), te(0, 1, 1, rf_Q(1)),
                                          TorusElement(-rf_Q(1)))
                           : TorusMatrix2(TorusElement(), TorusElement(), te(0, 1, 1, RationalFunction(1)),
                                          TorusElement(-1));
    out.scalars.clear(); // u0 is specialised to 1 here
    out.generators["V0"] = V0_nilpotent;
    out.generators["V1"] = V1_unipotent;
    out.generators["Vc1"] = Vc1_unipotent;
    out.generators["Vc0"] = Vc0;
    out.reduce_residuals = true;
    return out;
}

TorusMatrix2 generator_inverse(const EmbeddingAssignment &a, const std::string &name) {
    auto it = a.generators.find(name);
    if (it == a.generators.end()) { throw UnboundGenerator("no generator named " + name + " in " + a.algebra_id); }
    const std::string &alg = a.algebra_id;
    // Defining quadratics g^2 = c1 g + c0: the inverse exists iff c0 != 0,
    // and equals (g - c1)/c0.  All invertible cases here have c0 = 1.
    bool invertible = false;
    TorusElement c1;
    if (name == "V0" && alg == "H") {
        invertible = true;
        c1 = TorusElement(bar(rf_var("k0")));
    } else if (name == "V1" && (alg == "H" || alg == "H_V" || alg == "H_III")) {
        invertible = true;
        c1 = TorusElement(bar(rf_var("k1")));
    } else if (name == "Vc1" && (alg == "H" || alg == "H_V" || alg == "H_IV" || alg == "H_III")) {
        invertible = true;
        c1 = TorusElement(bar(rf_var("u1")));
    } else if (name == "Vc0" && alg == "H") {
        invertible = true;
        c1 = u0_central() - u0_central().inverse();
    }
    if (!invertible) {
        throw NoInverseAvailable("generator " + name + " has vanishing quadratic constant in " + alg);
    }
    return it->second - TorusMatrix2::identity(c1);
}

TorusMatrix2 eval_nc(const NCExpression &expr, const EmbeddingAssignment &a) {
    TorusMatrix2 acc;
    for (const NCTerm &t : expr.terms()) {
        TorusMatrix2 m = TorusMatrix2::identity(TorusElement(t.coeff));
        for (const WordFactor &f : t.word) {
            TorusMatrix2 g;
            auto it = a.generators.find(f.symbol);
            if (it != a.generators.end()) {
                g = (f.exp >= 0) ? it->second : generator_inverse(a, f.symbol);
            } else {
                auto s = a.scalars.find(f.symbol);
                if (s == a.scalars.end()) {
                    throw UnboundGenerator("unbound symbol " + f.symbol + " in " + a.algebra_id);
                }
                g = TorusMatrix2::identity((f.exp >= 0) ? s->second : s->second.inverse());
            }
            std::uint32_t n = static_cast<std::uint32_t>(f.exp >= 0 ? f.exp : -f.exp);
            m = m * g.pow(n);
        }
        acc = acc + m;
    }
    return acc;
}

TorusMatrix2 residual(const NCExpression &expr, const EmbeddingAssignment &a) {
    TorusMatrix2 r = eval_nc(expr, a);
    return a.reduce_residuals ? r.reduce_central() : r;
}

} // namespace kernel
