/**
 * @file qtorus.cpp
 * @brief Implementation of the rank-3 quantum torus.
 */

#include "kernel/qtorus.hpp"

namespace kernel {

int torus_omega(const TorusExp &m, const TorusExp &n) {
    return (m[0] * n[1] - m[1] * n[0]) + (m[1] * n[2] - m[2] * n[1]) + (m[2] * n[0] - m[0] * n[2]);
}

TorusElement TorusElement::e(int m1, int m2, int m3, const RationalFunction &c) {
    TorusElement out;
    out.add_term({m1, m2, m3}, c);
    return out;
}

void TorusElement::add_term(const TorusExp &m, const RationalFunction &c) {
    if (c.is_zero()) { return; }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) { terms_.erase(it); }
    }
}

TorusElement TorusElement::operator-() const {
    TorusElement out;
    for (const auto &[m, c] : terms_) { out.terms_.emplace(m, -c); }
    return out;
}

TorusElement TorusElement::operator+(const TorusElement &o) const {
    TorusElement out = *this;
    for (const auto &[m, c] : o.terms_) { out.add_term(m, c); }
    return out;
}

TorusElement TorusElement::operator-(const TorusElement &o) const {
    TorusElement out = *this;
    for (const auto &[m, c] : o.terms_) { out.add_term(m, -c); }
    return out;
}

TorusElement TorusElement::operator*(const TorusElement &o) const {
    TorusElement out;
    for (const auto &[m, a] : terms_) {
        for (const auto &[n, b] : o.terms_) {
            TorusExp k = {m[0] + n[0], m[1] + n[1], m[2] + n[2]};
            out.add_term(k, a * b * rf_Q(-torus_omega(m, n)));
        }
    }
    return out;
}

TorusElement TorusElement::scale(const RationalFunction &c) const {
    TorusElement out;
    if (c.is_zero()) { return out; }
    for (const auto &[m, a] : terms_) { out.terms_.emplace(m, a * c); }
    return out;
}

TorusElement TorusElement::inverse() const {
    if (terms_.size() != 1) {
        throw NoInverseAvailable("torus inverse requires a single-term element");
    }
    const auto &[m, c] = *terms_.begin();
    TorusElement out;
    out.add_term({-m[0], -m[1], -m[2]}, c.inverse());
    return out;
}

bool TorusElement::is_central() const {
    static const TorusExp basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto &[m, c] : terms_) {
        (void)c;
        for (const TorusExp &b : basis) {
            if (torus_omega(m, b) != 0) { return false; }
        }
    }
    return true;
}

TorusElement TorusElement::commutator(const TorusElement &o) const { return *this * o - o * *this; }

TorusElement TorusElement::classical_limit() const {
    const Substitution s = make_subst({{"Q", rf_int(1)}});
    TorusElement out;
    for (const auto &[m, c] : terms_) {
        try {
            out.add_term(m, c.substitute(s));
        } catch (const DivisionByZero &) {
            throw PoleAtQ1("classical limit: coefficient has a pole at Q = 1");
        }
    }
    return out;
}

TorusElement TorusElement::substitute(const Substitution &s) const {
    TorusElement out;
    for (const auto &[m, c] : terms_) { out.add_term(m, c.substitute(s)); }
    return out;
}

TorusElement TorusElement::reduce_central() const {
    const GaussianRational mi(mpq_class(0), mpq_class(-1)); // -i
    TorusElement out;
    for (const auto &[m, c] : terms_) {
        TorusExp k = {m[0] - m[2], m[1] - m[2], 0};
        GaussianRational phase(1);
        int n = m[2];
        if (n >= 0) {
            for (int j = 0; j < n; ++j) { phase = phase * mi; }
        } else {
            for (int j = 0; j < -n; ++j) { phase = phase / mi; }
        }
        out.add_term(k, c * RationalFunction(phase));
    }
    return out;
}

std::string TorusElement::render() const {
    if (terms_.empty()) { return "0"; }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        std::string exp;
        for (int j = 0; j < 3; ++j) {
            if (m[j] == 0) { continue; }
            if (!exp.empty()) { exp += (m[j] > 0) ? " + " : " - "; }
            else if (m[j] < 0) {
                exp += "-";
            }
            int a = m[j] > 0 ? m[j] : -m[j];
            if (a != 1) { exp += std::to_string(a) + " "; }
            exp += "S" + std::to_string(j + 1);
        }
        std::string term;
        if (exp.empty()) {
            term = c.is_polynomial() && c.num().term_count() <= 1 ? c.render() : "(" + c.render() + ")";
        } else {
            std::string head;
            if (c == RationalFunction(1)) { head = ""; }
            else if (c == RationalFunction(-1)) {
                head = "-";
            } else if (c.is_polynomial() && c.num().term_count() == 1) {
                head = c.render() + "·";
            } else {
                head = "(" + c.render() + ")·";
            }
            term = head + "e^{" + exp + "}";
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

} // namespace kernel
