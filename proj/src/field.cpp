/**
 * @file field.cpp
 * @brief Implementation of the exact coefficient arithmetic layer.
 */

#include "kernel/field.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace kernel {

//-----------------------------------------------------------------------------
// Variable registry
//-----------------------------------------------------------------------------

namespace {

struct Registry {
    std::vector<std::string> names;
    std::unordered_map<std::string, VarId> index;
    mutable std::shared_mutex mutex;

    Registry() {
        // Pre-seeded parameter order; it fixes the monomial order and thereby
        // every rendered output.  Extensions append after these.
        for (const char *n : {"Q", "k0", "k1", "u0", "u1", "a", "b", "c", "d", "lam",
                              "x", "P1", "P2", "P3", "h1", "h2", "h3", "f1", "f2", "f3"}) {
            index.emplace(n, static_cast<VarId>(names.size()));
            names.emplace_back(n);
        }
    }
};

Registry &registry() {
    static Registry r;
    return r;
}

} // namespace

VarId var_id(const std::string &name) {
    Registry &r = registry();
    {
        std::shared_lock lock(r.mutex);
        auto it = r.index.find(name);
        if (it != r.index.end()) { return it->second; }
    }
    std::unique_lock lock(r.mutex);
    auto it = r.index.find(name);
    if (it != r.index.end()) { return it->second; }
    VarId id = static_cast<VarId>(r.names.size());
    r.names.push_back(name);
    r.index.emplace(name, id);
    return id;
}

const std::string &var_name(VarId id) {
    Registry &r = registry();
    std::shared_lock lock(r.mutex);
    return r.names.at(id);
}

std::size_t registry_size() {
    Registry &r = registry();
    std::shared_lock lock(r.mutex);
    return r.names.size();
}

//-----------------------------------------------------------------------------
// GaussianRational rendering
//-----------------------------------------------------------------------------

std::string GaussianRational::render() const {
    if (is_zero()) { return "0"; }
    std::string out;
    if (re != 0) { out += re.get_str(); }
    if (im != 0) {
        if (re != 0) { out += (im > 0) ? "+" : "-"; }
        else if (im < 0) {
            out += "-";
        }
        mpq_class m = abs(im);
        if (m != 1) {
            out += m.get_str();
            out += "*";
        }
        out += "i";
    }
    return out;
}

//-----------------------------------------------------------------------------
// ParamMonomial
//-----------------------------------------------------------------------------

ParamMonomial ParamMonomial::variable(VarId v, std::int32_t exp) {
    ParamMonomial m;
    if (exp != 0) { m.exps_.emplace_back(v, exp); }
    return m;
}

std::int32_t ParamMonomial::exponent_of(VarId v) const {
    for (const auto &[var, exp] : exps_) {
        if (var == v) { return exp; }
        if (var > v) { break; }
    }
    return 0;
}

ParamMonomial ParamMonomial::with_exponent(VarId v, std::int32_t exp) const {
    ParamMonomial out;
    out.exps_.reserve(exps_.size() + 1);
    bool placed = false;
    for (const auto &p : exps_) {
        if (p.first == v) {
            if (exp != 0) { out.exps_.emplace_back(v, exp); }
            placed = true;
        } else {
            if (!placed && p.first > v) {
                if (exp != 0) { out.exps_.emplace_back(v, exp); }
                placed = true;
            }
            out.exps_.push_back(p);
        }
    }
    if (!placed && exp != 0) { out.exps_.emplace_back(v, exp); }
    return out;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial &o) const {
    ParamMonomial out;
    out.exps_.reserve(exps_.size() + o.exps_.size());
    auto it1 = exps_.begin();
    auto it2 = o.exps_.begin();
    while (it1 != exps_.end() || it2 != o.exps_.end()) {
        if (it2 == o.exps_.end() || (it1 != exps_.end() && it1->first < it2->first)) {
            out.exps_.push_back(*it1++);
        } else if (it1 == exps_.end() || it2->first < it1->first) {
            out.exps_.push_back(*it2++);
        } else {
            std::int32_t e = it1->second + it2->second;
            if (e != 0) { out.exps_.emplace_back(it1->first, e); }
            ++it1;
            ++it2;
        }
    }
    return out;
}

ParamMonomial ParamMonomial::operator/(const ParamMonomial &o) const { return *this * o.pow(-1); }

ParamMonomial ParamMonomial::pow(std::int32_t n) const {
    ParamMonomial out;
    if (n == 0) { return out; }
    out.exps_.reserve(exps_.size());
    for (const auto &[var, exp] : exps_) { out.exps_.emplace_back(var, exp * n); }
    return out;
}

int ParamMonomial::compare(const ParamMonomial &o) const {
    auto it1 = exps_.begin();
    auto it2 = o.exps_.begin();
    while (it1 != exps_.end() || it2 != o.exps_.end()) {
        if (it2 == o.exps_.end() || (it1 != exps_.end() && it1->first < it2->first)) {
            // *this has a nonzero exponent at a variable where o has 0.
            return (it1->second > 0) ? +1 : -1;
        }
        if (it1 == exps_.end() || it2->first < it1->first) {
            return (it2->second > 0) ? -1 : +1;
        }
        if (it1->second != it2->second) { return (it1->second < it2->second) ? -1 : +1; }
        ++it1;
        ++it2;
    }
    return 0;
}

std::string ParamMonomial::render() const {
    std::string out;
    bool first = true;
    for (const auto &[var, exp] : exps_) {
        if (!first) { out += "*"; }
        first = false;
        out += var_name(var);
        if (exp != 1) {
            out += "^";
            out += std::to_string(exp);
        }
    }
    return out;
}

//-----------------------------------------------------------------------------
// Poly
//-----------------------------------------------------------------------------

Poly Poly::variable(VarId v, std::int32_t exp) { return Poly(ParamMonomial::variable(v, exp)); }

Poly Poly::variable(const std::string &name, std::int32_t exp) { return variable(var_id(name), exp); }

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

void Poly::add_term(const ParamMonomial &m, const GaussianRational &c) {
    if (c.is_zero()) { return; }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) { terms_.erase(it); }
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto &[m, c] : terms_) { out.terms_.emplace(m, -c); }
    return out;
}

Poly Poly::operator+(const Poly &o) const {
    Poly out = *this;
    for (const auto &[m, c] : o.terms_) { out.add_term(m, c); }
    return out;
}

Poly Poly::operator-(const Poly &o) const {
    Poly out = *this;
    for (const auto &[m, c] : o.terms_) { out.add_term(m, -c); }
    return out;
}

Poly Poly::operator*(const Poly &o) const {
    Poly out;
    for (const auto &[m1, c1] : terms_) {
        for (const auto &[m2, c2] : o.terms_) { out.add_term(m1 * m2, c1 * c2); }
    }
    return out;
}

Poly Poly::operator*(const GaussianRational &c) const {
    Poly out;
    if (c.is_zero()) { return out; }
    for (const auto &[m, k] : terms_) { out.terms_.emplace(m, k * c); }
    return out;
}

Poly Poly::operator*(const ParamMonomial &m) const {
    Poly out;
    for (const auto &[mon, c] : terms_) { out.terms_.emplace(mon * m, c); }
    return out;
}

Poly Poly::pow(std::uint32_t n) const {
    Poly out(1);
    for (std::uint32_t k = 0; k < n; ++k) { out = out * *this; }
    return out;
}

ParamMonomial Poly::content() const {
    // Componentwise minimum of the exponent vectors, computed per variable.
    std::map<VarId, std::int32_t> mins;
    std::map<VarId, std::size_t> occurrences;
    for (const auto &[m, c] : terms_) {
        (void)c;
        for (const auto &[var, exp] : m.exps()) {
            auto [it, inserted] = mins.emplace(var, exp);
            if (!inserted) { it->second = std::min(it->second, exp); }
            occurrences[var] += 1;
        }
    }
    ParamMonomial out;
    for (const auto &[var, mn] : mins) {
        // A variable absent from some monomial has exponent 0 there.
        std::int32_t lower = (occurrences[var] == terms_.size()) ? mn : std::min(mn, 0);
        if (lower != 0) { out = out.with_exponent(var, lower); }
    }
    return out;
}

std::string Poly::render() const {
    if (terms_.empty()) { return "0"; }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ParamMonomial &m = it->first;
        const GaussianRational &c = it->second;
        std::string term;
        if (m.is_unit()) {
            term = (c.re != 0 && c.im != 0) ? "(" + c.render() + ")" : c.render();
        } else if (c.re != 0 && c.im != 0) {
            term = "(" + c.render() + ")*" + m.render();
        } else if (c == GaussianRational(1)) {
            term = m.render();
        } else if (c == GaussianRational(-1)) {
            term = "-" + m.render();
        } else {
            term = c.render() + "*" + m.render();
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

std::optional<Poly> divide_exact(const Poly &a, const Poly &b) {
    if (b.is_zero()) { throw DivisionByZero("divide_exact: zero divisor"); }
    if (a.is_zero()) { return Poly(); }
    if (b.is_one()) { return a; }

    // Shift both operands to ordinary (exponent >= 0) polynomials; the
    // monomial parts divide trivially and are reattached at the end.
    const ParamMonomial ca = a.content();
    const ParamMonomial cb = b.content();
    Poly ra = a * ca.inverse();
    Poly rb = b * cb.inverse();

    // Quick reject: every per-variable degree of the quotient must be >= 0.
    {
        std::map<VarId, std::int32_t> dega, degb;
        for (const auto &[m, c] : ra.terms()) {
            (void)c;
            for (const auto &[var, exp] : m.exps()) {
                auto [it, ins] = dega.emplace(var, exp);
                if (!ins) { it->second = std::max(it->second, exp); }
            }
        }
        for (const auto &[m, c] : rb.terms()) {
            (void)c;
            for (const auto &[var, exp] : m.exps()) {
                auto [it, ins] = degb.emplace(var, exp);
                if (!ins) { it->second = std::max(it->second, exp); }
            }
        }
        for (const auto &[var, db] : degb) {
            auto it = dega.find(var);
            if (it == dega.end() || it->second < db) { return std::nullopt; }
        }
    }

    // Classical leading-term division; exponents stay nonnegative, so the
    // strictly decreasing leading monomial guarantees termination.
    Poly quotient;
    Poly rem = ra;
    const ParamMonomial &ltb = rb.leading_monomial();
    const GaussianRational &lcb = rb.leading_coefficient();
    while (!rem.is_zero()) {
        const ParamMonomial &lta = rem.leading_monomial();
        ParamMonomial t = lta / ltb;
        for (const auto &[var, exp] : t.exps()) {
            (void)var;
            if (exp < 0) { return std::nullopt; }
        }
        GaussianRational tc = rem.leading_coefficient() / lcb;
        quotient.add_term(t, tc);
        rem = rem - (rb * Poly(t, tc));
    }
    return quotient * (ca / cb);
}

RationalFunction Poly::substitute(const Substitution &s) const {
    RationalFunction acc; // zero
    for (const auto &[m, c] : terms_) {
        RationalFunction term{Poly(c)};
        ParamMonomial untouched;
        bool vanished = false;
        for (const auto &[var, exp] : m.exps()) {
            auto it = s.find(var);
            if (it == s.end()) {
                untouched = untouched.with_exponent(var, exp);
                continue;
            }
            if (it->second.is_zero()) {
                if (exp < 0) {
                    throw SubstituteZeroIntoNegativePower("substitute: " + var_name(var) +
                                                          " -> 0 occurs with exponent " + std::to_string(exp));
                }
                vanished = true;
                continue;
            }
            term = term * it->second.pow(exp);
        }
        if (vanished) { continue; }
        acc = acc + term * RationalFunction(Poly(untouched));
    }
    return acc;
}

//-----------------------------------------------------------------------------
// RationalFunction
//-----------------------------------------------------------------------------

namespace {

/// Shared canonicalization; see field.hpp for the invariants established.
void canonicalize(Poly &num, Poly &den) {
    if (den.is_zero()) { throw DivisionByZero("RationalFunction: zero denominator"); }
    if (num.is_zero()) {
        den = Poly(1);
        return;
    }
    // Strip the denominator's monomial content (absorbed by the numerator).
    ParamMonomial c = den.content();
    if (!c.is_unit()) {
        ParamMonomial cinv = c.inverse();
        den = den * cinv;
        num = num * cinv;
    }
    // Scale the denominator's leading coefficient to 1.
    const GaussianRational &lc = den.leading_coefficient();
    if (!lc.is_one()) {
        GaussianRational inv_lc = GaussianRational(1) / lc;
        den = den * inv_lc;
        num = num * inv_lc;
    }
    if (den.is_one()) { return; }
    // Collapse exact quotients.
    if (auto q = divide_exact(num, den)) {
        num = std::move(*q);
        den = Poly(1);
    }
}

} // namespace

RationalFunction::RationalFunction(Poly num, Poly den)
  : num_(std::move(num))
  , den_(std::move(den)) {
    canonicalize(num_, den_);
}

RationalFunction RationalFunction::variable(const std::string &name, std::int32_t exp) {
    return RationalFunction(Poly::variable(name, exp));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction &o) const {
    if (den_ == o.den_) { return RationalFunction(num_ + o.num_, den_); }
    if (auto q = divide_exact(o.den_, den_)) {
        // den divides o.den: common denominator o.den.
        return RationalFunction(num_ * *q + o.num_, o.den_);
    }
    if (auto q = divide_exact(den_, o.den_)) { return RationalFunction(num_ + o.num_ * *q, den_); }
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction &o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction &o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction &o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) { throw DivisionByZero("RationalFunction: inverse of zero"); }
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int32_t n) const {
    if (n < 0) { return inverse().pow(-n); }
    RationalFunction out(1);
    for (std::int32_t k = 0; k < n; ++k) { out = out * *this; }
    return out;
}

bool RationalFunction::is_equal(const RationalFunction &o) const {
    if (den_ == o.den_) { return num_ == o.num_; }
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::substitute(const Substitution &s) const {
    RationalFunction n = num_.substitute(s);
    RationalFunction d = den_.substitute(s);
    if (d.is_zero()) { throw DivisionByZero("substitute: denominator vanished"); }
    return n / d;
}

std::string RationalFunction::render() const {
    if (den_.is_one()) { return num_.render(); }
    return "(" + num_.render() + ")/(" + den_.render() + ")";
}

//-----------------------------------------------------------------------------
// Builders
//-----------------------------------------------------------------------------

RationalFunction rf_frac(long p, long q) {
    if (q == 0) { throw DivisionByZero("rf_frac: zero denominator"); }
    mpq_class v(p, q);
    v.canonicalize();
    return RationalFunction(GaussianRational(v));
}

Substitution make_subst(const std::vector<std::pair<std::string, RationalFunction>> &pairs) {
    Substitution s;
    for (const auto &[name, value] : pairs) { s[var_id(name)] = value; }
    return s;
}

} // namespace kernel
