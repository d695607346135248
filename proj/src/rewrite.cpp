/**
 * @file rewrite.cpp
 * @brief Normal-form rewrite engine and verification battery for D7 / D8.
 */

#include "kernel/rewrite.hpp"

#include "json.hpp"

namespace kernel {

namespace {

enum : std::uint8_t { sX = 0, sW = 1, sT0 = 2, sT1 = 3 };

const char *kSymNames[4] = {"X", "W", "T0", "T1"};

std::uint8_t code_of(const std::string &name) {
    for (std::uint8_t i = 0; i < 4; ++i) {
        if (name == kSymNames[i]) { return i; }
    }
    throw UnboundGenerator("unknown rewrite symbol: " + name);
}

using El = RewriteAlgebra::Element;

El operator+(const El &x, const El &y) {
    El out = x;
    for (const auto &[k, c] : y) {
        auto it = out.find(k);
        if (it == out.end()) {
            out.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) { out.erase(it); }
        }
    }
    return out;
}

El operator-(const El &x) {
    El out;
    for (const auto &[k, c] : x) { out.emplace(k, -c); }
    return out;
}

El operator-(const El &x, const El &y) { return x + (-y); }

} // namespace

//-----------------------------------------------------------------------------
// Engine
//-----------------------------------------------------------------------------

RewriteAlgebra::RewriteAlgebra(const std::string &variant, std::uint64_t budget, bool classical,
                               bool record_trace)
    : variant_(variant), budget_(budget), classical_(classical), record_trace_(record_trace) {
    if (variant == "D7") {
        a_ = rf_var("a");
    } else if (variant == "D8") {
        a_ = RationalFunction(0);
    } else {
        throw UnknownAlgebra("rewrite system only covers D7 and D8, got: " + variant);
    }
}

RationalFunction RewriteAlgebra::qpow(int half) const {
    return classical_ ? RationalFunction(1) : rf_Q(half);
}

El RewriteAlgebra::constant(const RationalFunction &c) const {
    El out;
    if (!c.is_zero()) { out.emplace(NFKey{}, c); }
    return out;
}

void RewriteAlgebra::reduce_word(RationalFunction coeff, Word word, Element &out) {
    std::vector<std::pair<RationalFunction, Word>> stack;
    stack.emplace_back(std::move(coeff), std::move(word));
    const RationalFunction q = qpow(2), qi = qpow(-2);
    while (!stack.empty()) {
        auto [c, w] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) { continue; }

        std::size_t pos = 0;
        const char *rule = nullptr;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const std::uint8_t u = w[i], v = w[i + 1];
            if (u == sX && v == sW) { rule = "XW"; }
            else if (u == sW && v == sX) { rule = "WX"; }
            else if (u == sT0 && v == sT0) { rule = "T0T0"; }
            else if (u == sT1 && v == sT1) { rule = "T1T1"; }
            else if (u == sT1 && v == sX) { rule = "T1X"; }
            else if (u == sT1 && v == sW) { rule = "T1W"; }
            else if (u == sT0 && v == sX) { rule = "T0X"; }
            else if (u == sT0 && v == sW) { rule = "T0W"; }
            if (rule) {
                pos = i;
                break;
            }
        }

        if (!rule) {
            // Canonical: leading X/W block, then an alternating tau word.
            int n = 0;
            std::size_t i = 0;
            while (i < w.size() && (w[i] == sX || w[i] == sW)) {
                n += (w[i] == sX) ? 1 : -1;
                ++i;
            }
            NFKey key{n, Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end())};
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(std::move(key), c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) { out.erase(it); }
            }
            continue;
        }

        ++steps_;
        if (steps_ > budget_) {
            throw BudgetExhausted("rewrite budget of " + std::to_string(budget_) +
                                  " rule applications exhausted");
        }
        if (record_trace_) { trace_.push_back({steps_, rule, pos}); }

        const Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word post(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        auto emit = [&](const RationalFunction &nc, std::initializer_list<std::uint8_t> mid) {
            Word nw = pre;
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), post.begin(), post.end());
            stack.emplace_back(nc, std::move(nw));
        };
        const std::string r = rule;
        if (r == "XW" || r == "WX") {
            emit(c, {});
        } else if (r == "T0T0") {
            // -> 0
        } else if (r == "T1T1") {
            emit(-c, {sT1});
        } else if (r == "T1X") {
            emit(c, {sW, sT1});
            emit(c, {sW});
            emit(-(c * a_), {});
        } else if (r == "T1W") {
            emit(c, {sX, sT1});
            emit(-c, {sW});
            emit(c * a_, {});
        } else if (r == "T0X") {
            emit(c * q, {sW, sT0});
            emit(c, {});
        } else { // T0W
            emit(c * qi, {sX, sT0});
            emit(-(c * qi), {});
        }
    }
}

El RewriteAlgebra::atom(const std::vector<std::string> &syms) {
    Word w;
    w.reserve(syms.size());
    for (const std::string &s : syms) { w.push_back(code_of(s)); }
    El out;
    reduce_word(RationalFunction(1), std::move(w), out);
    return out;
}

El RewriteAlgebra::named(const std::string &name) {
    if (name == "X" || name == "W" || name == "T0" || name == "T1") { return atom({name}); }
    if (name == "X1") { return add(atom({"X"}), atom({"W"})); }
    if (name == "X2") { return add(add(atom({"T1", "T0"}), atom({"T0", "T1"})), atom({"T0"})); }
    if (name == "X3") {
        const RationalFunction q = qpow(2);
        const El pref = scale(q / (q * q - 1), qc(named("X2"), named("X1")));
        const El lin = add(scale(qpow(1) - qpow(-1), atom({"T1"})), constant(qpow(1)));
        return sub(pref, scale(RationalFunction(1) / (q + 1), lin));
    }
    if (name == "e") { return add(one(), atom({"T1"})); }
    throw UnboundGenerator("unknown rewrite element: " + name);
}

El RewriteAlgebra::add(const Element &x, const Element &y) const { return x + y; }
El RewriteAlgebra::sub(const Element &x, const Element &y) const { return x - y; }

El RewriteAlgebra::scale(const RationalFunction &c, const Element &x) const {
    El out;
    if (c.is_zero()) { return out; }
    for (const auto &[k, v] : x) { out.emplace(k, c * v); }
    return out;
}

El RewriteAlgebra::mul(const Element &x, const Element &y) {
    El out;
    for (const auto &[k1, c1] : x) {
        Word w1;
        if (k1.n >= 0) { w1.assign(static_cast<std::size_t>(k1.n), sX); }
        else { w1.assign(static_cast<std::size_t>(-k1.n), sW); }
        w1.insert(w1.end(), k1.tau.begin(), k1.tau.end());
        for (const auto &[k2, c2] : y) {
            Word w = w1;
            if (k2.n >= 0) { w.insert(w.end(), static_cast<std::size_t>(k2.n), sX); }
            else { w.insert(w.end(), static_cast<std::size_t>(-k2.n), sW); }
            w.insert(w.end(), k2.tau.begin(), k2.tau.end());
            reduce_word(c1 * c2, std::move(w), out);
        }
    }
    return out;
}

El RewriteAlgebra::qc(const Element &x, const Element &y) {
    return sub(scale(qpow(1), mul(x, y)), scale(qpow(-1), mul(y, x)));
}

El RewriteAlgebra::comm(const Element &x, const Element &y) { return sub(mul(x, y), mul(y, x)); }

std::string RewriteAlgebra::render(const Element &x) const {
    if (x.empty()) { return "0"; }
    std::string out;
    for (const auto &[k, c] : x) {
        if (!out.empty()) { out += " + "; }
        std::string sym;
        if (k.n > 0) { sym = "X^" + std::to_string(k.n); }
        else if (k.n < 0) { sym = "W^" + std::to_string(-k.n); }
        for (std::uint8_t t : k.tau) {
            if (!sym.empty()) { sym += "."; }
            sym += kSymNames[t];
        }
        if (sym.empty()) {
            out += c.render();
        } else {
            out += "(" + c.render() + ")*" + sym;
        }
    }
    return out;
}

std::string RewriteAlgebra::trace_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RewriteStep &s : trace_) {
        nlohmann::ordered_json j;
        j["step"] = s.step;
        j["rule"] = s.rule;
        j["position"] = s.position;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

//-----------------------------------------------------------------------------
// Abstract-expression evaluation
//-----------------------------------------------------------------------------

El eval_rewrite(const NCExpression &expr, RewriteAlgebra &alg) {
    El total;
    for (const NCTerm &t : expr.terms()) {
        El prod = alg.constant(t.coeff);
        for (const WordFactor &f : t.word) {
            std::string sym = f.symbol;
            int exp = f.exp;
            if (exp < 0) {
                if (sym == "X") { sym = "W"; exp = -exp; }
                else if (sym == "W") { sym = "X"; exp = -exp; }
                else {
                    throw NoInverseAvailable("no inverse for " + sym + " in " + alg.variant());
                }
            }
            const El base = alg.named(sym);
            for (int i = 0; i < exp; ++i) { prod = alg.mul(prod, base); }
        }
        total = total + prod;
    }
    return total;
}

//-----------------------------------------------------------------------------
// Verification battery
//-----------------------------------------------------------------------------

RewriteReport check_rewrite(const std::string &variant, std::uint64_t budget) {
    RewriteReport report;
    RewriteAlgebra R(variant, budget);

    auto chk = [&](const std::string &id, const std::string &anchor, const El &residual) {
        CheckOutcome o;
        o.id = id;
        o.anchor = anchor;
        o.pass = RewriteAlgebra::is_zero(residual);
        if (!o.pass) { o.residual = R.render(residual); }
        report.outcomes.push_back(std::move(o));
    };
    auto nonzero = [&](const std::string &id, const std::string &anchor, const El &residual) {
        CheckOutcome o;
        o.id = id;
        o.anchor = anchor;
        o.pass = !RewriteAlgebra::is_zero(residual);
        if (!o.pass) { o.residual = "unexpectedly zero"; }
        report.outcomes.push_back(std::move(o));
    };
    auto P = [&](const El &x, const El &y) { return R.mul(x, y); };
    auto P3 = [&](const El &x, const El &y, const El &z) { return R.mul(R.mul(x, y), z); };
    auto S = [&](const RationalFunction &c, const El &x) { return R.scale(c, x); };
    auto A = [&](std::initializer_list<const char *> syms) {
        return R.atom(std::vector<std::string>(syms.begin(), syms.end()));
    };
    auto C = [&](const RationalFunction &c) { return R.constant(c); };

    const RationalFunction q = R.qpow(2), qi = R.qpow(-2);
    const RationalFunction sq = R.qpow(1), sqi = R.qpow(-1);
    const RationalFunction a = R.a();
    const RationalFunction one_rf(1), two_rf(2);

    const El X = R.named("X"), W = R.named("W"), T0 = R.named("T0"), T1 = R.named("T1");
    const El X1 = R.named("X1"), X2 = R.named("X2"), X3 = R.named("X3"), e = R.named("e");
    const El one = R.one();

    // ---- defining relations -------------------------------------------------
    chk("rel1-XW", "XW = 1", P(X, W) - one);
    chk("rel1-WX", "WX = 1", P(W, X) - one);
    chk("rel2-T1", "T1(T1 + 1) = 0", P(T1, T1 + one));
    chk("rel3-T0", "T0^2 = 0", P(T0, T0));
    chk("rel4", "T1X + a - W(T1 + 1) = 0", P(T1, X) + C(a) - P(W, T1 + one));
    chk("rel5", "qT0W + 1 - XT0 = 0", S(q, P(T0, W)) + one - P(X, T0));

    // ---- sandwich rules -----------------------------------------------------
    chk("sandwich-T1XT1", "T1 X T1 = -a T1", P3(T1, X, T1) + S(a, T1));
    chk("sandwich-T1W", "(T1+1) W (T1+1) = a (T1+1)",
        P3(T1 + one, W, T1 + one) - S(a, T1 + one));
    chk("sandwich-T0WT0", "T0 W T0 = -(1/q) T0", P3(T0, W, T0) + S(qi, T0));
    chk("sandwich-T0XT0", "T0 X T0 = T0", P3(T0, X, T0) - T0);

    // ---- symmetriser facts --------------------------------------------------
    chk("e-idempotent", "e^2 = e", P(e, e) - e);
    chk("e-T1", "e T1 = 0", P(e, T1));
    chk("e-comm-X1", "[e, X1] = 0", R.comm(e, X1));
    chk("e-comm-X2", "[e, X2] = 0", R.comm(e, X2));
    chk("e-comm-X3", "[e, X3] = 0", R.comm(e, X3));
    chk("e-W-e", "e W e = a e", P3(e, W, e) - S(a, e));
    chk("e-X-e", "e X e = e X1 e - a e", P3(e, X, e) - P3(e, X1, e) + S(a, e));
    chk("e-T0-e", "e T0 e = e X2 e", P3(e, T0, e) - P3(e, X2, e));

    // ---- five expansion identities -----------------------------------------
    const El A01 = A({"T0", "T1"}), A10 = A({"T1", "T0"});
    const El A010 = A({"T0", "T1", "T0"}), A101 = A({"T1", "T0", "T1"});
    const El A0101 = A({"T0", "T1", "T0", "T1"}), A1010 = A({"T1", "T0", "T1", "T0"});
    const El X2s = P(X, X), W2s = P(W, W);

    {
        const El lhs = P3(X2, X1, X2);
        const El rhs = S(one_rf - qi,
                         T0 + A01 + A10 + S(a * (q + 1), A010) + S(two_rf, A101)) +
                       S(qi, P(X1, A010)) + P(S(qi, X) + S(q, W), A0101) +
                       P(S(qi, W) + S(q, X), A1010);
        chk("expand-X2X1X2", "normal form of X2X1X2", lhs - rhs);
    }
    {
        const El lhs = P3(X1, X2, X2);
        const El rhs = P(X1, A010 + A0101 + A1010);
        chk("expand-X1X2X2", "normal form of X1X2^2", lhs - rhs);
    }
    {
        const El lhs = P3(X2, X2, X1);
        const El rhs = S(one_rf - qi * qi, T0 + A01 + A10 + S(q + 1, A101)) +
                       P(C(a * (q * q - qi * qi)) + S(qi * qi, X1), A010) +
                       P(S(qi * qi, X) + S(q * q, W), A0101) +
                       P(S(qi * qi, W) + S(q * q, X), A1010);
        chk("expand-X2X2X1", "normal form of X2^2X1", lhs - rhs);
    }
    El rhs_X2X1X1;
    {
        const El lhs = P3(X2, X1, X1);
        rhs_X2X1X1 = S((q * q - 1) * qi * qi,
                       C((q - 1) * a) + P(X1, S(q + 1, T1) + S(a * (q * q + 1), T0) + one)) +
                     S(two_rf, A01 + A10) + S(qi * qi, P(X2s + W2s, T0)) +
                     P(S(qi * qi, X2s) + S(q * q, W2s), A01) +
                     P(S(q * q, X2s) + S(qi * qi, W2s), A10) - S(q * q - qi * qi - 2, T0);
        chk("expand-X2X1X1", "normal form of X2X1^2, closing with -(q^2 - 1/q^2 - 2)T0",
            lhs - rhs_X2X1X1);
        nonzero("printed-expand-X2X1X1-differs",
                "the +(q^2 - 1/q^2 - 2)T0 variant leaves a residual",
                lhs - (rhs_X2X1X1 + S((q * q - qi * qi - 2) * 2, T0)));
    }
    {
        const El lhs = P3(X1, X1, X2);
        const El rhs = P(X2s + W2s, T0 + A01 + A10) + S(two_rf, A01) + S(two_rf, A10) +
                       S(two_rf, T0);
        chk("expand-X1X1X2", "normal form of X1^2X2", lhs - rhs);
    }

    // ---- proof intermediates ------------------------------------------------
    {
        const El lhs = S(q + qi, P3(X2, X1, X2)) - P3(X1, X2, X2) - P3(X2, X2, X1) -
                       S((q - 1) * qi, P(S(q - 1, T1) + C(q), X2)) +
                       S((q - 1) * qi, P(X2, T1 - S(qi, T1) + one));
        chk("intermediate-r2", "combined expansion identity on the second skein route (no trailing X2)",
            lhs);
        nonzero("printed-intermediate-r2-differs",
                "the trailing X2 factor variant leaves a residual",
                lhs + S((q - 1) * qi, P(P(X2, T1 - S(qi, T1) + one), X2 - one)));
    }
    {
        const El lhs = S((q * q + 1) / (q * q - 1), P3(X1, X2, X1)) -
                       S(q / (q * q - 1), P3(X1, X1, X2)) - S(q / (q * q - 1), P3(X2, X1, X1)) -
                       S(one_rf / (q + 1), P(X1, S(q - 1, T1) + C(q))) +
                       S(one_rf / (q + 1), P(S(one_rf - qi, T1) + one, X1)) - S(q - qi, X2) +
                       C((q - 1) * qi * a);
        chk("intermediate-r3", "combined expansion identity on the third skein route", lhs);
    }

    // ---- skeins and quantum cubic ------------------------------------------
    chk("skein-r2", "q^(1/2)X3X2 - q^(-1/2)X2X3 = 0", R.qc(X3, X2));
    chk("skein-r3", "q^(1/2)X1X3 - q^(-1/2)X3X1 = (q - 1/q)X2 - ((q-1)/q)a",
        R.qc(X1, X3) - S(q - qi, X2) + C((q - 1) * qi * a));
    chk("cubic",
        "q^(1/2)X2X1X3 - qX2^2 - qX3^2 + aX2 + (q^(-1/2)T1 - q^(1/2)(T1+1))X3 = 0",
        S(sq, P3(X2, X1, X3)) - S(q, P(X2, X2)) - S(q, P(X3, X3)) + S(a, X2) +
            P(S(sqi, T1) - S(sq, T1 + one), X3));

    // ---- hatted relations ----------------------------------------------------
    const El h1 = P3(e, X1, e), h2 = P3(e, X2, e), h3 = P3(e, X3, e);
    {
        const El r = R.qc(h2, h1) - S(q - qi, h3) - S(sq - sqi, e);
        chk("hatted-r1", "projected skein 1, e-term with + sign", r);
        nonzero("printed-hatted-r1-differs", "the - sign variant leaves a residual",
                R.qc(h2, h1) - S(q - qi, h3) + S(sq - sqi, e));
    }
    chk("hatted-r2", "projected skein 2 vanishes", R.qc(h3, h2));
    chk("hatted-r3", "projected skein 3 with -(q^(1/2)-q^(-1/2))(a/q^(1/2)) e",
        R.qc(h1, h3) - S(q - qi, h2) + S((sq - sqi) * a * sqi, e));
    {
        const El hcub = S(sq, P3(h2, h1, h3)) - S(q, P(h2, h2)) - S(q, P(h3, h3)) + S(a, h2) -
                        S(sq, h3);
        chk("hatted-cubic", "projected cubic, closing with -q^(1/2) h3", hcub);
        nonzero("printed-hatted-cubic-differs", "the -q^(-1/2) h3 variant leaves a residual",
                S(sq, P3(h2, h1, h3)) - S(q, P(h2, h2)) - S(q, P(h3, h3)) + S(a, h2) -
                    S(sqi, h3));
    }

    // ---- Zhedanov generators -------------------------------------------------
    const RationalFunction B = (q - 1) * (q - 1) * qi;
    const RationalFunction C0 = (q - qi) * (q - qi);
    const RationalFunction D0 = -((q + 1) * (q - 1) * (q - 1) * qi * qi) * a;
    const RationalFunction D1(0);
    const El K0 = h2, K1 = h1;
    const El K2 = R.qc(K0, K1);
    chk("zhe-K2", "K2 = (q-1/q)h3 + (q^(1/2)-q^(-1/2)) (q/(q-1)^2) B e",
        K2 - S(q - qi, h3) - S((sq - sqi) * q / ((q - 1) * (q - 1)) * B, e));
    chk("zhe2", "q^(1/2)K1K2 - q^(-1/2)K2K1 = B K1 + C0 K0 + D0 e",
        R.qc(K1, K2) - S(B, K1) - S(C0, K0) - S(D0, e));
    chk("zhe3", "q^(1/2)K2K0 - q^(-1/2)K0K2 = B K0 + D1 e",
        R.qc(K2, K0) - S(B, K0) - S(D1, e));
    chk("two-gen-1", "(q + 1/q)K1K0K1 - K1^2K0 - K0K1^2 = B K1 + C0 K0 + D0 e",
        S(q + qi, P3(K1, K0, K1)) - P3(K1, K1, K0) - P3(K0, K1, K1) - S(B, K1) - S(C0, K0) -
            S(D0, e));
    chk("two-gen-2", "(q + 1/q)K0K1K0 - K0^2K1 - K1K0^2 = B K0 + D1 e",
        S(q + qi, P3(K0, K1, K0)) - P3(K0, K0, K1) - P3(K1, K0, K0) - S(B, K0) - S(D1, e));
    {
        const El K1K0 = P(K1, K0);
        const El Qcas = P(K1K0, K1K0) - S(q * q + 1 + qi * qi, P(P3(K0, K1, K0), K1)) +
                        S((q + qi) * (q - qi) * (q - qi), P(K0, K0)) +
                        S(q + qi, P(P(K0, K0), P(K1, K1))) +
                        S(B, S(q + 1 + qi, P(K0, K1)) + K1K0) +
                        S(q + 1 + qi, S(D0, K0) + S(D1, K1));
        chk("casimir-K0", "[Casimir, K0] = 0", R.comm(Qcas, K0));
        chk("casimir-K1", "[Casimir, K1] = 0", R.comm(Qcas, K1));
    }

    // ---- classical q = 1 ------------------------------------------------------
    {
        RewriteAlgebra Rc(variant, budget, /*classical=*/true);
        const El Xc = Rc.named("X"), T0c = Rc.named("T0"), T1c = Rc.named("T1");
        const El X1c = Rc.named("X1"), X2c = Rc.named("X2");
        for (const auto &[nm, g] :
             {std::pair<const char *, const El &>{"X", Xc}, {"T0", T0c}, {"T1", T1c}}) {
            CheckOutcome o1;
            o1.id = std::string("classical-comm-X1-") + nm;
            o1.anchor = std::string("[X1, ") + nm + "] = 0 at q = 1";
            El r = Rc.comm(X1c, g);
            o1.pass = RewriteAlgebra::is_zero(r);
            if (!o1.pass) { o1.residual = Rc.render(r); }
            report.outcomes.push_back(std::move(o1));
            CheckOutcome o2;
            o2.id = std::string("classical-comm-X2-") + nm;
            o2.anchor = std::string("[X2, ") + nm + "] = 0 at q = 1";
            r = Rc.comm(X2c, g);
            o2.pass = RewriteAlgebra::is_zero(r);
            if (!o2.pass) { o2.residual = Rc.render(r); }
            report.outcomes.push_back(std::move(o2));
        }
        report.steps = R.steps() + Rc.steps();
    }
    return report;
}

} // namespace kernel
