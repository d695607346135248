#pragma once

/**
 * @file rewrite.hpp
 * @brief Confluent rewrite system for the two nilpotent degenerations D7, D8.
 *
 * Elements are finite sums of normal-form monomials X^n * tau where n runs
 * over the integers (negative n stands for W^{|n|}) and tau is an alternating
 * word in {T0, T1}.  Products are reduced to normal form by the leftmost
 * applicable rule:
 *
 *   XW -> 1          WX -> 1
 *   T0 T0 -> 0       T1 T1 -> -T1
 *   T1 X -> W T1 + W - a        T1 W -> X T1 - W + a
 *   T0 X -> q W T0 + 1          T0 W -> (1/q) X T0 - 1/q
 *
 * D7 keeps a as a free symbolic parameter; D8 sets a = 0.  Every rule
 * application consumes one unit of budget; exceeding it throws
 * BudgetExhausted.  An optional trace records (step, rule, position).
 */

#include "kernel/field.hpp"
#include "kernel/outcome.hpp"
#include "kernel/qmat.hpp"

#include <cstdint>
#include <map>

namespace kernel {

/// Normal-form monomial key.  Ordering sorts by X-power, then tau length,
/// then tau content, giving a deterministic rendering order.
struct NFKey {
    int n = 0;                     ///< X-power; negative means W^{|n|}
    std::vector<std::uint8_t> tau; ///< alternating word, 0 = T0 / 1 = T1

    bool operator==(const NFKey &o) const { return n == o.n && tau == o.tau; }
    bool operator<(const NFKey &o) const {
        if (n != o.n) { return n < o.n; }
        if (tau.size() != o.tau.size()) { return tau.size() < o.tau.size(); }
        return tau < o.tau;
    }
};

/// One recorded rewrite step.
struct RewriteStep {
    std::uint64_t step = 0;   ///< 1-based counter
    std::string rule;         ///< rule id, e.g. "T1X"
    std::size_t position = 0; ///< index of the left symbol of the redex
};

class RewriteAlgebra {
  public:
    using Element = std::map<NFKey, RationalFunction>;

    static constexpr std::uint64_t kDefaultBudget = 100000;

    /// variant: "D7" (symbolic parameter a) or "D8" (a = 0).
    /// classical: evaluate at q = 1 (for the commutative-limit checks).
    explicit RewriteAlgebra(const std::string &variant,
                            std::uint64_t budget = kDefaultBudget, bool classical = false,
                            bool record_trace = false);

    const std::string &variant() const { return variant_; }
    const RationalFunction &a() const { return a_; }
    /// Q^half (so qpow(2) is q); the constant 1 in classical mode.
    RationalFunction qpow(int half) const;

    Element zero() const { return {}; }
    Element one() const { return constant(RationalFunction(1)); }
    Element constant(const RationalFunction &c) const;
    /// Reduce a free word given by symbol names ("X", "W", "T0", "T1").
    Element atom(const std::vector<std::string> &syms);
    /// Named catalogue element: X, W, T0, T1, X1, X2, X3, e.
    Element named(const std::string &name);

    Element add(const Element &x, const Element &y) const;
    Element sub(const Element &x, const Element &y) const;
    Element scale(const RationalFunction &c, const Element &x) const;
    Element mul(const Element &x, const Element &y);
    /// q^{1/2} x y - q^{-1/2} y x.
    Element qc(const Element &x, const Element &y);
    Element comm(const Element &x, const Element &y);

    static bool is_zero(const Element &x) { return x.empty(); }
    std::string render(const Element &x) const;

    std::uint64_t steps() const { return steps_; }
    std::uint64_t budget() const { return budget_; }
    /// JSON array of the recorded steps (empty array unless record_trace).
    std::string trace_json() const;

  private:
    using Word = std::vector<std::uint8_t>; // 0=X 1=W 2=T0 3=T1
    void reduce_word(RationalFunction coeff, Word word, Element &out);

    std::string variant_;
    RationalFunction a_;
    std::uint64_t budget_ = kDefaultBudget;
    std::uint64_t steps_ = 0;
    bool classical_ = false;
    bool record_trace_ = false;
    std::vector<RewriteStep> trace_;
};

/// Map an abstract word expression into the rewrite algebra.  Symbols X, W,
/// T0, T1 and the composites X1, X2, X3, e are bound; X and W may carry
/// negative powers (X^{-1} = W).  Anything else throws UnboundGenerator;
/// negative powers of non-invertible symbols throw NoInverseAvailable.
RewriteAlgebra::Element eval_rewrite(const NCExpression &expr, RewriteAlgebra &alg);

/// Outcomes plus the budget actually consumed.
struct RewriteReport {
    std::vector<CheckOutcome> outcomes;
    std::uint64_t steps = 0;
};

/// Full battery for one variant: defining relations, sandwich rules,
/// symmetriser facts, the five expansion identities with their proof
/// intermediates, skein relations, quantum cubic, hatted relations, the
/// Zhedanov generators with their Casimir, the classical q = 1
/// commutativity facts, and the recorded printed-variant discrepancies.
RewriteReport check_rewrite(const std::string &variant,
                            std::uint64_t budget = RewriteAlgebra::kDefaultBudget);

} // namespace kernel
