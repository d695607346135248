#ifndef KERNEL_FIELD_HPP
#define KERNEL_FIELD_HPP

/**
 * @file field.hpp
 * @brief Exact coefficient arithmetic: Gaussian rationals, Laurent monomials
 *        in named parameters, polynomials, and rational functions.
 *
 * The ground field is Q(i).  On top of it sit Laurent polynomials in an
 * extensible set of commuting parameters (Q, k0, k1, u0, u1, a, b, c, d,
 * lam, x, ...), and formal quotients of those.  Everything is exact: no
 * floating point, no numeric tolerance anywhere.
 *
 * Conventions:
 *  - The deformation parameter is Q with q = Q^2, so "q^(1/2)" is Q and
 *    fractional powers of q never appear explicitly.
 *  - Monomials live on the full integer lattice (negative exponents are
 *    ordinary group elements, not an error).
 *  - RationalFunction is a possibly-unreduced quotient num/den with den != 0.
 *    Canonical choices: den carries no monomial content, den's leading
 *    coefficient (in the global lex order) is 1, and whenever den divides
 *    num exactly the quotient is collapsed so den becomes 1.  Equality is
 *    decided by cross-multiplication and therefore does not depend on the
 *    representative.
 *
 * All value types here are immutable in practice (operations return new
 * values) and safe to share across threads once constructed.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kernel/errors.hpp"

namespace kernel {

//-----------------------------------------------------------------------------
// Variable registry
//-----------------------------------------------------------------------------

/// Index of a parameter in the global registry.  The registry defines the
/// variable order used by the monomial order; it is pre-seeded with the
/// kernel's standard parameters and can be extended at runtime (interning).
using VarId = std::uint16_t;

/// Intern @p name, returning its registry index (existing or fresh).
VarId var_id(const std::string &name);

/// Name of a registered variable.
const std::string &var_name(VarId id);

/// Number of variables currently registered.
std::size_t registry_size();

//-----------------------------------------------------------------------------
// GaussianRational: elements of Q(i)
//-----------------------------------------------------------------------------

/// An exact complex rational a + b*i with arbitrary-precision parts.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational()
      : re(0)
      , im(0) {}
    GaussianRational(long r)
      : re(r)
      , im(0) {}
    GaussianRational(const mpq_class &r)
      : re(r)
      , im(0) {}
    GaussianRational(mpq_class r, mpq_class i)
      : re(std::move(r))
      , im(std::move(i)) {}

    /// The imaginary unit.
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }
    GaussianRational operator+(const GaussianRational &o) const { return GaussianRational(re + o.re, im + o.im); }
    GaussianRational operator-(const GaussianRational &o) const { return GaussianRational(re - o.re, im - o.im); }
    GaussianRational operator*(const GaussianRational &o) const {
        return GaussianRational(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    /// Exact division; throws DivisionByZero when @p o vanishes.
    GaussianRational operator/(const GaussianRational &o) const {
        if (o.is_zero()) { throw DivisionByZero("GaussianRational: division by zero"); }
        mpq_class n2 = o.re * o.re + o.im * o.im;
        return GaussianRational((re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2);
    }
    GaussianRational conj() const { return GaussianRational(re, -im); }

    bool operator==(const GaussianRational &o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational &o) const { return !(*this == o); }

    /// Deterministic rendering: "0", "2", "-1/3", "i", "-i", "2*i", "1-2*i".
    std::string render() const;
};

//-----------------------------------------------------------------------------
// ParamMonomial: a point of the exponent lattice Z^(registry)
//-----------------------------------------------------------------------------

/// A Laurent monomial in the registered parameters, stored as a sorted
/// sparse list of (variable, nonzero exponent) pairs.  Total ordering is
/// lexicographic in registry order: at the first variable where two
/// monomials differ, the larger exponent wins.
class ParamMonomial {
  public:
    ParamMonomial() = default;

    /// Monomial var^exp (identity when exp == 0).
    static ParamMonomial variable(VarId v, std::int32_t exp = 1);

    bool is_unit() const { return exps_.empty(); }
    const std::vector<std::pair<VarId, std::int32_t>> &exps() const { return exps_; }

    /// Exponent of @p v (0 when absent).
    std::int32_t exponent_of(VarId v) const;

    /// Copy with the exponent of @p v replaced by @p exp (erased when 0).
    ParamMonomial with_exponent(VarId v, std::int32_t exp) const;

    ParamMonomial operator*(const ParamMonomial &o) const;
    ParamMonomial operator/(const ParamMonomial &o) const;
    ParamMonomial pow(std::int32_t n) const;
    ParamMonomial inverse() const { return pow(-1); }

    /// Three-way lexicographic comparison (-1, 0, +1).
    int compare(const ParamMonomial &o) const;
    bool operator<(const ParamMonomial &o) const { return compare(o) < 0; }
    bool operator==(const ParamMonomial &o) const { return exps_ == o.exps_; }
    bool operator!=(const ParamMonomial &o) const { return !(*this == o); }

    /// "k0^2*u1^-1" (factors joined by '*'; empty string for the unit).
    std::string render() const;

  private:
    std::vector<std::pair<VarId, std::int32_t>> exps_;
};

//-----------------------------------------------------------------------------
// Poly: Laurent polynomials with GaussianRational coefficients
//-----------------------------------------------------------------------------

class RationalFunction; // forward

/// Substitution target: each listed variable is sent simultaneously to a
/// rational function in the remaining (or new) variables.
using Substitution = std::map<VarId, RationalFunction>;

/// A Laurent polynomial: finitely many monomials with nonzero coefficients,
/// kept in a map ordered by the monomial order (deterministic iteration;
/// the leading term is the last entry).
class Poly {
  public:
    Poly() = default;
    Poly(long c) { add_term(ParamMonomial(), GaussianRational(c)); }
    Poly(const GaussianRational &c) { add_term(ParamMonomial(), c); }
    explicit Poly(const ParamMonomial &m, const GaussianRational &c = GaussianRational(1)) { add_term(m, c); }

    /// The polynomial consisting of the single monomial var^exp.
    static Poly variable(VarId v, std::int32_t exp = 1);
    static Poly variable(const std::string &name, std::int32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    /// True iff the polynomial is the constant 1.
    bool is_one() const;
    /// True iff the polynomial is a constant (including 0).
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ParamMonomial, GaussianRational> &terms() const { return terms_; }

    /// Leading (largest) monomial and coefficient; polynomial must be nonzero.
    const ParamMonomial &leading_monomial() const { return terms_.rbegin()->first; }
    const GaussianRational &leading_coefficient() const { return terms_.rbegin()->second; }

    /// Adds c * m into this polynomial, erasing the entry when it cancels.
    void add_term(const ParamMonomial &m, const GaussianRational &c);

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly operator*(const GaussianRational &c) const;
    Poly operator*(const ParamMonomial &m) const;
    Poly pow(std::uint32_t n) const;

    bool operator==(const Poly &o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly &o) const { return !(*this == o); }

    /// Componentwise minimum exponent over all monomials ("monomial content");
    /// polynomial must be nonzero.  Dividing by it makes every exponent >= 0
    /// with per-variable minimum 0.
    ParamMonomial content() const;

    /// Simultaneous substitution.  Substituting 0 into a negative power
    /// throws SubstituteZeroIntoNegativePower.
    RationalFunction substitute(const Substitution &s) const;

    /// Deterministic rendering, terms in descending monomial order:
    /// "Q^2*k0 - 2*u1 + 1"; "0" when zero.
    std::string render() const;

  private:
    std::map<ParamMonomial, GaussianRational> terms_;
};

/// Exact multivariate division: returns a/b when b divides a exactly in the
/// Laurent polynomial ring, std::nullopt otherwise.  b must be nonzero.
std::optional<Poly> divide_exact(const Poly &a, const Poly &b);

//-----------------------------------------------------------------------------
// RationalFunction: quotients num/den
//-----------------------------------------------------------------------------

/// A possibly-unreduced quotient of Laurent polynomials with den != 0.
/// See the file header for the canonicalization applied on construction.
class RationalFunction {
  public:
    RationalFunction()
      : num_()
      , den_(1) {}
    RationalFunction(long c)
      : num_(c)
      , den_(1) {}
    RationalFunction(const GaussianRational &c)
      : num_(c)
      , den_(1) {}
    RationalFunction(const Poly &p)
      : num_(p)
      , den_(1) {}
    /// Quotient constructor; canonicalizes, throws DivisionByZero when den == 0.
    RationalFunction(Poly num, Poly den);

    /// The rational function consisting of the single variable @p name.
    static RationalFunction variable(const std::string &name, std::int32_t exp = 1);

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    /// True when the denominator is (the constant) 1.
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction &o) const;
    RationalFunction operator-(const RationalFunction &o) const;
    RationalFunction operator*(const RationalFunction &o) const;
    RationalFunction operator/(const RationalFunction &o) const;
    RationalFunction inverse() const;
    RationalFunction pow(std::int32_t n) const;

    /// Exact equality of the represented functions (cross-multiplication).
    bool is_equal(const RationalFunction &o) const;
    bool operator==(const RationalFunction &o) const { return is_equal(o); }
    bool operator!=(const RationalFunction &o) const { return !is_equal(o); }

    /// Simultaneous substitution; throws SubstituteZeroIntoNegativePower or
    /// DivisionByZero (vanishing substituted denominator) as appropriate.
    RationalFunction substitute(const Substitution &s) const;

    /// "num" when den == 1, "(num)/(den)" otherwise.
    std::string render() const;

  private:
    Poly num_;
    Poly den_;
};

//-----------------------------------------------------------------------------
// Convenience builders
//-----------------------------------------------------------------------------

/// Rational-function variable by name (exponent defaults to 1).
inline RationalFunction rf_var(const std::string &name, std::int32_t exp = 1) {
    return RationalFunction::variable(name, exp);
}
/// Integer constant as a rational function.
inline RationalFunction rf_int(long c) { return RationalFunction(c); }
/// Exact rational constant p/q.
RationalFunction rf_frac(long p, long q);
/// The imaginary unit as a rational function.
inline RationalFunction rf_i() { return RationalFunction(GaussianRational::i()); }
/// Q^n (so q^(n/2) in terms of q = Q^2).
inline RationalFunction rf_Q(std::int32_t n = 1) { return RationalFunction::variable("Q", n); }
/// Multiplicative inverse.
inline RationalFunction inv(const RationalFunction &r) { return r.inverse(); }
/// x - 1/x, the recurring "bar" combination.
inline RationalFunction bar(const RationalFunction &r) { return r - r.inverse(); }

/// Build a Substitution from (name, value) pairs.
Substitution make_subst(const std::vector<std::pair<std::string, RationalFunction>> &pairs);

} // namespace kernel

#endif // KERNEL_FIELD_HPP
