#ifndef KERNEL_QTORUS_HPP
#define KERNEL_QTORUS_HPP

/**
 * @file qtorus.hpp
 * @brief The rank-3 quantum torus: exponential generators e^{S1}, e^{S2},
 *        e^{S3} whose products pick up powers of Q through a symplectic form.
 *
 * An element is a finite sum  sum_m  c_m * e^{m1 S1 + m2 S2 + m3 S3}  with
 * m in Z^3 and c_m a RationalFunction in the registered parameters.  The
 * product rule is
 *
 *     e^{m} * e^{n} = Q^{-omega(m,n)} e^{m+n},
 *
 * where omega is the alternating form
 *     omega(m,n) = (m1 n2 - m2 n1) + (m2 n3 - m3 n2) + (m3 n1 - m1 n3).
 *
 * An element is central iff omega(m, e_i) = 0 for every exponent m in its
 * support and every basis vector e_i.  The classical limit sends Q -> 1 in
 * every coefficient (a ring homomorphism); hitting a coefficient pole there
 * raises PoleAtQ1.
 */

#include <array>
#include <map>
#include <string>

#include "kernel/field.hpp"

namespace kernel {

/// Exponent vector of a torus monomial.
using TorusExp = std::array<int, 3>;

/// The symplectic pairing omega(m, n) defined in the file header.
int torus_omega(const TorusExp &m, const TorusExp &n);

/// An element of the quantum torus (see file header).
class TorusElement {
  public:
    TorusElement() = default;
    TorusElement(long c) { add_term({0, 0, 0}, RationalFunction(c)); }
    TorusElement(const RationalFunction &c) { add_term({0, 0, 0}, c); }

    /// The single term  c * e^{m1 S1 + m2 S2 + m3 S3}.
    static TorusElement e(int m1, int m2, int m3, const RationalFunction &c = RationalFunction(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<TorusExp, RationalFunction> &terms() const { return terms_; }

    /// Adds c * e^m into this element, dropping cancelled entries.
    void add_term(const TorusExp &m, const RationalFunction &c);

    TorusElement operator-() const;
    TorusElement operator+(const TorusElement &o) const;
    TorusElement operator-(const TorusElement &o) const;
    /// Noncommutative product with the Q^{-omega} phase.
    TorusElement operator*(const TorusElement &o) const;
    /// Scalar multiple (scalars are central).
    TorusElement scale(const RationalFunction &c) const;

    /// Inverse of a single-term element; throws NoInverseAvailable otherwise.
    TorusElement inverse() const;

    bool operator==(const TorusElement &o) const { return (*this - o).is_zero(); }
    bool operator!=(const TorusElement &o) const { return !(*this == o); }

    /// True iff the element commutes with every torus generator.
    bool is_central() const;

    /// Commutator [this, o] = this*o - o*this.
    TorusElement commutator(const TorusElement &o) const;

    /// Coefficientwise Q -> 1; throws PoleAtQ1 on a vanishing denominator.
    TorusElement classical_limit() const;

    /// Substitute parameter values in every coefficient.
    TorusElement substitute(const Substitution &s) const;

    /// Central specialisation e^{S1+S2+S3} = -i:  each exponent (m1,m2,m3)
    /// maps to (m1-m3, m2-m3, 0) with coefficient multiplied by (-i)^{m3}.
    /// Exact because omega(m, (1,1,1)) = 0 for all m.
    TorusElement reduce_central() const;

    /// Deterministic rendering "Q^2·e^{S1 - S3} + (k0)·e^{2 S2}", terms in
    /// lexicographic exponent order; "0" when zero.
    std::string render() const;

  private:
    std::map<TorusExp, RationalFunction> terms_;
};

} // namespace kernel

#endif // KERNEL_QTORUS_HPP
