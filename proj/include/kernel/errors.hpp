#ifndef KERNEL_ERRORS_HPP
#define KERNEL_ERRORS_HPP

/**
 * @file errors.hpp
 * @brief Exception taxonomy for the exact symbolic kernel.
 *
 * Every failure mode that callers are expected to handle has its own type so
 * tests can assert on the precise condition.  All of them derive from
 * KernelError, which carries a plain-text message.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kernel {

/// Base class for all kernel exceptions.
struct KernelError : std::runtime_error {
    explicit KernelError(const std::string &msg)
      : std::runtime_error(msg) {}
};

/// Division of field elements or rational functions by zero.
struct DivisionByZero : KernelError {
    explicit DivisionByZero(const std::string &msg = "division by zero")
      : KernelError(msg) {}
};

/// A substitution sent a variable to zero while it occurs with negative exponent.
struct SubstituteZeroIntoNegativePower : KernelError {
    explicit SubstituteZeroIntoNegativePower(const std::string &msg = "substituting zero into a negative power")
      : KernelError(msg) {}
};

/// The classical limit Q -> 1 hit a denominator that vanishes there.
struct PoleAtQ1 : KernelError {
    explicit PoleAtQ1(const std::string &msg = "pole at Q = 1")
      : KernelError(msg) {}
};

/// An algebra id outside the supported set was requested.
struct UnknownAlgebra : KernelError {
    explicit UnknownAlgebra(const std::string &msg = "unknown algebra id")
      : KernelError(msg) {}
};

/// A word references a generator with no binding in the current assignment.
struct UnboundGenerator : KernelError {
    explicit UnboundGenerator(const std::string &msg = "unbound generator")
      : KernelError(msg) {}
};

/// A generator inverse was requested but its defining quadratic has zero
/// constant term, so no inverse exists in the algebra.
struct NoInverseAvailable : KernelError {
    explicit NoInverseAvailable(const std::string &msg = "no inverse available")
      : KernelError(msg) {}
};

/// The word rewriting engine exceeded its rule-application budget.
struct BudgetExhausted : KernelError {
    explicit BudgetExhausted(const std::string &msg = "rewrite budget exhausted")
      : KernelError(msg) {}
};

/// A q-difference operator application left the Laurent-polynomial space.
struct NonPolynomialResult : KernelError {
    explicit NonPolynomialResult(const std::string &msg = "operator application left the Laurent space")
      : KernelError(msg) {}
};

/// A basic hypergeometric series hit a vanishing Pochhammer denominator.
struct ZeroDenominatorPochhammer : KernelError {
    explicit ZeroDenominatorPochhammer(const std::string &msg = "zero denominator in Pochhammer symbol")
      : KernelError(msg) {}
};

/// An operator-catalogue id outside the supported set was requested.
struct UnknownRepresentation : KernelError {
    explicit UnknownRepresentation(const std::string &msg = "unknown representation id")
      : KernelError(msg) {}
};

/// Expression parser: malformed input, with the byte offset of the problem.
struct SyntaxError : KernelError {
    std::size_t position;
    SyntaxError(const std::string &msg, std::size_t pos)
      : KernelError(msg + " at position " + std::to_string(pos))
      , position(pos) {}
};

/// Expression parser: identifier that names neither a generator nor a parameter.
struct UnknownSymbol : KernelError {
    explicit UnknownSymbol(const std::string &msg = "unknown symbol")
      : KernelError(msg) {}
};

} // namespace kernel

#endif // KERNEL_ERRORS_HPP
