#pragma once
/// @file zhedanov.hpp
/// @brief Scalar structure-constant tables for the Askey-Wilson algebra and
///        its confluent degenerations, together with the parameter
///        dictionaries that relate the two published coordinate systems.
///
/// The algebras in question are generated by K0, K1 subject to
///
///     q^{1/2} K0 K1 - q^{-1/2} K1 K0               = K2,
///     q^{1/2} K1 K2 - q^{-1/2} K2 K1               = B K1 + C0 K0 + D0,
///     q^{1/2} K2 K0 - q^{-1/2} K0 K2               = B K0 + C1 K1 + D1,
///
/// so each member of the family is pinned down by the scalar five-tuple
/// (B, C0, C1, D0, D1).  Those scalars are published twice: once in the
/// "u-coordinates" (Q, k0, k1, u0, u1) natural on the algebra side, and once
/// in the "operator coordinates" (a, b, c, d, lam) natural on the q-difference
/// side.  This module records both tables exactly and proves, as identities
/// of rational functions, that the substitution dictionaries translate one
/// table into the other, that the confluence web (d -> 0, b -> 0, ...) acts
/// the same way on both, and that the lambda-rescaling dictionary matches the
/// omega scalar tables.  Two entries of the published confluent tables are
/// misprinted; the corresponding checks assert a *nonzero* discrepancy and
/// record the corrected forms used everywhere else.
///
/// Everything here is commutative: plain RationalFunction arithmetic over
/// the shared parameter registry, no quantum-torus matrices involved.

#include <array>
#include <string>
#include <vector>

#include "kernel/field.hpp"
#include "kernel/outcome.hpp"

namespace kernel {

/// Scalar structure constants of one member of the Zhedanov family.
struct ZhedanovParams {
    RationalFunction B;  ///< coefficient of K1 in rel. 2 / of K0 in rel. 3
    RationalFunction C0; ///< coefficient of K0 in rel. 2
    RationalFunction C1; ///< coefficient of K1 in rel. 3
    RationalFunction D0; ///< constant term of rel. 2
    RationalFunction D1; ///< constant term of rel. 3
};

/// Structure constants in the u-coordinates (Q, k0, k1, u0, u1).
///
/// Valid ids: "AW" (full algebra), "V", "IV", "III", "D7", "D8"
/// (confluent chain; D7/D8 keep the free parameter a), and "Vg"
/// (the gamma-conjugated presentation of the "V" member).
/// @throws UnknownAlgebra for any other id.
ZhedanovParams zhedanov_u_form(const std::string &table_id);

/// Structure constants of the full algebra in operator coordinates
/// (a, b, c, d), all four parameters free.
ZhedanovParams zhedanov_abcd_form();

/// Structure constants of the confluent members in operator coordinates.
///
/// Valid ids: "V" (a, b, c free), "IV" (a, c, lam), "III" (a, b, c),
/// "D7" (a), "D8" (none), "Vg" (a, b, c, lam).
/// @throws UnknownAlgebra for any other id.
ZhedanovParams zhedanov_abc_form(const std::string &table_id);

/// Parameter dictionaries translating operator coordinates into
/// u-coordinates.
///
/// Valid ids:
///   - "SO1"  : full algebra   {a, b, c, d}    -> (k0, k1, u0, u1, Q)
///   - "CONF" : members V, III {a, b, c}       -> (k1, u0, u1, Q)
///   - "KU"   : member Vg      {lam, a, b, c}  -> (k1, u0, u1, Q)
///   - "KUIV" : member IV      {lam, a, c}     -> (u0, u1, Q)
/// @throws UnknownAlgebra for any other id.
Substitution parameter_dictionary(const std::string &dict_id);

/// lambda-rescaling dictionary: structure constants of the rescaled pair
/// (K0, K1/lam) in terms of the scalar cubic coefficients w1, w2, w3.
RationalFunction dict_B(const RationalFunction &lam, const RationalFunction &w3);
RationalFunction dict_D0(const RationalFunction &lam, const RationalFunction &w2);
RationalFunction dict_D1(const RationalFunction &lam, const RationalFunction &w1);

/// Scalar cubic coefficients (w1, w2, w3) of one member, as rational
/// functions of the u-coordinates.  Valid ids: "AW", "V", "IV", "III", "D7".
/// @throws UnknownAlgebra for any other id.
std::array<RationalFunction, 3> omega_scalars(const std::string &table_id);

/// The full identity battery over the tables: coordinate-change identities
/// under the dictionaries, omega-dictionary consistency, the confluence web
/// (d -> 0, b -> 0, {b -> 0, c -> 1}, a -> 0), and the two expected-nonzero
/// misprint witnesses.  Every outcome's residual is an exact rational
/// function (empty when zero).
std::vector<CheckOutcome> check_scalar_tables();

} // namespace kernel
