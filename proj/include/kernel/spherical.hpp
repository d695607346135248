#pragma once

/**
 * @file spherical.hpp
 * @brief Spherical subalgebra data: symmetriser, loop triple, skein relations,
 *        quantum cubics, hatted (projected) versions with their scalar tables,
 *        classical limits, and Zhedanov-algebra images.
 *
 * For each embedded algebra the symmetriser e is an idempotent commuting with
 * the loop elements X1, X2, X3.  The triple satisfies three q-commutator skein
 * relations and one quantum cubic; projecting with e yields the hatted triple
 * whose relations involve only the four central scalars omega_1..omega_4.
 */

#include "kernel/outcome.hpp"
#include "kernel/qmat.hpp"

#include <optional>

namespace kernel {

/// Everything needed to state the spherical relations of one algebra.
struct SphericalData {
    std::string algebra_id;
    bool reduce = false; ///< quotient residuals by the central ideal (H_I)

    TorusMatrix2 e;  ///< idempotent symmetriser
    TorusMatrix2 S;  ///< q^{-1/2}Vc1 - q^{1/2}Vc1^{-1}
    std::optional<RationalFunction> sigma; ///< eigenvalue of S against e (absent for H_II, H_I)

    TorusMatrix2 X1, X2, X3; ///< loop elements
    TorusMatrix2 Vc1;        ///< kept for the e-eigenvalue checks

    TorusElement omega1, omega2, omega3, omega4; ///< central scalar table
    TorusElement u0, u0inv, u0bar;               ///< central torus parameters
    RationalFunction k0bar, k1bar, u1bar;        ///< x - 1/x shorthands
};

/// Build the spherical data for one of H, H_V, H_IV, H_III, H_II, H_I.
SphericalData spherical_data(const std::string &algebra_id);

/// Symmetriser facts, skeins, cubic, hatted two-path + skeins + cubic,
/// classical scalar / classical cubic checks for one algebra.
std::vector<CheckOutcome> check_spherical(const std::string &algebra_id);

/// Zhedanov isomorphism images and scalar-dictionary checks (H_V, H_IV, H_III).
std::vector<CheckOutcome> check_zhedanov_image(const std::string &algebra_id);

/// gamma action on the hatted triple of H_V: skein slots, inverse map, image cubic.
std::vector<CheckOutcome> check_gamma_spherical();

/// gamma as an automorphism of the Zhedanov algebra of H_V.
std::vector<CheckOutcome> check_gamma_zhedanov();

/// Negate omega_{which} (1..4) and re-test the hatted cubic; true when the
/// mutation is detected (non-zero residual).  Flipping an identically zero
/// table entry is a no-op and returns false.
bool omega_mutation_detected(const std::string &algebra_id, int which);

} // namespace kernel
