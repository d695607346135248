#ifndef KERNEL_PRESENTATIONS_HPP
#define KERNEL_PRESENTATIONS_HPP

/**
 * @file presentations.hpp
 * @brief Defining relation lists, alternative presentations, generator maps,
 *        and the beta/gamma (anti)automorphism checks.
 *
 * A presentation is a named list of relations (noncommutative expressions
 * that must evaluate to zero against an embedding assignment).  Generator
 * maps re-express one presentation's generators in terms of another's; they
 * can be applied at the expression level or pushed through an assignment to
 * produce the matrices of the mapped generators.
 *
 * Catalogued presentations:
 *   - "daha"      : the defining lists of all six algebras (including the
 *                   product relations the statement lists omit but the
 *                   embeddings satisfy, marked in the anchors);
 *   - "rewritten" : the two rewritten product relations of H;
 *   - "sahi"      : the Askey-Wilson-operator style presentations of
 *                   H, H_V, H_IV, H_III (T0/T1/X/W generators);
 *   - "ld"        : the Lusztig-Demazure style presentations (X/Y/T/...);
 *   - "gamma"     : the relation list satisfied by the twisted H_V
 *                   assignment (V0 -> V1, V1 -> V1 V0 V1^{-1});
 *   - "beta"      : the relations satisfied by the beta images in H,
 *                   at generator level and at (T0, T1, X) level.
 */

#include <string>
#include <vector>

#include "kernel/qmat.hpp"

namespace kernel {

//-----------------------------------------------------------------------------
// Presentations
//-----------------------------------------------------------------------------

/// One defining relation: @c expr must evaluate to the zero matrix.
struct Relation {
    std::string id;     ///< stable check id, e.g. "daha5", "LD4-V"
    std::string anchor; ///< human-readable formula text
    NCExpression expr;  ///< residual expression (lhs - rhs)
};

/// A named presentation of an algebra by generators and relations.
struct AlgebraPresentation {
    std::string id;                      ///< e.g. "sahi:H_V"
    std::string algebra_id;              ///< embedding used to evaluate it
    std::vector<std::string> generators; ///< generator symbols used
    std::vector<Relation> relations;
};

/// Outcome of evaluating one relation against an assignment.
struct RelationOutcome {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string residual; ///< rendered residual matrix when nonzero, else ""
};

/// Evaluate every relation of @p pres against @p asg (residuals honour the
/// assignment's central specialisation flag).
std::vector<RelationOutcome> check_presentation(const AlgebraPresentation &pres, const EmbeddingAssignment &asg);

//-----------------------------------------------------------------------------
// Generator maps
//-----------------------------------------------------------------------------

/// Images of generator symbols under a map between presentations.
struct GeneratorMap {
    std::string id;
    std::map<std::string, NCExpression> images;
};

/// Substitute mapped symbols inside an expression.  Symbols without an image
/// are kept.  Negative powers of a mapped symbol require its image to be an
/// invertible monomial (otherwise NoInverseAvailable).
NCExpression apply_generator_map(const NCExpression &expr, const GeneratorMap &map);

/// Push a generator map through an assignment: every image is evaluated to a
/// matrix and installed under its new name.  With @p merge the original
/// generators stay available (used for round-trip checks); otherwise only
/// mapped names survive.  All images are evaluated against the ORIGINAL
/// assignment (simultaneous semantics).
EmbeddingAssignment apply_to_assignment(const GeneratorMap &map, const EmbeddingAssignment &asg, bool merge);

//-----------------------------------------------------------------------------
// Catalogue
//-----------------------------------------------------------------------------

/// Defining relation list of one of the six algebras.
AlgebraPresentation daha_presentation(const std::string &algebra_id);

/// The two rewritten product relations of H.
AlgebraPresentation rewritten_presentation();

/// Sahi-type presentation (algebra_id in {H, H_V, H_IV, H_III}).
AlgebraPresentation sahi_presentation(const std::string &algebra_id);

/// Lusztig-Demazure presentation (algebra_id in {H, H_V, H_IV, H_III}).
AlgebraPresentation ld_presentation(const std::string &algebra_id);

/// Round-trip relations expressing the original generators through the
/// Sahi generators (confluent algebras H_V, H_IV, H_III).
AlgebraPresentation sahi_roundtrip_presentation(const std::string &algebra_id);

/// Round-trip relations through the Lusztig-Demazure generators.
AlgebraPresentation ld_roundtrip_presentation(const std::string &algebra_id);

/// Relation list satisfied by the twisted H_V assignment.
AlgebraPresentation gamma_presentation();

/// Relations satisfied by the beta images at generator level (H only).
AlgebraPresentation beta_presentation();

/// Relations satisfied by the beta image of T0 at (T0, T1, X) level.
AlgebraPresentation beta_T_presentation();

/// Generator map installing the Sahi generators (T0, T1, X, W).
GeneratorMap sahi_map(const std::string &algebra_id);

/// Generator map installing the Lusztig-Demazure generators.
GeneratorMap ld_map(const std::string &algebra_id);

/// The twist V0 -> V1, V1 -> V1 V0 V1^{-1} on H_V.
GeneratorMap gamma_map();

/// The involution V0 -> Vc0, Vc0 -> Vc0^{-1} V0 Vc0 on H.
GeneratorMap beta_map();

/// Assignment binding both the defining and the Sahi generators.
EmbeddingAssignment sahi_assignment(const std::string &algebra_id);

/// Assignment binding both the defining and the Lusztig-Demazure generators.
EmbeddingAssignment ld_assignment(const std::string &algebra_id);

/// Apply beta to an algebra's assignment.  Defined for H; for H_V the
/// required Vc0 inverse does not exist and NoInverseAvailable propagates.
EmbeddingAssignment beta_assignment(const std::string &algebra_id);

/// The twisted H_V assignment.
EmbeddingAssignment gamma_assignment();

/// All catalogued presentations (deterministic order).
std::vector<AlgebraPresentation> presentation_catalogue();

/// JSON serialisation of the catalogue (ids, generators, rendered relations).
std::string catalogue_to_json();

} // namespace kernel

#endif // KERNEL_PRESENTATIONS_HPP
