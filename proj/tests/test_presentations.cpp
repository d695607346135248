#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kernel/presentations.hpp"

using namespace kernel;

namespace {

void require_all_pass(const AlgebraPresentation &pres, const EmbeddingAssignment &asg) {
    for (const RelationOutcome &o : check_presentation(pres, asg)) {
        INFO(pres.id, " / ", o.id, " residual: ", o.residual);
        CHECK(o.pass);
    }
}

} // namespace

TEST_CASE("defining relations hold on all six embeddings") {
    for (const char *alg : {"H", "H_V", "H_IV", "H_III", "H_II", "H_I"}) {
        require_all_pass(daha_presentation(alg), embed(alg));
    }
}

TEST_CASE("rewritten product relations keep the central shift explicit") {
    require_all_pass(rewritten_presentation(), embed("H"));
}

TEST_CASE("Sahi presentations hold under the T0/T1/X/W dictionary") {
    for (const char *alg : {"H", "H_V", "H_IV", "H_III"}) {
        require_all_pass(sahi_presentation(alg), sahi_assignment(alg));
    }
}

TEST_CASE("Sahi round trips reproduce the original generator matrices") {
    for (const char *alg : {"H_V", "H_IV", "H_III"}) {
        require_all_pass(sahi_roundtrip_presentation(alg), sahi_assignment(alg));
    }
}

TEST_CASE("Lusztig-Demazure presentations hold under the X/Y/T dictionary") {
    for (const char *alg : {"H", "H_V", "H_IV", "H_III"}) {
        require_all_pass(ld_presentation(alg), ld_assignment(alg));
    }
}

TEST_CASE("Lusztig-Demazure round trips reproduce the original generators") {
    for (const char *alg : {"H_V", "H_IV", "H_III"}) {
        require_all_pass(ld_roundtrip_presentation(alg), ld_assignment(alg));
    }
}

TEST_CASE("gamma twist satisfies the relabelled H_V relations") {
    require_all_pass(gamma_presentation(), gamma_assignment());
}

TEST_CASE("beta swaps the (k0, u0) parameter pair on H") {
    require_all_pass(beta_presentation(), beta_assignment("H"));
    require_all_pass(beta_T_presentation(), sahi_assignment("H"));

    // Vc0 has no quadratic inverse outside H, so beta cannot act there.
    CHECK_THROWS_AS((void)beta_assignment("H_V"), NoInverseAvailable);

    // Applying beta twice restores the original parameter placement.
    GeneratorMap twice;
    twice.id = "beta^2:H";
    for (const auto &[name, image] : beta_map().images) {
        twice.images[name] = apply_generator_map(image, beta_map());
    }
    require_all_pass(daha_presentation("H"), apply_to_assignment(twice, embed("H"), false));
}

TEST_CASE("broken relations report a non-empty residual") {
    AlgebraPresentation p = daha_presentation("H");
    // Flip the sign of the central constant in the product relation.
    p.relations[4].expr =
        NCExpression::symbol("Vc1") * NCExpression::symbol("V1") * NCExpression::symbol("V0") *
            NCExpression::symbol("Vc0") +
        NCExpression(rf_Q(-1));
    auto out = check_presentation(p, embed("H"));
    CHECK(out[0].pass);
    CHECK(out[3].pass);
    CHECK_FALSE(out[4].pass);
    CHECK_FALSE(out[4].residual.empty());
}

TEST_CASE("catalogue serialisation is deterministic and complete") {
    const std::string a = catalogue_to_json();
    const std::string b = catalogue_to_json();
    CHECK(a == b);
    for (const char *needle :
         {"\"daha:H_I\"", "\"sahi:H_III\"", "\"ld-roundtrip:H_IV\"", "\"gamma:H_V\"",
          "\"beta-T:H\"", "\"rewritten:H\""}) {
        INFO("missing ", needle);
        CHECK(a.find(needle) != std::string::npos);
    }
    CHECK(presentation_catalogue().size() == 24);
}
