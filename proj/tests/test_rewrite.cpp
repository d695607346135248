#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kernel/rewrite.hpp"

using namespace kernel;

TEST_CASE("full battery passes for D7 and D8 within the default budget") {
    for (const char *variant : {"D7", "D8"}) {
        RewriteReport rep = check_rewrite(variant);
        for (const CheckOutcome &o : rep.outcomes) {
            INFO(variant, " / ", o.id, " residual: ", o.residual);
            CHECK(o.pass);
        }
        INFO(variant, " steps: ", rep.steps);
        CHECK(rep.steps > 1000);                              // genuinely non-trivial
        CHECK(rep.steps < RewriteAlgebra::kDefaultBudget);    // but within budget
    }
}

TEST_CASE("rule applications are budgeted") {
    RewriteAlgebra tight("D7", /*budget=*/1);
    const auto X2 = tight.named("X2");
    // X2 * X2 requires many rule applications; the budget of one must trip.
    CHECK_THROWS_AS((void)tight.mul(X2, X2), BudgetExhausted);
}

TEST_CASE("traces record step, rule and position") {
    RewriteAlgebra R("D7", RewriteAlgebra::kDefaultBudget, false, /*record_trace=*/true);
    (void)R.atom({"T1", "X"}); // single T1X rewrite at position 0
    const std::string json = R.trace_json();
    CHECK(json.find("\"rule\":\"T1X\"") != std::string::npos);
    CHECK(json.find("\"step\":1") != std::string::npos);
    CHECK(json.find("\"position\":0") != std::string::npos);
}

TEST_CASE("abstract expressions evaluate into the rewrite algebra") {
    RewriteAlgebra R("D7");
    using NC = NCExpression;
    const NC T1 = NC::symbol("T1"), X = NC::symbol("X"), W = NC::symbol("W");
    const NC rel4 = T1 * X + NC(rf_var("a")) - W * (T1 + NC(1));
    CHECK(RewriteAlgebra::is_zero(eval_rewrite(rel4, R)));

    // Negative powers route through the unit: X^{-1} = W.
    const auto lhs = eval_rewrite(NC::symbol("X", -1), R);
    CHECK(RewriteAlgebra::is_zero(R.sub(lhs, R.named("W"))));

    CHECK_THROWS_AS((void)eval_rewrite(NC::symbol("T0", -1), R), NoInverseAvailable);
    CHECK_THROWS_AS((void)eval_rewrite(NC::symbol("V0"), R), UnboundGenerator);
    CHECK_THROWS_AS(RewriteAlgebra("D6"), UnknownAlgebra);
}

TEST_CASE("normal forms render deterministically") {
    RewriteAlgebra R("D8");
    const auto prod = R.mul(R.mul(R.named("X2"), R.named("X1")), R.named("X2"));
    RewriteAlgebra R2("D8");
    const auto prod2 = R2.mul(R2.mul(R2.named("X2"), R2.named("X1")), R2.named("X2"));
    CHECK(R.render(prod) == R2.render(prod2));
    CHECK(R.render(R.zero()) == "0");
}
