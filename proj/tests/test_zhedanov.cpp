#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "kernel/errors.hpp"
#include "kernel/zhedanov.hpp"

using namespace kernel;

namespace {

void require_all_pass(const std::vector<CheckOutcome> &outcomes) {
    REQUIRE(!outcomes.empty());
    for (const auto &o : outcomes) {
        INFO(o.id, " (", o.anchor, ") residual = ", o.residual);
        CHECK(o.pass);
    }
}

} // namespace

TEST_CASE("scalar-table identity battery passes") {
    const auto outcomes = check_scalar_tables();
    require_all_pass(outcomes);
    CHECK(outcomes.size() == 44);

    // Check ids are unique (report keys downstream).
    std::set<std::string> ids;
    for (const auto &o : outcomes) { ids.insert(o.id); }
    CHECK(ids.size() == outcomes.size());

    // The two misprint witnesses must carry a nonzero residual string.
    for (const auto &o : outcomes) {
        if (o.id == "v-D0-printed-differs" || o.id == "v-D1-printed-differs") {
            CHECK(!o.residual.empty());
        }
    }
}

TEST_CASE("table zero patterns") {
    CHECK(zhedanov_u_form("AW").C1.is_zero() == false);
    for (const char *id : {"V", "IV", "III", "D7", "D8"}) {
        INFO("table ", id);
        CHECK(zhedanov_u_form(id).C1.is_zero());
    }
    CHECK(zhedanov_u_form("IV").C0.is_zero());
    CHECK(zhedanov_u_form("Vg").C0.is_zero());
    CHECK(zhedanov_u_form("Vg").C1.is_zero() == false);
    for (const char *id : {"III", "D7", "D8"}) {
        INFO("table ", id);
        CHECK(zhedanov_u_form(id).D1.is_zero());
    }
    CHECK(zhedanov_u_form("D8").D0.is_zero());
    CHECK(zhedanov_u_form("D8").B == (rf_Q(2) - 1).pow(2) / rf_Q(2));
}

TEST_CASE("dictionaries and accessors reject unknown ids") {
    CHECK_THROWS_AS(zhedanov_u_form("II"), UnknownAlgebra);
    CHECK_THROWS_AS(zhedanov_abc_form("AW"), UnknownAlgebra);
    CHECK_THROWS_AS(parameter_dictionary("SO2"), UnknownAlgebra);
    CHECK_THROWS_AS(omega_scalars("D8"), UnknownAlgebra);

    // SO1 sends the product abcd to q u1^2 k0^2.
    const Substitution so1 = parameter_dictionary("SO1");
    const RationalFunction abcd =
        (rf_var("a") * rf_var("b") * rf_var("c") * rf_var("d")).substitute(so1);
    CHECK(abcd == rf_Q(2) * rf_var("u1").pow(2) * rf_var("k0").pow(2));
}

TEST_CASE("lambda dictionary is linear in the omega entry") {
    const RationalFunction lam = rf_var("lam");
    const RationalFunction w = rf_var("a") + rf_var("b");
    CHECK(dict_B(lam, w) == dict_B(lam, rf_var("a")) + dict_B(lam, rf_var("b")));
    CHECK(dict_D0(lam, w) ==
          dict_D0(lam, rf_var("a")) + dict_D0(lam, rf_var("b")));
    CHECK(dict_D1(lam, w) ==
          dict_D1(lam, rf_var("a")) + dict_D1(lam, rf_var("b")));
    CHECK(dict_D1(lam, w) == dict_D0(lam, w) * lam);
}
