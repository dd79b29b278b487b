#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenscross/serialize.hpp"

using namespace tenscross;

TEST_CASE("rationals serialize as num/den") {
    CHECK(to_json(Rational(3)).get<std::string>() == "3/1");
    CHECK(to_json(Rational(-1, 2)).get<std::string>() == "-1/2");
    CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
    CHECK_THROWS_AS(rational_from_json(Json(3)), SchemaError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), SchemaError);
}

TEST_CASE("Hopf algebra round trip is bit exact") {
    auto a = build_supergroup_algebra(SupergroupPresentation::standard(2));
    for (const auto& h : {a, co_opposite(a), tensor_hopf(a, co_opposite(a))}) {
        Json j = to_json(h);
        HopfAlgebraData back = hopf_from_json(Json::parse(j.dump()));
        CHECK(to_json(back).dump() == j.dump());
        CHECK(back.products == h.products);
        CHECK(back.coproducts == h.coproducts);
        CHECK(back.antipode == h.antipode);
        CHECK(verify_hopf_axioms(back).empty());
    }
    Json j = to_json(a);
    CHECK(j.begin().key() == "name");
    CHECK(j["mult"][0].size() == 5);
}

TEST_CASE("unknown and missing keys are rejected") {
    auto a = build_supergroup_algebra(SupergroupPresentation::standard(1));
    Json j = to_json(a);
    j["extra"] = 1;
    CHECK_THROWS_AS(hopf_from_json(j), SchemaError);
    j.erase("extra");
    j.erase("counit");
    CHECK_THROWS_AS(hopf_from_json(j), SchemaError);
}

TEST_CASE("comodule and compatible data round trip") {
    auto ctx = SupergroupContext::standard(2);
    Comodule p = projective_cover(ctx.a, 1);
    Json j = to_json(p, "A(2)");
    Comodule back = comodule_from_json(Json::parse(j.dump()), ctx.a);
    CHECK(back.coaction == p.coaction);
    j["coaction"][0][3] = 7;
    CHECK_THROWS_AS(comodule_from_json(j, ctx.a), SchemaError);

    CompatibleData d = identity_data(ctx.p);
    d.T = Matrix{{1, 2}, {0, -1}};
    d.beta = Matrix{{Rational(1, 2), 1}, {1, 0}};
    Json dj = to_json(d);
    CHECK(dj["T"][0][1].get<std::string>() == "2/1");
    CHECK(compatible_data_from_json(dj, ctx.p) == d);
    dj["beta"][0][1] = "3/1";
    CHECK_THROWS_AS(compatible_data_from_json(dj, ctx.p), SchemaError);
}

TEST_CASE("category report") {
    auto ctx = std::make_shared<const SupergroupContext>(SupergroupContext::standard(2));
    auto eight = build_the_eight(ctx);
    Json r = category_report(eight[5], 2);
    CHECK(r["name"] == "D(1,id,-1)");
    CHECK(r["fpdim"] == "16/1");
    CHECK(r["simples"].size() == 4);
    CHECK(r["validation"]["valid"] == true);
    CHECK(r["pentagon_sweep"]["pentagon_failures"] == 0);
    CHECK(r["dual_table"][2]["dual"] == "[k_1,u]");
    CHECK(r["associator_scalars"][0]["value"]["coeff"] == "-1/1");
    CHECK(category_report(eight[5], 1).dump() == r.dump());
}
