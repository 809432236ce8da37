#include <doctest.h>

#include <discjet/errors.hpp>
#include <discjet/json_io.hpp>
#include <discjet/random.hpp>

#include "helpers.hpp"

using namespace discjet;
using namespace testing;

TEST_CASE("jets round-trip byte-identically")
{
    random_source rs(301);
    for (const auto &orders : {std::vector<int>{}, {2}, {2, 3}}) {
        auto r = base_ring::nilpotent(orders);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto g = rs.g_element(n, 3, r);
            const auto text = dump_canonical(jet_to_json(g));
            auto back = jet_from_json(parse_document(text));
            CHECK(back == g);
            CHECK(dump_canonical(jet_to_json(back)) == text);
        }
    }
    auto sym = base_ring::symbolic({"r2", "s2"});
    auto g = jet1(series1(sym, 2, {q(sym, 0), q(sym, 1), eps(sym, 0) + eps(sym, 1)}));
    CHECK(jet_from_json(jet_to_json(g)) == g);
}

TEST_CASE("derivations, roofs and representations round-trip")
{
    random_source rs(307);
    auto r = base_ring::nilpotent({3});
    derivation d(series_tuple{rs.series(2, 3, r, 1), rs.series(2, 3, r, 2)});
    CHECK(derivation_from_json(derivation_to_json(d)) == d);
    CHECK_THROWS_AS(jet_from_json(derivation_to_json(d)), schema_error);

    auto w = rs.nilpotent_point(2, r);
    roof_chart roof{rs.chart(2, 3, r, w, false), rs.chart(2, 2, r, w, true), w};
    auto back = roof_from_json(roof_to_json(roof));
    CHECK(back.phi == roof.phi);
    CHECK(back.psi == roof.psi);
    CHECK(back.w == roof.w);

    auto rep = rep_jet_standard(2, 2);
    auto rep_back = rep_from_json(rep_to_json(rep));
    CHECK(rep_back.entries() == rep.entries());
    CHECK(rep_back.weights() == rep.weights());
}

TEST_CASE("coordinate elements keep their variables")
{
    auto s = coordinate_space::get(2, 2);
    const auto &[v, sv] = antipode(2, 2)[3];
    CHECK(coord_from_json(coord_to_json(sv), s) == sv);
    auto j = coord_variable_to_json(v);
    CHECK(j["k"] == 1);
    CHECK(coord_variable_from_json(j, 2) == v);
}

TEST_CASE("malformed documents are schema errors")
{
    CHECK_THROWS_AS(parse_document("{"), schema_error);
    CHECK_THROWS_AS(require_schema(json::object()), schema_error);
    auto doc = jet_to_json(jet1(series1(3, {0, 1, 1})));
    auto bad = doc;
    bad["schema"] = "discjet/0";
    CHECK_THROWS_AS(jet_from_json(bad), schema_error);
    bad = doc;
    bad["components"][0]["terms"][0]["J"] = json::array({1, 2});
    CHECK_THROWS_AS(jet_from_json(bad), schema_error);
    bad = doc;
    bad["components"][0]["terms"][0]["J"] = json::array({5});
    CHECK_THROWS_AS(jet_from_json(bad), schema_error);
    bad = doc;
    bad["components"][0]["terms"][0]["coef"] = "1/0";
    CHECK_THROWS_AS(jet_from_json(bad), error);
    bad = doc;
    bad["base"] = {{"nilpotents", {1}}};
    CHECK_THROWS_AS(jet_from_json(bad), schema_error);
    bad = doc;
    bad.erase("n");
    CHECK_THROWS_AS(jet_from_json(bad), schema_error);
    CHECK_THROWS_AS(coord_variable_from_json({{"k", 3}, {"J", {1, 0}}}, 2), schema_error);
}

TEST_CASE("non-unit linear part is a precondition error, not a schema error")
{
    auto doc = jet_to_json(jet1(series1(3, {0, 1})));
    doc["components"][0]["terms"][0]["coef"] = "0";
    CHECK_THROWS_AS(jet_from_json(doc), precondition_error);
}

TEST_CASE("coproduct document")
{
    auto doc = coproduct_document(1, 4);
    CHECK(doc["schema"] == schema_tag);
    CHECK(doc["coproduct_unipotent_chart"][3]["text"]
          == "a4 (x) 1 + 1 (x) a4 + 2 a2 (x) a3 + 3 a3 (x) a2 + a2 (x) a2^2");
    CHECK(doc["counit"][0]["value"] == "1");
    CHECK(doc["grading"][3]["degree"] == 3);
    CHECK(dump_canonical(doc) == dump_canonical(parse_document(dump_canonical(doc))));
}
