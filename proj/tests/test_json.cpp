#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmc/json_io.hpp"
#include "test_util.hpp"

using namespace rmctest;
using io::json;

TEST_CASE("field JSON golden form") {
    auto t = FieldTower::build(3, 1, 2);
    json j = io::field_to_json(t);
    CHECK(j["p"] == 3);
    CHECK(j["e"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["base_poly"] == json::array({1, 1}));
    CHECK(j["top_poly"] == json::array({1, 0, 1}));
    auto t2 = io::field_from_json(j);
    CHECK(t2 == t);

    // leading-1-omitted polynomials parse to the same tower
    json omitted = {{"p", 3}, {"e", 1}, {"m", 2}, {"base_poly", {1}}, {"top_poly", {1, 0}}};
    CHECK(io::field_from_json(omitted) == t);

    // e > 1: top_poly coefficients become arrays
    auto t16 = FieldTower::build(2, 2, 2);
    json j16 = io::field_to_json(t16);
    CHECK(j16["top_poly"].is_array());
    CHECK(j16["top_poly"][0].is_array());
    CHECK(io::field_from_json(j16) == t16);
}

TEST_CASE("element JSON shapes") {
    auto t = FieldTower::build(3, 1, 2);
    auto i = t.element_at(Level::Top, 3);
    CHECK(io::element_to_json(t, i) == json::array({0, 1}));
    CHECK(io::element_from_json(t, Level::Top, json::array({0, 1})) == i);
    CHECK(io::element_to_json(t, t.from_integer(Level::Base, 2)) == json(2));

    auto t16 = FieldTower::build(2, 2, 2);
    auto x = t16.element_at(Level::Top, 7);
    json jx = io::element_to_json(t16, x);
    CHECK(jx.is_array());
    CHECK(jx[0].is_array());
    CHECK(io::element_from_json(t16, Level::Top, jx) == x);

    // negative residues reduce
    CHECK(io::element_from_json(t, Level::Base, json(-1)) == t.from_integer(Level::Base, 2));
}

TEST_CASE("code round trips") {
    Rng rng(61);
    for (const auto& t : {FieldTower::build(3, 1, 2), FieldTower::build(2, 2, 2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng.next(t.m());
            std::size_t k = rng.next(n + 1);
            codes::GabidulinCode C(t, random_full_rank(rng, t, k, n));
            auto back = io::code_from_json(io::code_to_json(C));
            CHECK(back.tower() == t);
            CHECK(back.generator() == C.generator());
        }
    }
}

TEST_CASE("delsarte round trips") {
    auto D = [] {
        auto t = FieldTower::build(5, 1, 1);
        std::vector<linalg::Matrix> basis;
        std::vector<FieldElement> e;
        for (int v : {1, 2, 0, 0, 3, 1, 4, 0}) e.push_back(t.from_integer(Level::Base, v));
        basis.emplace_back(Level::Base, 4, 2, std::move(e));
        return codes::DelsarteCode(t, 4, 2, std::move(basis));
    }();
    auto back = io::delsarte_from_json(io::delsarte_to_json(D));
    CHECK(back.m() == 4);
    CHECK(back.n() == 2);
    CHECK(back.basis() == D.basis());
}

TEST_CASE("form round trips") {
    Rng rng(62);
    auto t = FieldTower::build(3, 1, 2);
    for (auto tag : {codes::BilinearFormSpec::Tag::Identity,
                     codes::BilinearFormSpec::Tag::Hyperbolic}) {
        auto form = tag == codes::BilinearFormSpec::Tag::Identity
                        ? codes::BilinearFormSpec::identity(t, 2)
                        : codes::BilinearFormSpec::hyperbolic(t, 2);
        auto back = io::form_from_json(t, 2, io::form_to_json(t, form));
        CHECK(back.tag == form.tag);
        CHECK(back.B == form.B);
    }
    auto custom = random_form(rng, t, 2);
    auto back = io::form_from_json(t, 2, io::form_to_json(t, custom));
    CHECK(back.B == custom.B);
    // bare tag strings are accepted
    CHECK(io::form_from_json(t, 2, json("hyperbolic")).tag ==
          codes::BilinearFormSpec::Tag::Hyperbolic);
}

TEST_CASE("vector and basis round trips") {
    auto t = FieldTower::build(3, 1, 2);
    Rng rng(63);
    std::vector<FieldElement> v{random_element(rng, t, Level::Top),
                                random_element(rng, t, Level::Top)};
    CHECK(io::vector_from_json(t, io::vector_to_json(t, v)) == v);
    auto b = random_lbasis(rng, t);
    auto back = io::basis_from_json(t, io::basis_to_json(t, b));
    CHECK(back.alpha == b.alpha);
}

TEST_CASE("report schema") {
    verify::TheoremReport rep;
    rep.theorem = "demo";
    rep.grid = "q=3";
    rep.instances_checked = 7;
    rep.wall_time_ms = 1.5;
    json j = io::report_to_json(rep);
    CHECK(j["theorem"] == "demo");
    CHECK(j["instancesChecked"] == 7);
    CHECK(j["counterexamples"] == json::array());
    CHECK(j["pass"] == true);
    CHECK(j.contains("wallTimeMs"));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(io::field_from_json(json{{"p", 3}}), Error);
    auto t = FieldTower::build(3, 1, 2);
    CHECK_THROWS_AS(io::element_from_json(t, Level::Top, json::array({0, 1, 2})), Error);
    json bad_code = {{"field", io::field_to_json(t)}, {"n", 2},
                     {"generators", json::array({json::array({json::array({0, 1})})})}};
    CHECK_THROWS_AS(io::code_from_json(bad_code), Error);  // row length 1 != 2
    CHECK_THROWS_AS(io::form_from_json(t, 2, json("nosuch")), Error);
}

TEST_CASE("dump is deterministic") {
    auto t = FieldTower::build(3, 1, 2);
    auto C = construct::self_dual_mrd_code(3, 2);
    CHECK(io::dump(io::code_to_json(C)) == io::dump(io::code_to_json(C)));
    CHECK(io::dump(io::field_to_json(t)).back() == '\n');
}
