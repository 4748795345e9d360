#include <catch2/catch_amalgamated.hpp>

#include "su2mod/commutant.hpp"
#include "su2mod/json_io.hpp"

using su2mod::InvariantMatrix;
using su2mod::Json;
using su2mod::make_rational;

TEST_CASE("rationals render as integer or fraction strings") {
    CHECK(su2mod::json_of(make_rational(7)) == "7");
    CHECK(su2mod::json_of(make_rational(-7)) == "-7");
    CHECK(su2mod::json_of(make_rational(1, 8)) == "1/8");
    CHECK(su2mod::json_of(make_rational(-6, 4)) == "-3/2");
    CHECK(su2mod::parse_rational("-3/2") == make_rational(-3, 2));
    CHECK(su2mod::parse_rational("-0.125") == make_rational(-1, 8));
    CHECK(su2mod::parse_rational("12") == 12);
}

TEST_CASE("cyclotomic serialization carries conductor, coords and a hint") {
    const Json j = su2mod::json_of(su2mod::sin_pi_rational(1, 4));
    CHECK(j.at("conductor") == 8);
    REQUIRE(j.at("coords").size() == 4);
    CHECK(j.at("coords")[1] == "1/2");
    CHECK(j.at("coords")[3] == "-1/2");
    CHECK(std::abs(j.at("approx").at("re").get<double>() - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("invariant matrices round-trip through JSON") {
    const InvariantMatrix d = su2mod::d_odd_invariant(3);
    CHECK(su2mod::invariant_from_json(su2mod::json_of(d)) == d);

    const Json wrapped{{"label", "D-odd"}, {"matrix", su2mod::json_of(d)}};
    CHECK(su2mod::invariant_from_json(wrapped) == d);

    Json bad = su2mod::json_of(d);
    bad["entries"].erase(0);
    CHECK_THROWS_AS(su2mod::invariant_from_json(bad), std::invalid_argument);
}

TEST_CASE("classification survives a serialization round-trip") {
    const su2mod::ModularData md(10);
    for (const auto& m : su2mod::enumerate_invariants(md).invariants) {
        const auto round = su2mod::invariant_from_json(su2mod::json_of(m));
        CHECK(su2mod::ade_classify(round).str() == su2mod::ade_classify(m).str());
    }
}

TEST_CASE("series serialization keeps exponent and coefficients") {
    const Json j = su2mod::json_of(su2mod::theta_prime(1, 2, 7));
    CHECK(j.at("h0") == "1/8");
    CHECK(j.at("order") == 7);
    REQUIRE(j.at("coeffs").size() == 7);
    CHECK(j.at("coeffs")[0] == "1");
    CHECK(j.at("coeffs")[1] == "-3");
    CHECK(j.at("coeffs")[6] == "-7");
}
