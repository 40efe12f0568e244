#include <doctest.h>

#include "cremona/report.hpp"
#include "cremona/text_io.hpp"
#include "cremona/varieties.hpp"

using namespace cremona;

TEST_CASE("rational function text round-trips, with and without denominators") {
    auto reg = make_registry();
    VarId x = reg->declare("x"), y = reg->declare("y");
    auto v = [&](VarId w) { return Polynomial::variable(reg, w); };

    RationalFunction plain(v(x) * v(y) - Polynomial::constant(reg, 1));
    CHECK(parse_rational_function(reg, to_text(plain)) == plain);

    RationalFunction frac(v(x) + Polynomial::constant(reg, 1),
                          v(y) * v(y) - v(x));
    std::string text = to_text(frac);
    CHECK(text.front() == '(');
    CHECK(parse_rational_function(reg, text) == frac);

    // a scaled denominator re-normalizes on the way in
    RationalFunction scaled(v(x), Rational(3) * v(y));
    CHECK(parse_rational_function(reg, to_text(scaled)) == scaled);
    CHECK(scaled.den() == v(y));
}

TEST_CASE("map serialization carries charts, variables and coordinates") {
    CatalogEntry e = segre(1, 1);
    CremonaPair raw = linearizing_pair(e);
    CremonaPair pair = verify_cremona(raw.forward, raw.inverse);

    nlohmann::json j = to_json(pair);
    CHECK(j["verified"] == true);
    CHECK(j["delta"] == 2);
    CHECK(j["delta_prime"] == 2);
    CHECK(j["fundamental_factor"] == "x00^3");
    CHECK(j["forward"]["chart"]["source"] == "x00");
    CHECK(j["forward"]["chart"]["target"] == "y00");
    CHECK(j["forward"]["source_vars"].size() == 3);
    CHECK(j["forward"]["coords"].size() == 3);
    CHECK(j["inverse"]["coords"][2] == "y10*y01 + y11");

    // coordinates parse back into the same functions
    for (size_t i = 0; i < pair.forward.coords.size(); ++i) {
        RationalFunction back = parse_rational_function(
            e.reg, j["forward"]["coords"][i].get<std::string>());
        CHECK(back == pair.forward.coords[i]);
    }
}

TEST_CASE("report JSON shape") {
    Report rep;
    rep.command = "demo";
    rep.check("alpha", true, "fine");
    rep.check("beta", false, "broken");
    rep.artifact("thing", "x + 1");
    CHECK(!rep.all_pass());
    nlohmann::json j = rep.to_json();
    CHECK(j["pass"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(j["artifacts"]["thing"] == "x + 1");
    std::string text = rep.to_text();
    CHECK(text.find("[PASS] alpha") != std::string::npos);
    CHECK(text.find("[FAIL] beta") != std::string::npos);
}

TEST_CASE("parametrization serialization") {
    CatalogEntry e = rnc(3);
    nlohmann::json j = to_json(e.param);
    CHECK(j["normal_form"] == true);
    CHECK(j["params"] == nlohmann::json::array({"t1"}));
    CHECK(j["coords"]["x3"] == "t1^3");
}
