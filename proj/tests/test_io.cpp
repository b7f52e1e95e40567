#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>

#include "entring/io.hpp"
#include "entring/states.hpp"
#include "test_helpers.hpp"

using namespace entring;
using nlohmann::json;

TEST_CASE("format_double prints 17 significant digits that round-trip") {
    REQUIRE(format_double(0.25) == "2.5000000000000000e-01");
    REQUIRE(format_double(0.0) == "0.0000000000000000e+00");
    REQUIRE(format_double(-1.0) == "-1.0000000000000000e+00");
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = rng.gaussian() * std::exp(10.0 * (rng.uniform() - 0.5));
        REQUIRE(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("state JSON round-trips bitwise") {
    Rng rng(12);
    for (int d : {2, 3, 4}) {
        const Eigen::MatrixXcd rho = sample_hilbert_schmidt(d, rng);
        const Eigen::MatrixXcd back = state_from_json(json::parse(state_to_json(rho).dump()));
        REQUIRE(back.rows() == d);
        REQUIRE(back == rho);
    }
}

TEST_CASE("states serialize with the unit-trace marker") {
    const auto j = state_to_json(maximally_mixed(4));
    REQUIRE(j["dim"] == 4);
    REQUIRE(j["unit_trace"] == true);
    REQUIRE(state_to_json(2.0 * maximally_mixed(4))["unit_trace"] == false);
}

TEST_CASE("the imaginary part may be omitted") {
    const auto j = json::parse(R"({"dim": 2, "re": [[0.5, 0.0], [0.0, 0.5]]})");
    const Eigen::MatrixXcd rho = state_from_json(j);
    REQUIRE(rho == 0.5 * Eigen::MatrixXcd::Identity(2, 2));
}

TEST_CASE("malformed state JSON throws") {
    const char* bad[] = {
        R"([1, 2, 3])",                                               // not an object
        R"({"re": [[0.5, 0], [0, 0.5]]})",                            // missing dim
        R"({"dim": 2})",                                              // missing re
        R"({"dim": 2.5, "re": [[0.5, 0], [0, 0.5]]})",                // fractional dim
        R"({"dim": 1, "re": [[1.0]]})",                               // dim too small
        R"({"dim": 17, "re": [[1.0]]})",                              // dim too large
        R"({"dim": 2, "re": [[0.5, 0]]})",                            // wrong row count
        R"({"dim": 2, "re": [[0.5], [0.5]]})",                        // wrong column count
        R"({"dim": 2, "re": [[0.5, "x"], [0, 0.5]]})",                // non-numeric
        R"({"dim": 2, "re": [[0.5, 0], [0, 0.5]], "im": [[0, 0]]})",  // bad im shape
        R"({"dim": 2, "re": [[0.7, 0], [0, 0.5]], "unit_trace": true})",
    };
    for (const char* text : bad) {
        REQUIRE_THROWS_AS(state_from_json(json::parse(text)), std::invalid_argument);
    }
}

TEST_CASE("an honest unit_trace flag is accepted") {
    const auto j = json::parse(
        R"({"dim": 2, "unit_trace": true, "re": [[0.5, 0.1], [0.1, 0.5]]})");
    REQUIRE(state_from_json(j)(0, 1).real() == 0.1);
}

TEST_CASE("Fano JSON round-trips bitwise") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const FanoForm f = test::random_fano(rng);
        const FanoForm back = fano_from_json(json::parse(fano_to_json(f).dump()));
        REQUIRE(back.a == f.a);
        REQUIRE(back.b == f.b);
        REQUIRE(back.C == f.C);
    }
}

TEST_CASE("malformed Fano JSON throws") {
    const char* bad[] = {
        R"(3.5)",
        R"({"a": [0, 0, 0], "b": [0, 0, 0]})",                        // missing C
        R"({"a": [0, 0], "b": [0, 0, 0], "C": [[0,0,0],[0,0,0],[0,0,0]]})",
        R"({"a": [0, 0, "z"], "b": [0, 0, 0], "C": [[0,0,0],[0,0,0],[0,0,0]]})",
        R"({"a": [0, 0, 0], "b": [0, 0, 0], "C": [[0,0,0],[0,0,0]]})",
    };
    for (const char* text : bad) {
        REQUIRE_THROWS_AS(fano_from_json(json::parse(text)), std::invalid_argument);
    }
}
