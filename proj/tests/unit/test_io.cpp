#include "ostrowski/error.hpp"
#include "ostrowski/io.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ostrowski;

TEST(Io, ParsesFunctionSpec) {
    const PwmFunction f = io::parse_function(
        R"({"interval": [0, 1], "segments": [{"right": 0.25, "coeffs": [0]}, {"right": 1, "coeffs": [1]}]})");
    EXPECT_DOUBLE_EQ(f(0.25), 1.0);
    EXPECT_DOUBLE_EQ(f.total_variation(), 1.0);
}

TEST(Io, CoefficientsAreInGlobalT) {
    const PwmFunction f = io::parse_function(
        R"({"interval": [1, 3], "segments": [{"right": 3, "coeffs": [0, 0, 1]}]})");
    EXPECT_DOUBLE_EQ(f(2.0), 4.0);
}

TEST(Io, RoundTrip) {
    for (const PwmFunction& f : testutil::corpus(61, 20)) {
        const PwmFunction g = io::parse_function(io::function_to_json(f));
        for (double t : {0.0, 0.2, 0.5, 0.9, 1.0}) {
            EXPECT_NEAR(f(t), g(t), 1e-12);
        }
    }
}

namespace {
std::string parse_error_path(const std::string& text) {
    try {
        io::parse_function(text);
    } catch (const ParseError& e) {
        return e.path();
    }
    return "<none>";
}
}  // namespace

TEST(Io, ParseErrorsCarryLocation) {
    EXPECT_EQ(parse_error_path("{"), "");
    EXPECT_EQ(parse_error_path(R"({"segments": []})"), "/interval");
    EXPECT_EQ(parse_error_path(R"({"interval": [0], "segments": []})"), "/interval");
    EXPECT_EQ(parse_error_path(R"({"interval": [0, 1], "segments": []})"), "/segments");
    EXPECT_EQ(parse_error_path(R"({"interval": [0, 1], "segments": [{"coeffs": [1]}]})"),
              "/segments/0/right");
    EXPECT_EQ(parse_error_path(R"({"interval": [0, 1], "segments": [{"right": 1, "coeffs": [1, "a"]}]})"),
              "/segments/0/coeffs/1");
    EXPECT_EQ(parse_error_path(R"({"interval": [1, 0], "segments": [{"right": 1, "coeffs": [1]}]})"),
              "/interval");
}

TEST(Io, InvalidFunctionIsValidationError) {
    EXPECT_THROW(io::parse_function(R"({"interval": [0, 1], "segments": [{"right": 1, "coeffs": [0, 1, -1]}]})"),
                 ValidationError);
}

TEST(Io, CdfRequiresKind) {
    const char* body = R"("interval": [0, 1], "segments": [{"right": 1, "coeffs": [0, 1]}])";
    EXPECT_NO_THROW(io::parse_cdf(std::string("{\"kind\": \"cdf\", ") + body + "}"));
    EXPECT_THROW(io::parse_cdf(std::string("{") + body + "}"), ParseError);
    EXPECT_THROW(io::parse_cdf(R"({"kind": "cdf", "interval": [0, 1], "segments": [{"right": 1, "coeffs": [0, 0.5]}]})"),
                 ValidationError);
}

TEST(Io, MissingFile) {
    EXPECT_THROW(io::load_function("/nonexistent/missing.json"), ParseError);
}

TEST(Io, JsonKeysAreSorted) {
    const std::string s = io::to_json(chain_report(testutil::identity(), 0.25, HolderExponent(2.0)));
    EXPECT_LT(s.find("\"coarse\""), s.find("\"lhs\""));
    EXPECT_LT(s.find("\"lhs\""), s.find("\"x\""));
}

TEST(Io, CellsCsv) {
    std::ostringstream os;
    io::write_cells_csv(os, composite_integrate(testutil::square(), 2));
    EXPECT_EQ(os.str(), "left,right,estimate,bound\n0,0.5,0.0390625,0.015625\n0.5,1,0.2890625,0.046875\n");
}
