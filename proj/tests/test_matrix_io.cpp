#include <gtest/gtest.h>

#include <string>

#include "pcm/matrix_io.hpp"
#include "test_support.hpp"

using namespace pcm;

TEST(ParseCsv, ValidTwoByTwo) {
    const auto m = parse_csv("1,2\n0.5,1");
    EXPECT_EQ(m.order(), 2u);
    EXPECT_EQ(m(0, 1), 2.0);
    EXPECT_EQ(m(1, 0), 0.5);
}

TEST(ParseCsv, ReciprocityErrorNamesCells) {
    try {
        (void)parse_csv("1,2\n0.4,1");
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.cells().size(), 1u);
        EXPECT_EQ(e.cells()[0].kind, ViolationKind::reciprocity);
        EXPECT_NE(std::string(e.what()).find("(2,1)"), std::string::npos);
    }
}

TEST(ParseCsv, AcceptsScientificWhitespaceAndTrailingNewline) {
    const auto m = parse_csv(" 1 , 2e0 \r\n5e-1,1\n\n");
    EXPECT_EQ(m(0, 1), 2.0);
}

TEST(ParseCsv, ToleranceRebuildsLowerTriangle) {
    const auto m = parse_csv("1,3\n0.3333333,1");
    EXPECT_EQ(m(1, 0), 1.0 / 3.0);
    EXPECT_THROW(parse_csv("1,3\n0.3333333,1", 1e-9), ValidationError);
}

TEST(ParseCsv, MalformedInput) {
    EXPECT_THROW(parse_csv(""), ParseError);
    EXPECT_THROW(parse_csv("1,2,3\n0.5,1,1"), ParseError);          // not square
    EXPECT_THROW(parse_csv("1,2\n0.5"), ParseError);                // ragged
    EXPECT_THROW(parse_csv("1,abc\n0.5,1"), ParseError);
    EXPECT_THROW(parse_csv("1,1,000\n1,1,1\n1,1,1"), ValidationError);  // thousands separator splits a cell
    EXPECT_THROW(parse_csv("1"), ParseError);
    EXPECT_THROW(parse_csv("1,0\n0,1"), ValidationError);
}

TEST(SerializeCsv, CornerMatrix) {
    EXPECT_EQ(serialize_csv(ComparisonMatrix::corner({3, 2.0})), "1,1,2\n1,1,1\n0.5,1,1");
}

TEST(SerializeCsv, RoundTripIsExact) {
    test::Gen g(3);
    for (int c = 0; c < 200; ++c) {
        const auto n = g.order(2, 9);
        const auto m = c % 2 ? g.reciprocal(n) : ComparisonMatrix::from_weights(g.weights(n));
        ASSERT_EQ(parse_csv(serialize_csv(m)), m);
        ASSERT_EQ(matrix_from_json(to_json(m)), m);
    }
}

TEST(MatrixJson, Shape) {
    const auto j = to_json(ComparisonMatrix::corner({3, 2.0}));
    EXPECT_EQ(j.at("n"), 3);
    EXPECT_EQ(j.at("rows").size(), 3u);
    EXPECT_EQ(j.at("rows")[0][2], 2.0);
    EXPECT_THROW(matrix_from_json(nlohmann::json{{"n", 2}}), ParseError);
    EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"n":2,"rows":[[1,2],[0.4,1]]})")), ValidationError);
}
