#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "splitcone/io.hpp"

using namespace splitcone;

TEST_CASE("rational printing and parsing")
{
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
    CHECK(rat_from_string("5") == 5);
    CHECK(rat_from_string("10/4") == Rat(5, 2));
    CHECK(rat_from_string("2.5") == Rat(5, 2));
    CHECK(rat_from_string("-0.125") == Rat(-1, 8));
    CHECK_THROWS(rat_from_string("abc"));
    CHECK_THROWS(rat_from_string("1/0"));
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 9; ++den) {
            Rat r(num, den);
            r.canonicalize();
            CHECK(rat_from_string(rat_to_string(r)) == r);
        }
}

TEST_CASE("CSV matrix: full form")
{
    auto d = matrix_from_csv("0,5,15\n5,0,16\n15,16,0\n");
    CHECK(d.n == 3);
    CHECK(d.at(1, 2) == 5);
    CHECK(d.at(1, 3) == 15);
    CHECK(d.at(2, 3) == 16);
}

TEST_CASE("CSV matrix: triangular forms and headers")
{
    auto upper = matrix_from_csv("5,15,12,17\n16,13,18\n11,16\n7\n");
    CHECK(upper == fixtures::distexample());
    auto with_diag = matrix_from_csv("0,5,15\n0,16\n0\n");
    CHECK(with_diag.at(1, 3) == 15);
    auto headered = matrix_from_csv("a,b,c\n0,1,2\n1,0,3\n2,3,0\n");
    CHECK(headered.at(2, 3) == 3);
}

TEST_CASE("CSV matrix: diagnostics carry line numbers")
{
    auto expect_msg = [](const std::string& text, const std::string& frag) {
        try {
            matrix_from_csv(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(frag) != std::string::npos);
        }
    };
    expect_msg("0,1\n2,0\n", "asymmetric at row 2");
    expect_msg("0,1,2\n1,0,3\n2,3,1\n", "nonzero diagonal at row 3");
    expect_msg("0,x\nx,0\n", "row 1");
    expect_msg("0,1,2\n1,0\n", "row 1 has 3 cells");
    expect_msg("0,-1\n-1,0\n", "negative entry at row 1");
    CHECK_THROWS_AS(matrix_from_csv(""), ParseError);
}

TEST_CASE("JSON matrix parsing")
{
    auto d = matrix_from_json(R"({"n":3,"delta":{"1,2":"5/2","1,3":4,"2,3":{"num":6,"den":4}}})");
    CHECK(d.at(1, 2) == Rat(5, 2));
    CHECK(d.at(1, 3) == 4);
    CHECK(d.at(2, 3) == Rat(3, 2));
    CHECK_THROWS_AS(matrix_from_json("{}"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"n":3,"delta":{"0,1":1}})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("not json"), ParseError);
}

TEST_CASE("JSON system parsing: interval and set forms")
{
    auto s1 = system_from_json(R"({"n":5,"splits":[[1,2],[2,5],[1,1]]})");
    CHECK(s1.n == 5);
    CHECK(s1.contains(Split{2, 5}));
    auto s2 = system_from_json(
        R"({"n":3,"splits_sets":[[[1,2],[0,3]],[[3],[0,1,2]]]})");
    CHECK(s2.contains(Split{1, 2}));
    CHECK(s2.contains(Split{3, 3}));
    CHECK_THROWS_AS(system_from_json(R"({"n":3,"splits":[[1,3]]})"), ParseError);
    CHECK_THROWS_AS(
        system_from_json(R"({"n":3,"splits_sets":[[[1,3],[0,2]]]})"),
        ParseError); // not an interval
    CHECK_THROWS_AS(system_from_json(R"({"n":3})"), ParseError);
}

TEST_CASE("JSON CRY parsing")
{
    auto x = cry_from_json(
        R"({"n":2,"x":[["1/2","1/2"],["1/2","1/2"]]})");
    CHECK(x.at(1, 1) == Rat(1, 2));
    CHECK_THROWS_AS(cry_from_json(R"({"n":2,"x":[["1"]]})"), ParseError);
}

TEST_CASE("data files round-trip through the loaders")
{
    const std::string dir = SPLITCONE_DATA_DIR;
    CHECK(load_matrix(dir + "/distexample.csv") == fixtures::distexample());
    CHECK(load_matrix(dir + "/netdistex.csv") == fixtures::netdistex());
    CHECK(load_matrix(dir + "/disim.csv") == fixtures::disim());
    CHECK(load_matrix(dir + "/disim.json") == fixtures::disim());
    CHECK(load_system(dir + "/dualpolygonex.json").splits ==
          fixtures::dualpolygonex().splits);
    CHECK(load_system(dir + "/treeex.json").splits == fixtures::treeex().splits);
    CHECK_THROWS_AS(load_matrix(dir + "/no_such_file.csv"), ParseError);
}
