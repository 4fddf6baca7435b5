#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/io.hpp"
#include "helpers.hpp"

using namespace bicol;
using namespace testing;

TEST_CASE("lattice files") {
  Lattice a1 = parseLatticeFile(R"({"gram": [[2]]})");
  CHECK(a1.rank() == 1);
  CHECK(a1.disc() == 2);
  CHECK(parseLatticeFile(R"({"name": "A2", "gram": [[2, -1], [-1, 2]]})").disc() == 3);
  CHECK(errorOf([] { parseLatticeFile(R"({"gram": [[2, 1], [0, 2]]})"); }) == Errc::NotSymmetric);
  CHECK(errorOf([] { parseLatticeFile(R"({"gram": [[2]], "extra": 1})"); }) == Errc::ParseError);
  CHECK(errorOf([] { parseLatticeFile(R"({"gram": [[2]])"); }) == Errc::ParseError);
  CHECK(errorOf([] { parseLatticeFile(R"({"gram": [["x"]]})"); }) == Errc::ParseError);
  CHECK(errorOf([] { parseLatticeFile("[]"); }) == Errc::ParseError);
}

TEST_CASE("span files") {
  LatticeSpan s = parseSpanFile(R"({"gamma": [[72]], "white": [[18]], "black": [[8]],
                                    "embedW": [[2]], "embedB": [[3]]})");
  CHECK(s.derived().level == builtinSpan("rank1-72").derived().level);
  CHECK(s.derived().dualModSum.invariantFactors() == builtinSpan("rank1-72").derived().dualModSum.invariantFactors());
  CHECK(errorOf([] {
          parseSpanFile(R"({"gamma": [[72]], "white": [[18]], "black": [[8]], "embedW": [[1]], "embedB": [[3]]})");
        }) == Errc::NotIsometry);
  CHECK(errorOf([] { parseSpanFile(R"({"gamma": [[72]]})"); }) == Errc::ParseError);
}

TEST_CASE("loop files and serialization") {
  LoopFile f = parseLoopFile(R"({"breakpoints": [0, "1/2", 1], "values": [[0], ["1/3"], [1]]})");
  CHECK(f.lift.at(q(1, 2)) == rv({q(1, 3)}));
  CHECK(!f.mq);
  CHECK(errorOf([] { parseLoopFile(R"({"breakpoints": [0, 1], "values": [[0]]})"); }) == Errc::ParseError);
  CHECK(toJson(q(-3, 4)).dump() == toJson(ratFromJson(toJson(q(-3, 4)), "x")).dump());
  CHECK(ratFromJson(toJson(q(-3, 4)), "x") == q(-3, 4));
  CHECK(errorOf([] { readFile("/nonexistent/file.json"); }) == Errc::ParseError);
}
