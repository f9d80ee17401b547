#include <doctest.h>

#include "tb/notation.hpp"

using namespace tb;

TEST_SUITE("cli") {

TEST_CASE("colon-pair block syntax") {
  ThetaQuotient tq = parse_block("eta:-6 1:3 2:3 3:2 4:1 5:1");
  CHECK(tq == ThetaQuotient::pure({1, 1, 1, 2, 2, 2, 3, 3, 4, 5}, -6));
  BlockMeta m = meta(tq);
  CHECK(m.weight == 2);
  CHECK(m.index == 37);
  CHECK(m.character == 0);
  // repeated keys accumulate; fractional eta powers parse
  CHECK(parse_block("1:1 1:2 eta:1/2 eta:1") ==
        ThetaQuotient::theta(1, 3) * ThetaQuotient::eta(Q(3, 2)));
}

TEST_CASE("comma-list syntax divides by the eta power") {
  CHECK(parse_block("1,1,2/eta:1") == ThetaQuotient::pure({1, 1, 2}, -1));
  CHECK(parse_block("1,2,3,4,5/eta:6") == ThetaQuotient::pure({1, 2, 3, 4, 5}, -6));
  CHECK(parse_block("2") == ThetaQuotient::theta(2));
  CHECK(parse_block(" 1, 2 , 3 ") == ThetaQuotient::pure({1, 2, 3}, 0));
}

TEST_CASE("bracket shorthand in both spellings") {
  ThetaQuotient want = ThetaQuotient::pure({1, 1, 1, 2, 2, 2, 3, 3, 4, 5}, -6);
  CHECK(parse_block("ϑ[-6; 1^3,2^3,3^2,4,5]") == want);
  CHECK(parse_block("theta[-6; 1^3,2^3,3^2,4,5]") == want);
  CHECK(parse_block("theta[3/2;]") == ThetaQuotient::eta(Q(3, 2)));
  CHECK(parse_block("theta[0; 2^-2, 1^4]") ==
        ThetaQuotient::theta(1, 4) * ThetaQuotient::theta(2, -2));
}

TEST_CASE("printers round-trip") {
  for (const char* text :
       {"eta:-6 1:3 2:3 3:2 4:1 5:1", "1,1,2/eta:1", "theta[7/2; 2^5,9^-1]", "eta:1/12"}) {
    ThetaQuotient tq = parse_block(text);
    CHECK(parse_block(format_block(tq)) == tq);
    CHECK(parse_block(shorthand(tq)) == tq);
  }
  CHECK(format_block(ThetaQuotient::pure({1, 1, 2}, -1)) == "eta:-1 1:2 2:1");
  CHECK(shorthand(ThetaQuotient::pure({1, 1, 2}, -1)) == "ϑ[-1; 1^2,2]");
}

TEST_CASE("malformed block descriptions are rejected") {
  CHECK_THROWS_AS(parse_block(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("eta:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("0:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("1:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("theta[1; 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("1,2/foo:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_block("1 2 3"), std::invalid_argument);
}

}  // TEST_SUITE
