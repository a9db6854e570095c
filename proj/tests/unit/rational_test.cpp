#include <doctest.h>

#include "cf/errors.hpp"
#include "cf/rational.hpp"

using namespace cf;

TEST_CASE("[TRIVIAL] bigint parse and print round-trip") {
  CHECK(to_string(parse_bigint("0")) == "0");
  CHECK(to_string(parse_bigint("-17")) == "-17");
  CHECK(to_string(parse_bigint("6815066950786963680000000")) == "6815066950786963680000000");
  CHECK_THROWS_AS((void)parse_bigint(""), Error);
  CHECK_THROWS_AS((void)parse_bigint("12a"), Error);
  CHECK_THROWS_AS((void)parse_bigint("1/2"), Error);
}

TEST_CASE("[TRIVIAL] rational parse normalizes") {
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(to_string(parse_rational("4/-6")) == "-2/3");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("14/7")) == "2");
  CHECK_THROWS_AS((void)parse_rational("1/0"), Error);
  CHECK_THROWS_AS((void)parse_rational("x"), Error);
}

TEST_CASE("[TRIVIAL] integer powers") {
  CHECK(pow(BigInt(3), 0) == 1);
  CHECK(pow(BigInt(3), 5) == 243);
  CHECK(pow(BigInt(-2), 3) == -8);
  CHECK(to_string(pow(BigInt(12), 13)) == "106993205379072");
  CHECK(to_string(pow(Rational(1, 2), 10)) == "1/1024");
}
