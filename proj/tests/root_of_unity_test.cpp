#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "orbideg/errors.hpp"
#include "orbideg/root_of_unity.hpp"

using namespace orbideg;

TEST_CASE("roots of unity reduce to lowest terms") {
  CHECK(RootOfUnity(2, 6) == RootOfUnity(1, 3));
  CHECK(RootOfUnity(-1, 3) == RootOfUnity(2, 3));
  CHECK(RootOfUnity(5, 5) == RootOfUnity());
  CHECK(RootOfUnity(4, 6).str() == "2/3");
  CHECK(RootOfUnity().str() == "0/1");
}

TEST_CASE("group laws hold exhaustively for orders up to 60") {
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t a = 0; a < m; ++a) {
      const RootOfUnity x(a, m);
      CHECK(x * x.inverse() == RootOfUnity());
      CHECK(x.pow(m) == RootOfUnity());
      // The order of x is m / gcd(a, m).
      const std::int64_t ord = m / std::gcd(a, m);
      CHECK(x.order() == ord);
      for (std::int64_t k = 1; k <= 4; ++k) CHECK(x.principal_root(k).pow(k) == x);
      const RootOfUnity y(1, m);
      CHECK(x * y == RootOfUnity(a + 1, m));
      CHECK(std::abs(x.angle() - 2 * std::numbers::pi * static_cast<double>(a) / m) < 1e-12);
    }
  }
}

TEST_CASE("multiplication across different orders is exact") {
  const RootOfUnity a(1, 4), b(1, 6);
  CHECK(a * b == RootOfUnity(5, 12));
  CHECK((a * b) * RootOfUnity(7, 12) == RootOfUnity());
  CHECK(RootOfUnity(3, 10).pow(-1) == RootOfUnity(7, 10));
}

TEST_CASE("roots are ordered by phase") {
  CHECK(RootOfUnity() < RootOfUnity(1, 7));
  CHECK(RootOfUnity(1, 3) < RootOfUnity(1, 2));
  CHECK(RootOfUnity(2, 3) > RootOfUnity(1, 2));
}

TEST_CASE("coordinates: zero sorts first and parsing round-trips") {
  CHECK(ExactCoordinate::zero() < ExactCoordinate::one());
  CHECK(ExactCoordinate::parse("0").is_zero());
  CHECK(ExactCoordinate::parse("3/6").unit() == RootOfUnity(1, 2));
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t a = 0; a < m; ++a) {
      const ExactCoordinate c(RootOfUnity(a, m));
      CHECK(ExactCoordinate::parse(c.str()) == c);
    }
  }
  CHECK((ExactCoordinate::zero() * RootOfUnity(1, 3)).is_zero());
}

TEST_CASE("malformed coordinates are rejected") {
  for (const char* bad : {"", "1", "1/0", "1/-3", "a/3", "1/3x", "/3", "1/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ExactCoordinate::parse(bad), Error);
  }
  try {
    ExactCoordinate::parse("x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}
