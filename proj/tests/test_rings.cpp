#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <spinmcg/ring.hpp>

using namespace spinmcg;

TEST_CASE("canonical representatives") {
  CoeffRing r4(4), z(0);
  CHECK(r4.canon(7) == 3);
  CHECK(r4.canon(-1) == 3);
  CHECK(z.canon(-1) == -1);
  for (std::int64_t x = -20; x <= 20; ++x) {
    CHECK(r4.canon(r4.canon(x)) == r4.canon(x));
    CHECK(r4.canon(x) >= 0);
    CHECK(r4.canon(x) < 4);
  }
}

TEST_CASE("gcd_canon against plain Euclid") {
  CHECK(gcd_canon(2, 6, CoeffRing(8)) == 2);
  CHECK(gcd_canon(2, 6, CoeffRing(8)) == std::gcd(std::gcd(2, 6), 8));
  CHECK(gcd_canon(0, 0, CoeffRing(6)) == 0);  // divisor 6, canonical representative 0
  CHECK(gcd_divisor(0, 0, CoeffRing(6)) == 6);
  CHECK(gcd_canon(3, 5, CoeffRing(0)) == 1);
  CHECK(gcd_canon(0, 0, CoeffRing(0)) == 0);
}

TEST_CASE("gcd_canon is symmetric and invariant under row moves") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 12);
    CoeffRing R(r);
    const std::int64_t a = static_cast<std::int64_t>(rng() % r);
    const std::int64_t b = static_cast<std::int64_t>(rng() % r);
    CHECK(gcd_canon(a, b, R) == gcd_canon(b, a, R));
    const std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(gcd_canon(R.canon(a + k * b), b, R) == gcd_canon(a, b, R));
    CHECK(gcd_canon(a, R.canon(b - k * a), R) == gcd_canon(a, b, R));
  }
}

TEST_CASE("extended gcd solves the Bezout identity") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t b = static_cast<std::int64_t>(rng() % 1000);
    std::int64_t x = 0, y = 0;
    const std::int64_t g = ext_gcd(a, b, x, y);
    CHECK(g == std::gcd(a, b));
    CHECK(a * x + b * y == g);
  }
}

TEST_CASE("negative modulus is rejected") {
  CHECK_THROWS_AS(CoeffRing(-2), std::invalid_argument);
}
