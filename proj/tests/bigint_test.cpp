#include "laplace2sq/bigint.hpp"

#include <cstdint>
#include <stdexcept>

#include "doctest.h"

using laplace2sq::BigInt;
using laplace2sq::isqrt;
using laplace2sq::isqrt_u64;

namespace {

// deterministic xorshift64*
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dull;
  }
};

BigInt random_wide(Rng& rng, int limbs64) {
  BigInt v(0);
  for (int i = 0; i < limbs64; ++i) v = (v << 64) + BigInt(rng.next());
  return v;
}

}  // namespace

TEST_CASE("BigInt construction and decimal round trip") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(std::uint64_t{18446744073709551615ull}).to_string() == "18446744073709551615");
  CHECK(BigInt(std::int64_t{-9223372036854775807}).to_string() == "-9223372036854775807");
  CHECK(BigInt("000123").to_string() == "123");
  CHECK(BigInt("-987654321987654321987654321").to_string() == "-987654321987654321987654321");
  CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt("12x3"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt("-"), std::invalid_argument);
}

TEST_CASE("BigInt pow against known values") {
  CHECK(BigInt::pow(BigInt(2), 200).to_string() ==
        "1606938044258990275541962092341162602522202993782792835301376");
  CHECK(BigInt::pow(BigInt(5), 40).to_string() == "9094947017729282379150390625");
  CHECK(BigInt::pow(BigInt(7), 0) == BigInt(1));
}

TEST_CASE("BigInt arithmetic matches native 64-bit behaviour") {
  Rng rng;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = static_cast<std::int64_t>(rng.next() >> 16) - (1ll << 46);
    const std::int64_t b = static_cast<std::int64_t>(rng.next() >> 16) - (1ll << 46);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    const __int128 prod = static_cast<__int128>(a) * b;
    CHECK((BigInt(a) * BigInt(b)).to_string() ==
          (BigInt(static_cast<std::int64_t>(prod >> 64)) * BigInt(std::uint64_t{1} << 32) *
               BigInt(std::uint64_t{1} << 32) +
           BigInt(static_cast<std::uint64_t>(prod)))
              .to_string());
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
    CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
  }
}

TEST_CASE("BigInt divmod reconstructs multiplication for wide operands") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const BigInt a = random_wide(rng, 1 + static_cast<int>(rng.next() % 5));
    BigInt b = random_wide(rng, 1 + static_cast<int>(rng.next() % 3));
    if (b.is_zero()) b = BigInt(7);
    const BigInt r = random_wide(rng, 1) % b;  // 0 <= r < b
    const BigInt n = a * b + r;
    BigInt q2, r2;
    BigInt::divmod(n, b, q2, r2);
    CHECK(q2 == a);
    CHECK(r2 == r);
  }
}

TEST_CASE("BigInt division add-back edge cases") {
  // quotient estimates one too large, forcing the correction branch
  const BigInt u1("39614081275578912861891592192");   // 0x80000000_fffffffe_00000000
  const BigInt v1("9223372041149743103");             // 0x80000000_ffffffff
  CHECK((u1 / v1).to_string() == "4294967295");
  CHECK((u1 % v1).to_string() == "9223372036854775807");

  const BigInt u2("39614081257132168796771975171");   // 4*v2 - 1
  const BigInt v2("9903520314283042199192993793");
  CHECK((u2 / v2) == BigInt(3));
  CHECK((u2 % v2) == v2 - BigInt(1));
}

TEST_CASE("BigInt division by zero throws") {
  CHECK_THROWS_AS(BigInt(5) / BigInt(0), std::domain_error);
  CHECK_THROWS_AS(BigInt(5) % BigInt(0), std::domain_error);
}

TEST_CASE("BigInt truncated division signs") {
  CHECK((BigInt(-7) / BigInt(2)) == BigInt(-3));
  CHECK((BigInt(-7) % BigInt(2)) == BigInt(-1));
  CHECK((BigInt(7) / BigInt(-2)) == BigInt(-3));
  CHECK((BigInt(7) % BigInt(-2)) == BigInt(1));
}

TEST_CASE("BigInt shifts") {
  CHECK((BigInt(1) << 100).to_string() == "1267650600228229401496703205376");
  CHECK(((BigInt(1) << 100) >> 100) == BigInt(1));
  CHECK((BigInt(12345) >> 64).is_zero());
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    const BigInt v = random_wide(rng, 3);
    const unsigned s = static_cast<unsigned>(rng.next() % 130);
    CHECK(((v << s) >> s) == v);
  }
}

TEST_CASE("BigInt uint64 narrowing") {
  CHECK(BigInt(42).fits_uint64());
  CHECK(BigInt(42).to_uint64() == 42);
  CHECK_FALSE(BigInt(-1).fits_uint64());
  CHECK_FALSE((BigInt(1) << 64).fits_uint64());
  CHECK_THROWS_AS((BigInt(1) << 64).to_uint64(), std::overflow_error);
}

TEST_CASE("isqrt is exact around perfect squares") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(1) == 1);
  CHECK(isqrt_u64(2) == 1);
  CHECK(isqrt_u64(3) == 1);
  CHECK(isqrt_u64(4) == 2);

  Rng rng;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t s = rng.next();  // up to 2^64 - 1
    const BigInt sq = BigInt(s) * BigInt(s);
    CHECK(isqrt(sq) == BigInt(s));
    if (s > 0) CHECK(isqrt(sq - BigInt(1)) == BigInt(s) - BigInt(1));
  }
  // wider than 128 bits
  for (int i = 0; i < 200; ++i) {
    const BigInt s = random_wide(rng, 3);
    const BigInt sq = s * s;
    CHECK(isqrt(sq) == s);
    if (!s.is_zero()) CHECK(isqrt(sq - BigInt(1)) == s - BigInt(1));
  }
  CHECK_THROWS_AS(isqrt(BigInt(-4)), std::domain_error);
}
