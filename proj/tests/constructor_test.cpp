#include "laplace2sq/constructor.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "laplace2sq/representations.hpp"
#include "laplace2sq/spectrum.hpp"

using namespace laplace2sq;

TEST_CASE("construct default recipes") {
  const auto r3 = construct(3);
  CHECK(r3.branch == RecipeBranch::Odd);
  CHECK(r3.p1 == 5);
  CHECK(r3.k == 1);
  CHECK(r3.value == BigInt(50));
  CHECK(r3.verified);

  const auto r5 = construct(5);
  CHECK(r5.branch == RecipeBranch::Odd);
  CHECK(r5.k == 2);
  CHECK(r5.value == BigInt(1250));

  const auto r1 = construct(1);
  CHECK(r1.branch == RecipeBranch::Odd);
  CHECK(r1.k == 0);
  CHECK(r1.value == BigInt(2));

  const auto r4 = construct(4);
  CHECK(r4.branch == RecipeBranch::Even);
  CHECK(r4.p1 == 5);
  CHECK(r4.p2 == 13);
  CHECK(r4.k == 2);
  CHECK(r4.value == BigInt(65));

  const auto r2 = construct(2);
  CHECK(r2.branch == RecipeBranch::Even);
  CHECK(r2.k == 1);
  CHECK(r2.p2 == 0);
  CHECK(r2.value == BigInt(5));

  CHECK_THROWS_AS(construct(0), std::domain_error);
}

TEST_CASE("round trip at moderate targets, including one big value") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    const auto recipe = construct(n);
    if (multiplicity_2d(recipe.factorization, 0).multiplicity != n) {
      CAPTURE(n);
      REQUIRE(false);
    }
  }
  const auto big = construct(41);  // 2 * 5^40, far beyond 64 bits
  CHECK_FALSE(big.value.fits_uint64());
  CHECK(big.value.to_string() == "18189894035458564758300781250");
  CHECK(multiplicity_2d(big.factorization, 0).multiplicity == 41);
}

TEST_CASE("construct_many advances the free prime") {
  const auto even1 = construct_many(2, 3);
  REQUIRE(even1.size() == 3);
  CHECK(even1[0].value == BigInt(5));
  CHECK(even1[1].value == BigInt(13));
  CHECK(even1[2].value == BigInt(17));

  const auto odd = construct_many(3, 2);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].value == BigInt(50));
  CHECK(odd[1].value == BigInt(338));  // 2 * 13^2

  const auto one = construct_many(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == BigInt(2));
  // the odd branch with k = 0 admits no second distinct value
  CHECK_THROWS_AS(construct_many(1, 2), std::domain_error);
}

TEST_CASE("construct_many yields strictly increasing verified values") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const auto recipes = construct_many(n, 5);
    REQUIRE(recipes.size() == 5);
    for (std::size_t i = 0; i < recipes.size(); ++i) {
      CHECK(recipes[i].verified);
      CHECK(recipes[i].target == n);
      if (i > 0) CHECK(recipes[i - 1].value < recipes[i].value);
      if (recipes[i].branch == RecipeBranch::Even && recipes[i].k >= 2) {
        CHECK(recipes[i].p1 != recipes[i].p2);
      }
    }
  }
}

TEST_CASE("recipes match the even/odd representation-count mapping") {
  for (std::uint64_t n = 2; n <= 20; n += 2) {
    const auto r = construct(n);
    const auto rs = enumerate_reps(r.factorization);
    CHECK(count_reps(r.factorization) == n / 2);
    for (const auto& rep : rs.reps) CHECK(rep.kind == RepKind::Generic);
  }
  for (std::uint64_t n = 1; n <= 19; n += 2) {
    const auto r = construct(n);
    const auto rs = enumerate_reps(r.factorization);
    CHECK(count_reps(r.factorization) == (n + 1) / 2);
    std::uint64_t diag = 0;
    const BigInt pk = BigInt::pow(BigInt(r.p1), r.k);
    for (const auto& rep : rs.reps) {
      CHECK(rep.kind != RepKind::Zero);
      if (rep.kind == RepKind::Diagonal) {
        ++diag;
        CHECK(rep.a == pk);  // the diagonal is (p^k, p^k)
      }
    }
    CHECK(diag == 1);
  }
  // generalized prime: 2 * 13^2 has diagonal (13, 13)
  const auto alt = construct_many(3, 2)[1];
  const auto rs = enumerate_reps(alt.factorization);
  bool found = false;
  for (const auto& rep : rs.reps) {
    if (rep.kind == RepKind::Diagonal) {
      found = true;
      CHECK(rep.a == BigInt(13));
    }
  }
  CHECK(found);
}

TEST_CASE("taking p1 = p2 would break the even count") {
  // 5 * 5^2 = 5^3 has ceil(4/2) = 2 representations, not k = 3
  CHECK(count_reps(factorize(125)) == 2);
  CHECK(multiplicity_2d(125).multiplicity == 4);  // not 6 = 2k
}

TEST_CASE("smallest_with_multiplicity") {
  CHECK(smallest_with_multiplicity(1, 100) == 2);
  CHECK(smallest_with_multiplicity(4, 100) == 65);
  CHECK(smallest_with_multiplicity(7, 10) == std::nullopt);
  CHECK(smallest_with_multiplicity(3, 100) == 50);
  CHECK_THROWS_AS(smallest_with_multiplicity(0, 100), std::domain_error);
  CHECK_THROWS_AS(smallest_with_multiplicity(1, 200'000'000), budget_error);
  CHECK_THROWS_AS(smallest_with_multiplicity(1, 100, 50), budget_error);
}
