#include "laplace2sq/spectrum.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "laplace2sq/oracle.hpp"

using namespace laplace2sq;

namespace {

std::vector<std::vector<std::uint64_t>> tuples_of(const MultiplicityReport& rep) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& w : rep.witnesses) {
    std::vector<std::uint64_t> t;
    for (const auto& v : w) t.push_back(v.to_uint64());
    out.push_back(std::move(t));
  }
  return out;
}

using Tuples = std::vector<std::vector<std::uint64_t>>;

}  // namespace

TEST_CASE("multiplicity_2d on intro examples") {
  const auto m5 = multiplicity_2d(5);
  CHECK(m5.multiplicity == 2);
  CHECK(tuples_of(m5) == Tuples{{1, 2}, {2, 1}});

  const auto m50 = multiplicity_2d(50);
  CHECK(m50.multiplicity == 3);
  CHECK(tuples_of(m50) == Tuples{{1, 7}, {5, 5}, {7, 1}});

  const auto m25 = multiplicity_2d(25);
  CHECK(m25.multiplicity == 2);
  CHECK(tuples_of(m25) == Tuples{{3, 4}, {4, 3}});  // (0,5) contributes nothing

  CHECK(multiplicity_2d(7).multiplicity == 0);
  CHECK(multiplicity_2d(2).multiplicity == 1);
}

TEST_CASE("multiplicity_2d cross-consistency with enumeration") {
  for (std::uint64_t lambda = 1; lambda <= 10'000; ++lambda) {
    const auto f = factorize(lambda);
    const auto rs = enumerate_reps(f);
    std::uint64_t generic = 0, diag = 0;
    for (const auto& r : rs.reps) {
      if (r.kind == RepKind::Generic) ++generic;
      if (r.kind == RepKind::Diagonal) ++diag;
    }
    const std::uint64_t expect = 2 * generic + diag;
    if (multiplicity_2d(f, 0).multiplicity != expect ||
        multiplicity_2d_count(f) != expect) {
      CAPTURE(lambda);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("parity law: odd multiplicity iff lambda/2 is a perfect square") {
  for (std::uint64_t lambda = 1; lambda <= 10'000; ++lambda) {
    const bool odd = multiplicity_2d_count(factorize(lambda)) % 2 == 1;
    const std::uint64_t h = isqrt_u64(lambda / 2);
    const bool half_square = lambda % 2 == 0 && h * h == lambda / 2;
    if (odd != half_square) {
      CAPTURE(lambda);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("multiplicity_nd examples") {
  const auto t3 = multiplicity_nd(3, 3);
  CHECK(t3.multiplicity == 1);
  CHECK(tuples_of(t3) == Tuples{{1, 1, 1}});

  const auto t6 = multiplicity_nd(6, 3);
  CHECK(t6.multiplicity == 3);
  CHECK(tuples_of(t6) == Tuples{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});

  const auto t14 = multiplicity_nd(14, 3);
  CHECK(t14.multiplicity == 6);
  CHECK(tuples_of(t14) ==
        Tuples{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});

  CHECK_THROWS_AS(multiplicity_nd(10, 1), std::domain_error);
  CHECK_THROWS_AS(multiplicity_nd(0, 3), std::domain_error);
  CHECK_THROWS_AS(multiplicity_nd(1'000'000, 8, 0, 10), budget_error);
}

TEST_CASE("count-only reports skip witness materialization") {
  const auto rep = multiplicity_nd(14, 3, 0);
  CHECK(rep.multiplicity == 6);
  CHECK_FALSE(rep.witnesses_materialized);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("multiplicity_nd at dim 2 equals multiplicity_2d") {
  for (std::uint64_t lambda = 1; lambda <= 10'000; ++lambda) {
    if (multiplicity_nd(lambda, 2, 0).multiplicity !=
        multiplicity_2d_count(factorize(lambda))) {
      CAPTURE(lambda);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("brute-force ordered pairs equal the 2d multiplicity to 10^5") {
  for (std::uint64_t lambda = 1; lambda <= 100'000; ++lambda) {
    if (brute_force_multiplicity_nd(lambda, 2) != multiplicity_2d_count(factorize(lambda))) {
      CAPTURE(lambda);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("ordered/unordered routes agree against the oracle for dim 3") {
  for (std::uint64_t lambda = 1; lambda <= 2'000; ++lambda) {
    if (multiplicity_nd(lambda, 3, 0).multiplicity != brute_force_multiplicity_nd(lambda, 3)) {
      CAPTURE(lambda);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("survey: dim 3 stays inside {3k, 3k+1}") {
  const auto survey = viable_multiplicity_survey(3, 500);
  CHECK(survey.counterexamples.empty());
  CHECK(survey.observed.count(1) == 1);

  const auto tiny = viable_multiplicity_survey(3, 3);
  CHECK(tiny.observed == std::set<std::uint64_t>{1});  // only lambda = 3
}

TEST_CASE("survey: dim 4 finds the lambda=10 counterexample") {
  const auto survey = viable_multiplicity_survey(4, 10);
  REQUIRE(!survey.counterexamples.empty());
  CHECK(survey.counterexamples[0].lambda == 10);
  CHECK(survey.counterexamples[0].multiplicity == 6);  // permutations of (1,1,2,2)
}

TEST_CASE("count-only multiplicity matches enumeration on big hinted values") {
  const auto f = ClassifiedFactorization::from_parts(1, {{5, 40}}, {});
  CHECK(multiplicity_2d_count(f) == 41);
  CHECK(multiplicity_2d(f, 0).multiplicity == 41);

  const auto even = ClassifiedFactorization::from_parts(0, {{5, 1}, {13, 29}}, {});
  CHECK(multiplicity_2d_count(f) == multiplicity_2d(f, 0).multiplicity);
  CHECK(multiplicity_2d_count(even) == 60);
}

TEST_CASE("witness materialization threshold") {
  // multiplicity 3 > limit 2: count-only
  const auto rep = multiplicity_2d(50, 2);
  CHECK(rep.multiplicity == 3);
  CHECK_FALSE(rep.witnesses_materialized);
  CHECK(rep.witnesses.empty());
}
