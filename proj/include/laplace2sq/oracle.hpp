#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laplace2sq/bigint.hpp"
#include "laplace2sq/errors.hpp"
#include "laplace2sq/representations.hpp"

namespace laplace2sq {

// Brute-force ground truth. Deliberately obvious, never shares code with the
// Gaussian enumeration path it cross-checks.

inline constexpr std::uint64_t kDefaultScanBudget = 1'000'000'000'000ull;  // max n

// All (a, b), 0 <= a <= b, a^2 + b^2 = n, by scanning a in [0, isqrt(n/2)]
// and testing n - a^2 for squareness with the exact integer square root.
RepSet brute_force_reps(std::uint64_t n, std::uint64_t budget = kDefaultScanBudget);

// Ordered d-tuples of positive integers with squared sum n, by recursive scan
// over the first coordinate.
std::uint64_t brute_force_multiplicity_nd(std::uint64_t n, int dim,
                                          std::uint64_t budget = kDefaultScanBudget);

// r2(n) = 4·(d1(n) − d3(n)) where d1/d3 count divisors ≡ 1/3 (mod 4); the
// classical signed ordered representation count. Ties to the set count by
//   |reps(n)| = (r2(n) + 4·[n square] + 4·[n/2 square]) / 8.
std::uint64_t divisor_count_check(std::uint64_t n, std::uint64_t budget = 100'000'000ull);

// Fixture file format: one record per line, "N a b kind", sorted by (N, a).
std::string repset_fixture_lines(const RepSet& rs);

struct SweepMismatch {
  std::uint64_t lambda = 0;
  std::string detail;
};

struct SweepResult {
  std::uint64_t checked = 0;
  std::vector<SweepMismatch> mismatches;  // ascending by lambda
};

// For every lambda in [1, max]: enumerate_reps must equal brute_force_reps as
// a set, count_reps must equal the set size, kind bookkeeping must match the
// square/half-square predicates, and the 2D multiplicity formula must agree
// with the enumeration-derived count. Deterministic result for any `jobs`.
SweepResult verify_sweep_2d(std::uint64_t max, unsigned jobs = 1,
                            std::uint64_t budget = kDefaultScanBudget);

// For every lambda in [1, max]: multiplicity_nd (pattern/multinomial route)
// must equal brute_force_multiplicity_nd (ordered recursive route).
SweepResult verify_sweep_nd(std::uint64_t max, int dim, unsigned jobs = 1,
                            std::uint64_t budget = kDefaultScanBudget);

}  // namespace laplace2sq
