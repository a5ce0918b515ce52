#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "laplace2sq/bigint.hpp"
#include "laplace2sq/errors.hpp"
#include "laplace2sq/number_theory.hpp"
#include "laplace2sq/representations.hpp"

namespace laplace2sq {

// Above this many witness tuples, reports carry the count only.
inline constexpr std::uint64_t kDefaultWitnessLimit = 1'000'000;

struct MultiplicityReport {
  BigInt lambda;
  int dim = 2;
  std::uint64_t multiplicity = 0;
  // Ordered dim-tuples of positive integers with squared sum lambda, sorted
  // lexicographically. Empty (with materialized=false) past the limit.
  std::vector<std::vector<BigInt>> witnesses;
  bool witnesses_materialized = true;
};

// Multiplicity of lambda as an eigenvalue of the Dirichlet Laplacian on
// (0,pi)^2: the number of ordered pairs (n, m), n,m >= 1, with n^2+m^2 =
// lambda. 0 means lambda is not an eigenvalue.
MultiplicityReport multiplicity_2d(std::uint64_t lambda,
                                   std::uint64_t witness_limit = kDefaultWitnessLimit);
MultiplicityReport multiplicity_2d(const ClassifiedFactorization& f,
                                   std::uint64_t witness_limit = kDefaultWitnessLimit);

// Count-only fast path: 2·count_reps(f) − 2·[n square] − [n/2 square].
std::uint64_t multiplicity_2d_count(const ClassifiedFactorization& f);

// d-dimensional analogue: ordered d-tuples of positive integers with squared
// sum lambda. Each unordered pattern with repetition profile (d_1..d_m)
// contributes d!/∏(d_i!). Requires 2 <= dim <= 20; throws budget_error when
// the pattern scan would exceed `budget` steps.
MultiplicityReport multiplicity_nd(std::uint64_t lambda, int dim,
                                   std::uint64_t witness_limit = kDefaultWitnessLimit,
                                   std::uint64_t budget = 1'000'000'000'000ull);

struct SurveyCounterexample {
  std::uint64_t lambda = 0;
  std::uint64_t multiplicity = 0;
  bool operator==(const SurveyCounterexample&) const = default;
};

// Empirical scan of which multiplicities occur in dimension dim up to
// `bound`, and which lambdas fall outside {dim·k, dim·k + 1}. Reports, never
// asserts: counterexamples are data, not failures.
struct SurveyReport {
  int dim = 0;
  std::uint64_t bound = 0;
  std::set<std::uint64_t> observed;  // multiplicities of eigenvalues (> 0)
  std::vector<SurveyCounterexample> counterexamples;
};

SurveyReport viable_multiplicity_survey(int dim, std::uint64_t bound,
                                        std::uint64_t budget = 1'000'000'000'000ull);

}  // namespace laplace2sq
