#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laplace2sq/bigint.hpp"
#include "laplace2sq/errors.hpp"
#include "laplace2sq/number_theory.hpp"

namespace laplace2sq {

enum class RecipeBranch { Even, Odd };

const char* to_string(RecipeBranch branch);

// A constructed eigenvalue of prescribed multiplicity:
//   Even branch: target = 2k, value = p1 · p2^{k-1}, p1 != p2 both ≡ 1 (mod 4)
//                (p2 unused when k = 1);
//   Odd branch:  target = 2k+1, value = 2 · p1^{2k}, p1 ≡ 1 (mod 4).
// The factorization is known by construction, so values never need factoring.
struct Recipe {
  std::uint64_t target = 0;
  RecipeBranch branch = RecipeBranch::Even;
  std::uint64_t k = 0;
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;  // 0 when absent (odd branch, or even with k = 1)
  BigInt value;
  ClassifiedFactorization factorization;
  bool verified = false;
};

// Smallest default prime choices (p1 = 5, p2 = 13). The returned recipe has
// its 2D multiplicity re-derived and checked, never assumed.
Recipe construct(std::uint64_t n);

// `count` recipes with pairwise distinct values, advancing the free prime
// through successive primes ≡ 1 (mod 4). For n = 1 the recipe form admits
// only the value 2, so count > 1 throws std::domain_error.
std::vector<Recipe> construct_many(std::uint64_t n, std::uint64_t count);

// Least lambda <= bound with multiplicity_2d(lambda) = n, scanning from 1.
// Bound is capped at 10^8; throws budget_error beyond min(cap, budget).
std::optional<std::uint64_t> smallest_with_multiplicity(
    std::uint64_t n, std::uint64_t bound, std::uint64_t budget = 100'000'000ull);

}  // namespace laplace2sq
