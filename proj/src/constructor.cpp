#include "laplace2sq/constructor.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "laplace2sq/representations.hpp"
#include "laplace2sq/spectrum.hpp"

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;

constexpr u64 kSmallestBoundCap = 100'000'000ull;
constexpr u64 kEnumerationVerifyLimit = 1'000'000;  // exponent combinations

std::uint32_t checked_exp(u64 e) {
  if (e > std::numeric_limits<std::uint32_t>::max()) {
    throw std::domain_error("construct: exponent too large");
  }
  return static_cast<std::uint32_t>(e);
}

Recipe make_recipe(u64 target, RecipeBranch branch, u64 k, u64 p1, u64 p2) {
  ClassifiedFactorization f;
  if (branch == RecipeBranch::Even) {
    std::vector<PrimePower> ps;
    ps.push_back({p1, 1});
    if (k >= 2) ps.push_back({p2, checked_exp(k - 1)});
    f = ClassifiedFactorization::from_parts(0, std::move(ps), {});
  } else {
    std::vector<PrimePower> ps;
    if (k >= 1) ps.push_back({p1, checked_exp(2 * k)});
    f = ClassifiedFactorization::from_parts(1, std::move(ps), {});
  }

  Recipe r;
  r.target = target;
  r.branch = branch;
  r.k = k;
  r.p1 = p1;
  r.p2 = k >= 2 && branch == RecipeBranch::Even ? p2 : 0;
  r.value = f.n();
  r.factorization = std::move(f);

  // re-derive the multiplicity; fall back to the counting formula when the
  // enumeration would be too wide
  const u64 combos = branch == RecipeBranch::Even ? 2 * k : 2 * k + 1;
  const u64 mult = combos <= kEnumerationVerifyLimit
                       ? multiplicity_2d(r.factorization, 0).multiplicity
                       : multiplicity_2d_count(r.factorization);
  if (mult != target) {
    throw std::logic_error("construct: built value " + r.value.to_string() +
                           " has multiplicity " + std::to_string(mult) + ", expected " +
                           std::to_string(target));
  }
  r.verified = true;
  return r;
}

}  // namespace

const char* to_string(RecipeBranch branch) {
  return branch == RecipeBranch::Even ? "EVEN" : "ODD";
}

Recipe construct(u64 n) {
  if (n == 0) throw std::domain_error("construct: target multiplicity must be positive");
  if (n % 2 == 0) {
    const u64 k = n / 2;
    return make_recipe(n, RecipeBranch::Even, k, 5, k >= 2 ? 13 : 0);
  }
  return make_recipe(n, RecipeBranch::Odd, (n - 1) / 2, 5, 0);
}

std::vector<Recipe> construct_many(u64 n, u64 count) {
  if (n == 0) throw std::domain_error("construct_many: target multiplicity must be positive");
  if (count == 0) throw std::domain_error("construct_many: count must be positive");
  if (n == 1) {
    // 2·p^0 = 2 for every p: the odd branch with k = 0 admits a single value
    if (count > 1) {
      throw std::domain_error(
          "construct_many: multiplicity 1 admits only the value 2 in recipe form");
    }
    return {construct(1)};
  }

  std::vector<Recipe> out;
  out.reserve(count);
  if (n % 2 == 0) {
    const u64 k = n / 2;
    if (k == 1) {
      for (u64 p : primes_one_mod_four(count)) {
        out.push_back(make_recipe(n, RecipeBranch::Even, k, p, 0));
      }
    } else {
      // p1 = 5 fixed, advance p2 through the remaining primes ≡ 1 (mod 4)
      auto primes = primes_one_mod_four(count + 1);
      for (std::size_t i = 1; i <= count; ++i) {
        out.push_back(make_recipe(n, RecipeBranch::Even, k, 5, primes[i]));
      }
    }
  } else {
    const u64 k = (n - 1) / 2;
    for (u64 p : primes_one_mod_four(count)) {
      out.push_back(make_recipe(n, RecipeBranch::Odd, k, p, 0));
    }
  }
  return out;
}

std::optional<u64> smallest_with_multiplicity(u64 n, u64 bound, u64 budget) {
  if (n == 0) throw std::domain_error("smallest_with_multiplicity: target must be positive");
  const u64 cap = std::min(budget, kSmallestBoundCap);
  if (bound > cap) {
    throw budget_error("smallest_with_multiplicity: bound " + std::to_string(bound) +
                       " exceeds budget " + std::to_string(cap));
  }
  for (u64 lambda = 1; lambda <= bound; ++lambda) {
    if (multiplicity_2d_count(factorize(lambda)) == n) return lambda;
  }
  return std::nullopt;
}

}  // namespace laplace2sq
