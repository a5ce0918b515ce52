#pragma once

#include <cstdint>
#include <vector>

#include "laplace2sq/bigint.hpp"
#include "laplace2sq/errors.hpp"

namespace laplace2sq {

// Residue class of a prime modulo 4. Every prime is 2, 1 (mod 4), or 3 (mod 4);
// primes ≡ 1 (mod 4) split in Z[i], primes ≡ 3 (mod 4) are inert.
enum class PrimeClass { Two, OneMod4, ThreeMod4 };

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exp = 0;
  bool operator==(const PrimePower&) const = default;
};

// n = 2^two_exp · ∏ p_i^{m_i} · ∏ q_j^{k_j} with p_i ≡ 1 (mod 4) and
// q_j ≡ 3 (mod 4), each factor list ascending by prime. n = 1 is the empty
// factorization.
class ClassifiedFactorization {
 public:
  // Builds from explicit parts (the "hint" path for values wider than 64
  // bits); validates primality, residue classes, ordering, and exponents.
  static ClassifiedFactorization from_parts(std::uint32_t two_exp,
                                            std::vector<PrimePower> p_factors,
                                            std::vector<PrimePower> q_factors);

  const BigInt& n() const { return n_; }
  std::uint32_t two_exp() const { return two_exp_; }
  const std::vector<PrimePower>& p_factors() const { return p_factors_; }
  const std::vector<PrimePower>& q_factors() const { return q_factors_; }

  // 2^two_exp · ∏ p^m · ∏ q^k, recomputed from the parts.
  BigInt reconstruct() const;

 private:
  friend ClassifiedFactorization factorize(std::uint64_t n);

  BigInt n_ = 1;
  std::uint32_t two_exp_ = 0;
  std::vector<PrimePower> p_factors_;
  std::vector<PrimePower> q_factors_;
};

// Deterministic for the full 64-bit range (fixed Miller–Rabin witness set).
bool is_prime(std::uint64_t n);

// Throws std::domain_error when p is not prime.
PrimeClass classify_prime(std::uint64_t p);

// Trial division by small primes, then Brent-cycle Pollard rho for the
// remaining cofactors. Throws std::domain_error for n = 0 and budget_error
// (with the partial factors found) if rho stalls.
ClassifiedFactorization factorize(std::uint64_t n);

// The `count` smallest primes p >= min with p ≡ 1 (mod 4), ascending.
std::vector<std::uint64_t> primes_one_mod_four(std::size_t count, std::uint64_t min = 0);

}  // namespace laplace2sq
