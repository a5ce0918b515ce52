#pragma once

#include <cstdint>
#include <utility>

#include "laplace2sq/bigint.hpp"

namespace laplace2sq {

// Exact Gaussian integer re + im·i. Angles are never materialized as floats;
// everything stays in (re, im) coordinates.
struct GaussianInt {
  BigInt re;
  BigInt im;
  bool operator==(const GaussianInt&) const = default;
};

GaussianInt mul(const GaussianInt& z, const GaussianInt& w);
inline GaussianInt operator*(const GaussianInt& z, const GaussianInt& w) { return mul(z, w); }

GaussianInt conj(const GaussianInt& z);
BigInt norm(const GaussianInt& z);
GaussianInt gaussian_pow(const GaussianInt& z, std::uint32_t exp);

// The unique unit multiple of z with re > 0 and im >= 0.
// Throws std::domain_error for z = 0.
GaussianInt canonical_associate(const GaussianInt& z);

// Smallest x in (0, p) with x^2 ≡ -1 (mod p). Requires p prime ≡ 1 (mod 4);
// throws std::domain_error otherwise (no root exists).
std::uint64_t sqrt_minus_one_mod_p(std::uint64_t p);

// The unique (a, b) with 0 < a < b and a^2 + b^2 = p, by Euclidean descent
// on (p, sqrt_minus_one_mod_p(p)). Requires p prime ≡ 1 (mod 4).
std::pair<std::uint64_t, std::uint64_t> split_prime(std::uint64_t p);

}  // namespace laplace2sq
