#include "laplace2sq/gaussian.hpp"

#include <stdexcept>
#include <string>

#include "laplace2sq/number_theory.hpp"

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_one_mod_four(u64 p, const char* op) {
  if (classify_prime(p) != PrimeClass::OneMod4) {
    throw std::domain_error(std::string(op) + ": " + std::to_string(p) + " is not ≡ 1 (mod 4)");
  }
}

}  // namespace

GaussianInt mul(const GaussianInt& z, const GaussianInt& w) {
  return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
}

GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }

BigInt norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

GaussianInt gaussian_pow(const GaussianInt& z, std::uint32_t exp) {
  GaussianInt result{1, 0}, base = z;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    exp >>= 1;
    if (exp) base = mul(base, base);
  }
  return result;
}

GaussianInt canonical_associate(const GaussianInt& z) {
  if (z.re.is_zero() && z.im.is_zero()) {
    throw std::domain_error("canonical_associate: zero has no canonical associate");
  }
  GaussianInt w = z;
  for (int i = 0; i < 4; ++i) {
    if (!w.re.is_negative() && !w.re.is_zero() && !w.im.is_negative()) return w;
    w = {-w.im, w.re};  // multiply by i
  }
  throw std::logic_error("canonical_associate: no associate in the canonical sector");
}

std::uint64_t sqrt_minus_one_mod_p(u64 p) {
  require_one_mod_four(p, "sqrt_minus_one_mod_p");
  // c^((p-1)/4) squares to the Legendre symbol of c; the first non-residue
  // candidate yields a root of -1. Candidates run over successive primes,
  // so the output is reproducible; normalized to the smaller of the two roots.
  for (u64 c = 2;; c = c == 2 ? 3 : c + 2) {
    if (c > 2 && !is_prime(c)) continue;
    u64 x = powmod(c, (p - 1) / 4, p);
    if (mulmod(x, x, p) == p - 1) return std::min(x, p - x);
  }
}

std::pair<u64, u64> split_prime(u64 p) {
  require_one_mod_four(p, "split_prime");
  const u64 root = sqrt_minus_one_mod_p(p);
  const u64 limit = isqrt_u64(p);
  // Euclidean descent: the first remainder below sqrt(p) and its successor
  // are the two legs.
  u64 u = p, v = root;
  while (v > limit) {
    u64 r = u % v;
    u = v;
    v = r;
  }
  u64 w = u % v;
  u64 a = std::min(v, w), b = std::max(v, w);
  if (a == 0 || a * a + b * b != p) {
    throw std::logic_error("split_prime: descent failed for " + std::to_string(p));
  }
  return {a, b};
}

}  // namespace laplace2sq
