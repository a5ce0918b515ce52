#include "laplace2sq/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSmallPrimeLimit = 1'000'000;

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

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSmallPrimeLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 p = 2; p <= kSmallPrimeLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(static_cast<std::uint32_t>(p));
      for (u64 m = p * p; m <= kSmallPrimeLimit; m += p) composite[m] = true;
    }
    return out;
  }();
  return primes;
}

// Brent-cycle rho with deterministic parameters; 0 on stall.
u64 brent_rho(u64 n, u64 c, u64 max_iters) {
  u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  const u64 block = 128;
  u64 iters = 0;
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    for (u64 k = 0; k < r && g == 1; k += block) {
      ys = y;
      const u64 lim = std::min(block, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = (mulmod(y, y, n) + c) % n;
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      iters += lim;
      if (iters > max_iters) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (mulmod(ys, ys, n) + c) % n;
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

// n odd, composite, with no prime factor <= kSmallPrimeLimit.
u64 find_factor(u64 n) {
  for (u64 c = 1; c < 64; ++c) {
    if (u64 g = brent_rho(n, c, u64{1} << 26)) return g;
  }
  return 0;
}

void factor_into(u64 n, std::map<u64, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 g = find_factor(n);
  if (g == 0 || g == 1 || g == n) {
    std::string partial;
    for (const auto& [p, e] : out) {
      partial += " " + std::to_string(p) + "^" + std::to_string(e);
    }
    throw budget_error("factorize: rho budget exceeded on cofactor " + std::to_string(n) +
                       "; partial factors:" + partial);
  }
  factor_into(g, out);
  factor_into(n / g, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for all 64-bit inputs
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeClass classify_prime(u64 p) {
  if (!is_prime(p)) {
    throw std::domain_error("classify_prime: " + std::to_string(p) + " is not prime");
  }
  if (p == 2) return PrimeClass::Two;
  return p % 4 == 1 ? PrimeClass::OneMod4 : PrimeClass::ThreeMod4;
}

ClassifiedFactorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  ClassifiedFactorization f;
  f.n_ = BigInt(n);
  u64 rest = n;
  while ((rest & 1) == 0) {
    ++f.two_exp_;
    rest >>= 1;
  }
  for (std::uint32_t p : small_primes()) {
    if (p == 2) continue;
    if (static_cast<u64>(p) * p > rest) break;
    if (rest % p) continue;
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    auto& side = (p % 4 == 1) ? f.p_factors_ : f.q_factors_;
    side.push_back({p, e});
  }
  if (rest > 1) {
    if (is_prime(rest)) {
      auto& side = (rest % 4 == 1) ? f.p_factors_ : f.q_factors_;
      side.push_back({rest, 1});
    } else {
      std::map<u64, std::uint32_t> found;
      factor_into(rest, found);
      for (const auto& [p, e] : found) {
        auto& side = (p % 4 == 1) ? f.p_factors_ : f.q_factors_;
        side.push_back({p, e});
      }
      auto by_prime = [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; };
      std::sort(f.p_factors_.begin(), f.p_factors_.end(), by_prime);
      std::sort(f.q_factors_.begin(), f.q_factors_.end(), by_prime);
    }
  }
  return f;
}

ClassifiedFactorization ClassifiedFactorization::from_parts(std::uint32_t two_exp,
                                                            std::vector<PrimePower> p_factors,
                                                            std::vector<PrimePower> q_factors) {
  auto check = [](const std::vector<PrimePower>& side, PrimeClass want) {
    u64 prev = 0;
    for (const auto& [p, e] : side) {
      if (e == 0) throw std::domain_error("from_parts: zero exponent for " + std::to_string(p));
      if (p <= prev) throw std::domain_error("from_parts: primes must be strictly increasing");
      if (classify_prime(p) != want) {
        throw std::domain_error("from_parts: " + std::to_string(p) + " is in the wrong residue class");
      }
      prev = p;
    }
  };
  check(p_factors, PrimeClass::OneMod4);
  check(q_factors, PrimeClass::ThreeMod4);

  ClassifiedFactorization f;
  f.two_exp_ = two_exp;
  f.p_factors_ = std::move(p_factors);
  f.q_factors_ = std::move(q_factors);
  f.n_ = f.reconstruct();
  return f;
}

BigInt ClassifiedFactorization::reconstruct() const {
  BigInt n = BigInt(1) << two_exp_;
  for (const auto& [p, e] : p_factors_) n *= BigInt::pow(BigInt(p), e);
  for (const auto& [q, e] : q_factors_) n *= BigInt::pow(BigInt(q), e);
  return n;
}

std::vector<u64> primes_one_mod_four(std::size_t count, u64 min) {
  std::vector<u64> out;
  out.reserve(count);
  u64 c = std::max<u64>(min, 5);
  c += (1 + 4 - c % 4) % 4;  // next candidate ≡ 1 (mod 4)
  while (out.size() < count) {
    if (is_prime(c)) out.push_back(c);
    c += 4;
  }
  return out;
}

}  // namespace laplace2sq
