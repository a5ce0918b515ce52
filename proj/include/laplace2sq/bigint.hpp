#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace laplace2sq {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little-endian). Division truncates toward zero; the remainder carries
// the sign of the dividend.
class BigInt {
 public:
  BigInt() = default;
  template <std::integral T>
  BigInt(T v) {
    if constexpr (std::is_signed_v<T>) {
      init_signed(static_cast<std::int64_t>(v));
    } else {
      init_unsigned(static_cast<std::uint64_t>(v));
    }
  }
  explicit BigInt(std::string_view decimal);

  static BigInt pow(const BigInt& base, std::uint64_t exp);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  bool fits_uint64() const;
  std::uint64_t to_uint64() const;  // throws std::overflow_error when too wide
  std::size_t bit_length() const;   // 0 for zero

  BigInt abs() const;
  std::string to_string() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);
  BigInt& operator%=(const BigInt& rhs);
  BigInt& operator<<=(unsigned bits);
  BigInt& operator>>=(unsigned bits);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  friend BigInt operator<<(BigInt a, unsigned bits) { return a <<= bits; }
  friend BigInt operator>>(BigInt a, unsigned bits) { return a >>= bits; }
  BigInt operator-() const;

  // quot = num / den, rem = num % den, in one pass
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

  std::strong_ordering operator<=>(const BigInt& rhs) const;
  bool operator==(const BigInt& rhs) const = default;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  using Limbs = std::vector<std::uint32_t>;

  int sign_ = 0;  // -1, 0, +1; zero iff limbs_ empty
  Limbs limbs_;

  void init_signed(std::int64_t v);
  void init_unsigned(std::uint64_t v);
  void normalize();
  static int cmp_mag(const Limbs& a, const Limbs& b);
  static Limbs add_mag(const Limbs& a, const Limbs& b);
  static Limbs sub_mag(const Limbs& a, const Limbs& b);  // requires a >= b
  static Limbs mul_mag(const Limbs& a, const Limbs& b);
  static void divmod_mag(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r);
};

// Exact floor square root; throws std::domain_error for negative input.
BigInt isqrt(const BigInt& n);

// Exact floor square root for native integers (no floating point anywhere).
std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace laplace2sq
