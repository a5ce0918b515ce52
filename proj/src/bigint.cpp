#include "laplace2sq/bigint.hpp"

#include <bit>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace laplace2sq {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
constexpr std::uint32_t kDecChunk = 1'000'000'000u;  // 10^9 fits a limb
}  // namespace

void BigInt::init_signed(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB negating INT64_MIN
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  limbs_.push_back(static_cast<std::uint32_t>(mag));
  if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::init_unsigned(std::uint64_t v) {
  if (v == 0) return;
  sign_ = 1;
  limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

BigInt::BigInt(std::string_view s) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
  for (; i < s.size();) {
    // consume up to 9 digits at a time
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    std::size_t j = i;
    for (; j < s.size() && j < i + 9; ++j) {
      char c = s[j];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid decimal digit");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    i = j;
    // *this = *this * scale + chunk
    std::uint64_t carry = chunk;
    for (auto& limb : limbs_) {
      std::uint64_t t = static_cast<std::uint64_t>(limb) * scale + carry;
      limb = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }
  sign_ = limbs_.empty() ? 0 : (neg ? -1 : 1);
  normalize();
}

void BigInt::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

BigInt::Limbs BigInt::add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() < b.size() ? a : b;
  const Limbs& hi = a.size() < b.size() ? b : a;
  Limbs out(hi.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t t = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<std::uint32_t>(t);
    carry = t >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigInt::Limbs BigInt::sub_mag(const Limbs& a, const Limbs& b) {
  Limbs out(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (t < 0) {
      t += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(t);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt::Limbs BigInt::mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = ai * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    out[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r) {
  if (v.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(u, v) < 0) {
    q.clear();
    r = u;
    return;
  }
  const std::size_t n = v.size();
  const std::size_t m = u.size();
  if (n == 1) {
    const std::uint32_t d = v[0];
    q.assign(m, 0);
    std::uint64_t rem = 0;
    for (std::size_t i = m; i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  const int s = std::countl_zero(v.back());
  Limbs vn(n), un(m + 1, 0);
  if (s == 0) {
    vn = v;
    for (std::size_t i = 0; i < m; ++i) un[i] = u[i];
  } else {
    for (std::size_t i = n; i-- > 1;) vn[i] = (v[i] << s) | (v[i - 1] >> (32 - s));
    vn[0] = v[0] << s;
    un[m] = u[m - 1] >> (32 - s);
    for (std::size_t i = m; i-- > 1;) un[i] = (u[i] << s) | (u[i - 1] >> (32 - s));
    un[0] = u[0] << s;
  }

  q.assign(m - n + 1, 0);
  for (std::size_t j = m - n + 1; j-- > 0;) {
    const std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }

    // multiply and subtract
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                       static_cast<std::int64_t>(p & 0xffffffffull);
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t top = static_cast<std::int64_t>(un[j + n]) - borrow -
                       static_cast<std::int64_t>(carry);
    if (top < 0) {
      // qhat was one too large; add v back
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<std::uint32_t>(t);
        c2 = t >> 32;
      }
      top += static_cast<std::int64_t>(c2);
    }
    un[j + n] = static_cast<std::uint32_t>(top);
    q[j] = static_cast<std::uint32_t>(qhat);
  }

  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  if (s == 0) {
    for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) r[i] = (un[i] >> s) | (un[i + 1] << (32 - s));
    r[n - 1] = un[n - 1] >> s;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (sign_ == rhs.sign_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
  } else {
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
      sign_ = 0;
      limbs_.clear();
    } else if (c > 0) {
      limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_mag(rhs.limbs_, limbs_);
      sign_ = rhs.sign_;
    }
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  sign_ *= rhs.sign_;
  limbs_ = mul_mag(limbs_, rhs.limbs_);
  if (limbs_.empty()) sign_ = 0;
  return *this;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  Limbs q, r;
  divmod_mag(num.limbs_, den.limbs_, q, r);
  quot.limbs_ = std::move(q);
  rem.limbs_ = std::move(r);
  quot.sign_ = quot.limbs_.empty() ? 0 : num.sign_ * den.sign_;
  rem.sign_ = rem.limbs_.empty() ? 0 : num.sign_;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(r);
}

BigInt& BigInt::operator<<=(unsigned bits) {
  if (sign_ == 0 || bits == 0) return *this;
  const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0u);
  if (bit_shift) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

BigInt& BigInt::operator>>=(unsigned bits) {
  if (sign_ == 0 || bits == 0) return *this;
  const unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  if (bit_shift) {
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
      limbs_[i] = (limbs_[i] >> bit_shift) | (limbs_[i + 1] << (32 - bit_shift));
    }
    limbs_.back() >>= bit_shift;
  }
  normalize();
  return *this;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int c = cmp_mag(limbs_, rhs.limbs_) * sign_;
  return c <=> 0;
}

bool BigInt::fits_uint64() const {
  return sign_ >= 0 && limbs_.size() <= 2;
}

std::uint64_t BigInt::to_uint64() const {
  if (!fits_uint64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return limbs_.size() * 32 - static_cast<std::size_t>(std::countl_zero(limbs_.back()));
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t exp) {
  BigInt result(1), b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Limbs work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / kDecChunk);
      rem = cur % kDecChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.to_string();
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  const int c = std::countl_zero(n);
  // x starts >= sqrt(n); Newton steps descend to the floor
  std::uint64_t x = std::uint64_t{1} << ((64 + 1 - c) / 2);
  for (;;) {
    std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

BigInt isqrt(const BigInt& n) {
  if (n.is_negative()) throw std::domain_error("isqrt: negative input");
  if (n.fits_uint64()) return BigInt(isqrt_u64(n.to_uint64()));
  BigInt x = BigInt(1) << static_cast<unsigned>((n.bit_length() + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

}  // namespace laplace2sq
