#include "laplace2sq/representations.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "laplace2sq/gaussian.hpp"

namespace laplace2sq {

const char* to_string(RepKind kind) {
  switch (kind) {
    case RepKind::Zero: return "zero";
    case RepKind::Diagonal: return "diagonal";
    case RepKind::Generic: return "generic";
  }
  return "?";
}

Representation make_representation(BigInt a, BigInt b) {
  if (a.is_negative() || a > b || b.is_zero()) {
    throw std::domain_error("make_representation: need 0 <= a <= b with b > 0");
  }
  RepKind kind = a.is_zero() ? RepKind::Zero : (a == b ? RepKind::Diagonal : RepKind::Generic);
  return {std::move(a), std::move(b), kind};
}

std::uint64_t count_reps(const ClassifiedFactorization& f) {
  for (const auto& qf : f.q_factors()) {
    if (qf.exp & 1) return 0;
  }
  std::uint64_t combos = 1;
  for (const auto& pf : f.p_factors()) combos *= pf.exp + 1;
  return (combos + 1) / 2;
}

namespace {

struct EnumState {
  const std::vector<std::vector<GaussianInt>>& tables;
  const BigInt& scale;
  std::set<std::pair<BigInt, BigInt>>& seen;
};

// Walks exponent vectors t, pruning those lexicographically below their
// complement (m - t); the complement produces the conjugate pair, which
// collapses to the same (|re|, |im|).
void walk(const EnumState& st, std::size_t level, int cmp_to_complement, const GaussianInt& acc) {
  if (level == st.tables.size()) {
    BigInt x = acc.re.abs() * st.scale;
    BigInt y = acc.im.abs() * st.scale;
    if (x > y) std::swap(x, y);
    st.seen.insert({std::move(x), std::move(y)});
    return;
  }
  const auto& mix = st.tables[level];
  const std::uint32_t m = static_cast<std::uint32_t>(mix.size() - 1);
  for (std::uint32_t t = 0; t <= m; ++t) {
    int cmp = cmp_to_complement;
    if (cmp == 0) cmp = t > m - t ? 1 : (t < m - t ? -1 : 0);
    if (cmp < 0) continue;
    walk(st, level + 1, cmp, mul(acc, mix[t]));
  }
}

}  // namespace

RepSet enumerate_reps(const ClassifiedFactorization& f) {
  RepSet out{f.n(), {}};
  for (const auto& qf : f.q_factors()) {
    if (qf.exp & 1) return out;
  }

  BigInt scale(1);
  for (const auto& qf : f.q_factors()) scale *= BigInt::pow(BigInt(qf.prime), qf.exp / 2);

  // z^t · conj(z)^{m-t} for each split prime and every t
  std::vector<std::vector<GaussianInt>> tables;
  tables.reserve(f.p_factors().size());
  for (const auto& [p, m] : f.p_factors()) {
    auto [a, b] = split_prime(p);
    const GaussianInt z{BigInt(a), BigInt(b)};
    std::vector<GaussianInt> zpow(m + 1);
    zpow[0] = {1, 0};
    for (std::uint32_t t = 1; t <= m; ++t) zpow[t] = mul(zpow[t - 1], z);
    std::vector<GaussianInt> mix(m + 1);
    for (std::uint32_t t = 0; t <= m; ++t) mix[t] = mul(zpow[t], conj(zpow[m - t]));
    tables.push_back(std::move(mix));
  }

  std::set<std::pair<BigInt, BigInt>> seen;
  EnumState st{tables, scale, seen};
  walk(st, 0, 0, gaussian_pow({1, 1}, f.two_exp()));

  out.reps.reserve(seen.size());
  for (const auto& [a, b] : seen) out.reps.push_back(make_representation(a, b));
  return out;
}

Representation doubling_map(const Representation& r) {
  return make_representation(r.b - r.a, r.a + r.b);
}

}  // namespace laplace2sq
