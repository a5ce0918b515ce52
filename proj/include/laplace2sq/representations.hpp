#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laplace2sq/bigint.hpp"
#include "laplace2sq/number_theory.hpp"

namespace laplace2sq {

// Kind of a two-square representation n = a^2 + b^2 with 0 <= a <= b.
enum class RepKind { Zero, Diagonal, Generic };

const char* to_string(RepKind kind);

struct Representation {
  BigInt a;
  BigInt b;
  RepKind kind = RepKind::Generic;
  bool operator==(const Representation&) const = default;
};

// Classifies (a, b); requires 0 <= a <= b and b > 0.
Representation make_representation(BigInt a, BigInt b);

// All representations of n, sorted ascending by a (a determines b, so the
// order is total). Empty when n has none.
struct RepSet {
  BigInt n;
  std::vector<Representation> reps;
  bool operator==(const RepSet&) const = default;
};

// Number of representations 0 <= a <= b with a^2 + b^2 = n: zero when any
// q-exponent is odd, otherwise ceil(B/2) with B = ∏ (m_i + 1).
std::uint64_t count_reps(const ClassifiedFactorization& f);

// Explicit enumeration by combining Gaussian prime factors: for each exponent
// choice (t_1..t_k) the product (1+i)^l · ∏ z_i^{t_i} conj(z_i)^{m_i - t_i}
// scaled by ∏ q_j^{k_j/2} yields one candidate pair.
RepSet enumerate_reps(const ClassifiedFactorization& f);

// (|a-b|, a+b): carries a representation of M to one of 2M. Bijective on rep
// sets, exchanging Zero and Diagonal kinds.
Representation doubling_map(const Representation& r);

}  // namespace laplace2sq
