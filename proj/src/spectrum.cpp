#include "laplace2sq/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;

bool is_square_u64(u64 x) {
  u64 s = isqrt_u64(x);
  return s * s == x;
}

bool is_square_big(const BigInt& x) {
  if (x.fits_uint64()) return is_square_u64(x.to_uint64());
  BigInt s = isqrt(x);
  return s * s == x;
}

MultiplicityReport report_from_reps(const RepSet& rs, u64 witness_limit) {
  MultiplicityReport rep;
  rep.lambda = rs.n;
  rep.dim = 2;
  u64 generic = 0, diagonal = 0;
  for (const auto& r : rs.reps) {
    if (r.kind == RepKind::Generic) ++generic;
    else if (r.kind == RepKind::Diagonal) ++diagonal;
  }
  rep.multiplicity = 2 * generic + diagonal;
  rep.witnesses_materialized = rep.multiplicity <= witness_limit;
  if (rep.witnesses_materialized) {
    for (const auto& r : rs.reps) {
      if (r.kind == RepKind::Zero) continue;  // indices must be >= 1
      rep.witnesses.push_back({r.a, r.b});
      if (r.kind == RepKind::Generic) rep.witnesses.push_back({r.b, r.a});
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
  }
  return rep;
}

// Non-decreasing positive tuples with squared sum `remaining`.
struct PatternScan {
  int dim;
  u64 budget;
  u64 steps = 0;
  std::vector<u64> current;
  std::vector<std::vector<u64>> patterns;

  void run(u64 min_val, u64 remaining, int depth) {
    if (++steps > budget) {
      throw budget_error("multiplicity_nd: pattern scan budget exceeded");
    }
    if (depth == dim) {
      if (remaining == 0) patterns.push_back(current);
      return;
    }
    const u64 slots = static_cast<u64>(dim - depth);
    for (u64 x = min_val; x * x <= remaining / slots; ++x) {
      current.push_back(x);
      run(x, remaining - x * x, depth + 1);
      current.pop_back();
    }
  }
};

u64 factorial(u64 k) {
  u64 f = 1;
  for (u64 i = 2; i <= k; ++i) f *= i;
  return f;
}

u64 ordered_count_of(const std::vector<u64>& pattern) {
  u64 denom = 1, run = 1;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    if (pattern[i] == pattern[i - 1]) ++run;
    else {
      denom *= factorial(run);
      run = 1;
    }
  }
  denom *= factorial(run);
  return factorial(pattern.size()) / denom;
}

}  // namespace

MultiplicityReport multiplicity_2d(const ClassifiedFactorization& f, u64 witness_limit) {
  return report_from_reps(enumerate_reps(f), witness_limit);
}

MultiplicityReport multiplicity_2d(u64 lambda, u64 witness_limit) {
  return multiplicity_2d(factorize(lambda), witness_limit);
}

u64 multiplicity_2d_count(const ClassifiedFactorization& f) {
  const u64 count = count_reps(f);
  const BigInt& n = f.n();
  u64 has_zero, has_diagonal;
  if (n.fits_uint64()) {
    const u64 v = n.to_uint64();
    has_zero = is_square_u64(v) ? 1 : 0;
    has_diagonal = (v % 2 == 0 && is_square_u64(v / 2)) ? 1 : 0;
  } else {
    has_zero = is_square_big(n) ? 1 : 0;
    has_diagonal = (n.is_even() && is_square_big(n >> 1)) ? 1 : 0;
  }
  return 2 * count - 2 * has_zero - has_diagonal;
}

MultiplicityReport multiplicity_nd(u64 lambda, int dim, u64 witness_limit, u64 budget) {
  if (lambda == 0) throw std::domain_error("multiplicity_nd: lambda must be positive");
  if (dim < 2) throw std::domain_error("multiplicity_nd: dim must be >= 2");
  if (dim > 20) {
    throw budget_error("multiplicity_nd: dim > 20 exceeds exact multinomial range");
  }

  PatternScan scan{dim, budget, 0, {}, {}};
  scan.run(1, lambda, 0);

  MultiplicityReport rep;
  rep.lambda = BigInt(lambda);
  rep.dim = dim;
  for (const auto& pattern : scan.patterns) rep.multiplicity += ordered_count_of(pattern);

  rep.witnesses_materialized = rep.multiplicity <= witness_limit;
  if (rep.witnesses_materialized) {
    for (const auto& pattern : scan.patterns) {
      std::vector<u64> perm = pattern;
      do {
        std::vector<BigInt> tuple(perm.begin(), perm.end());
        rep.witnesses.push_back(std::move(tuple));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
  }
  return rep;
}

SurveyReport viable_multiplicity_survey(int dim, u64 bound, u64 budget) {
  if (dim < 3) throw std::domain_error("viable_multiplicity_survey: dim must be >= 3");
  if (bound == 0) throw std::domain_error("viable_multiplicity_survey: bound must be positive");

  SurveyReport survey;
  survey.dim = dim;
  survey.bound = bound;
  for (u64 lambda = 1; lambda <= bound; ++lambda) {
    const u64 m = multiplicity_nd(lambda, dim, 0, budget).multiplicity;
    if (m == 0) continue;  // not an eigenvalue
    survey.observed.insert(m);
    if (m % static_cast<u64>(dim) >= 2) survey.counterexamples.push_back({lambda, m});
  }
  return survey;
}

}  // namespace laplace2sq
