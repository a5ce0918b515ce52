#include "laplace2sq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "laplace2sq/spectrum.hpp"

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;

bool is_square_u64(u64 x) {
  const u64 s = isqrt_u64(x);
  return s * s == x;
}

u64 ordered_tuples(u64 n, int dim) {
  if (dim == 1) return n >= 1 && is_square_u64(n) ? 1 : 0;
  u64 total = 0;
  for (u64 x = 1; x * x + static_cast<u64>(dim - 1) <= n; ++x) {
    total += ordered_tuples(n - x * x, dim - 1);
  }
  return total;
}

// Saturating estimate of the recursive scan size.
u64 nd_scan_estimate(u64 n, int dim) {
  const u64 root = isqrt_u64(n) + 1;
  u64 est = 1;
  for (int i = 1; i < dim; ++i) {
    if (est > std::numeric_limits<u64>::max() / root) return std::numeric_limits<u64>::max();
    est *= root;
  }
  return est;
}

template <typename Check>
SweepResult run_sweep(u64 max, unsigned jobs, Check check) {
  jobs = std::clamp(jobs, 1u, 64u);
  if (static_cast<u64>(jobs) > max) jobs = static_cast<unsigned>(max);

  std::vector<SweepResult> parts(jobs);
  auto worker = [&](unsigned idx) {
    const u64 lo = 1 + max * idx / jobs;
    const u64 hi = max * (idx + 1) / jobs;
    SweepResult& part = parts[idx];
    for (u64 lambda = lo; lambda <= hi; ++lambda) {
      ++part.checked;
      try {
        check(lambda, part);
      } catch (const std::exception& e) {
        part.mismatches.push_back({lambda, std::string("exception: ") + e.what()});
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker, i);
    for (auto& t : threads) t.join();
  }

  SweepResult merged;
  for (const auto& part : parts) {
    merged.checked += part.checked;
    merged.mismatches.insert(merged.mismatches.end(), part.mismatches.begin(),
                             part.mismatches.end());
  }
  return merged;
}

}  // namespace

RepSet brute_force_reps(u64 n, u64 budget) {
  if (n == 0) throw std::domain_error("brute_force_reps: n must be positive");
  if (n > budget) {
    throw budget_error("brute_force_reps: n " + std::to_string(n) + " exceeds scan budget " +
                       std::to_string(budget));
  }
  RepSet out{BigInt(n), {}};
  const u64 amax = isqrt_u64(n / 2);
  for (u64 a = 0; a <= amax; ++a) {
    const u64 rest = n - a * a;
    const u64 b = isqrt_u64(rest);
    if (b * b == rest) out.reps.push_back(make_representation(BigInt(a), BigInt(b)));
  }
  return out;
}

u64 brute_force_multiplicity_nd(u64 n, int dim, u64 budget) {
  if (n == 0) throw std::domain_error("brute_force_multiplicity_nd: n must be positive");
  if (dim < 2) throw std::domain_error("brute_force_multiplicity_nd: dim must be >= 2");
  if (nd_scan_estimate(n, dim) > budget) {
    throw budget_error("brute_force_multiplicity_nd: scan of n=" + std::to_string(n) +
                       " dim=" + std::to_string(dim) + " exceeds budget");
  }
  return ordered_tuples(n, dim);
}

u64 divisor_count_check(u64 n, u64 budget) {
  if (n == 0) throw std::domain_error("divisor_count_check: n must be positive");
  if (n > budget) {
    throw budget_error("divisor_count_check: n exceeds budget " + std::to_string(budget));
  }
  std::int64_t signed_count = 0;
  auto tally = [&](u64 d) {
    if (d % 4 == 1) ++signed_count;
    else if (d % 4 == 3) --signed_count;
  };
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    tally(d);
    if (d != n / d) tally(n / d);
  }
  if (signed_count < 0) {
    throw std::logic_error("divisor_count_check: negative count for " + std::to_string(n));
  }
  return 4 * static_cast<u64>(signed_count);
}

std::string repset_fixture_lines(const RepSet& rs) {
  std::string out;
  const std::string n = rs.n.to_string();
  for (const auto& r : rs.reps) {
    out += n;
    out += ' ';
    out += r.a.to_string();
    out += ' ';
    out += r.b.to_string();
    out += ' ';
    out += to_string(r.kind);
    out += '\n';
  }
  return out;
}

SweepResult verify_sweep_2d(u64 max, unsigned jobs, u64 budget) {
  if (max == 0) throw std::domain_error("verify_sweep_2d: max must be positive");
  if (max > budget) {
    throw budget_error("verify_sweep_2d: max exceeds scan budget " + std::to_string(budget));
  }
  return run_sweep(max, jobs, [budget](u64 lambda, SweepResult& part) {
    const auto f = factorize(lambda);
    if (f.reconstruct() != BigInt(lambda)) {
      part.mismatches.push_back({lambda, "factorization does not reconstruct"});
      return;
    }
    const RepSet expected = brute_force_reps(lambda, budget);
    const RepSet got = enumerate_reps(f);
    if (got.reps != expected.reps) {
      part.mismatches.push_back({lambda, "enumerate_reps disagrees with brute force"});
      return;
    }
    if (count_reps(f) != got.reps.size()) {
      part.mismatches.push_back({lambda, "count_reps disagrees with enumeration size"});
      return;
    }
    u64 generic = 0, diagonal = 0, zero = 0;
    for (const auto& r : got.reps) {
      if (r.kind == RepKind::Generic) ++generic;
      else if (r.kind == RepKind::Diagonal) ++diagonal;
      else ++zero;
    }
    const bool square = is_square_u64(lambda);
    const bool half_square = lambda % 2 == 0 && is_square_u64(lambda / 2);
    if ((zero == 1) != square || zero > 1 || (diagonal == 1) != half_square || diagonal > 1) {
      part.mismatches.push_back({lambda, "zero/diagonal bookkeeping mismatch"});
      return;
    }
    if (multiplicity_2d_count(f) != 2 * generic + diagonal) {
      part.mismatches.push_back({lambda, "multiplicity formula disagrees with enumeration"});
    }
  });
}

SweepResult verify_sweep_nd(u64 max, int dim, unsigned jobs, u64 budget) {
  if (max == 0) throw std::domain_error("verify_sweep_nd: max must be positive");
  if (nd_scan_estimate(max, dim) > budget) {
    throw budget_error("verify_sweep_nd: scan to " + std::to_string(max) + " in dim " +
                       std::to_string(dim) + " exceeds budget");
  }
  // budget validated up front; workers must not throw
  const u64 inner = std::numeric_limits<u64>::max();
  return run_sweep(max, jobs, [dim, inner](u64 lambda, SweepResult& part) {
    const u64 via_patterns = multiplicity_nd(lambda, dim, 0, inner).multiplicity;
    const u64 via_scan = brute_force_multiplicity_nd(lambda, dim, inner);
    if (via_patterns != via_scan) {
      part.mismatches.push_back({lambda, "pattern count " + std::to_string(via_patterns) +
                                             " != ordered scan " + std::to_string(via_scan)});
    }
  });
}

}  // namespace laplace2sq
