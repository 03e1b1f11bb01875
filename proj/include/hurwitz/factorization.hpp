#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Thrown when a requested degree exceeds the configured ceiling. The
/// factorization search is factorial in the degree; it is a desk-scale
/// validator, not a production path.
struct DegreeCeilingExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int max_degree = 7;
  int threads = 1;
};

/// Number of tuples (s_1, ..., s_n) in S_d with cycle_type(s_i) = mu_i,
/// s_1 ... s_n = id and transitive generated group; the automorphism-weighted
/// cover count is raw_count / d!.
struct FactorizationCount {
  BigInt raw_count;
  int degree = 0;
  Rational value() const {
    return Rational(raw_count) / Rational(factorial(static_cast<unsigned>(degree)));
  }
};

FactorizationCount count_factorizations(const ProfileTuple& mu,
                                        const OracleOptions& opts = {});

/// r in the Riemann-Hurwitz formula 2 - 2g = 2d - sum_i (d - l(mu_i));
/// the candidate source genus is integral iff the total defect is even.
bool riemann_hurwitz_consistent(int g, const ProfileTuple& mu);

/// Weighted count of connected degree-d covers of the sphere with the given
/// ramification. Returns 0 whenever Riemann-Hurwitz rules the data out; no
/// search is run in that case. Pass `vanishing` to observe that flag.
Rational complex_hurwitz_sphere(int g, const ProfileTuple& mu,
                                const OracleOptions& opts = {},
                                bool* vanishing = nullptr);

/// Number of additional simple branch points of a genus-g cover with profiles
/// lambda over one end and nu over the other: r = 2g - 2 + l(lambda) + l(nu).
int simple_branch_count(int g, const Partition& lambda, const Partition& nu);

/// complex_hurwitz_sphere with mu = (lambda, nu, r copies of (2,1,...,1)).
/// Returns 0 (vanishing) when r < 0.
Rational complex_double_hurwitz_oracle(int g, const Partition& lambda,
                                       const Partition& nu,
                                       const OracleOptions& opts = {},
                                       bool* vanishing = nullptr);

}  // namespace hurwitz
