#pragma once

#include "immanants/partitions.hpp"

#include <optional>
#include <vector>

namespace immanants {

struct ConjectureFailure {
  long N = 0;
  Rational lhs;
  Rational rhs;
};

/// Outcome of checking
///   sum_lambda d_{2 lambda} G_{lambda,gamma} / [N]^(2)_lambda
///     == ((2n)!/(2^n n!)) d_gamma / {N}_gamma
/// for one gamma over a range of integer N.
struct ConjectureReport {
  int n = 0;
  Partition gamma;
  std::vector<long> tested_N;
  std::vector<long> skipped_poles;
  bool verified = false;
  std::optional<ConjectureFailure> first_failure;

  /// Upper bound n p(n) + n on the degree of the cleared-denominator
  /// difference of the two sides.
  int degree_bound = 0;
  /// Verified at more pole-free points than degree_bound, hence an identity
  /// of rational functions in N.
  bool certified = false;
};

/// Throws PoleError if some [N]^(2)_lambda with G_{lambda,gamma} != 0 vanishes.
Rational conjecture_lhs(const Partition& gamma, long N);

/// Throws PoleError if {N}_gamma vanishes.
Rational conjecture_rhs(const Partition& gamma, long N);

/// n p(n) + n.
int conjecture_degree_bound(int n);

/// 2 (n p(n) + n), the number of points the default sweep covers.
int conjecture_point_count(int n);

/// Default sweep [2n + 1, 2n + conjecture_point_count(n)].
std::pair<long, long> default_conjecture_range(int n);

/// Checks every gamma |- n at each N in [N_lo, N_hi]. Pole points of either
/// side are recorded in skipped_poles. `workers` = 0 picks a default.
/// Throws std::invalid_argument for n outside [1, 7].
std::vector<ConjectureReport> check_conjecture(int n, long N_lo, long N_hi, unsigned workers = 0);

}  // namespace immanants
