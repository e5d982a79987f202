#include "immanants/conjecture.hpp"

#include "immanants/matchings.hpp"
#include "immanants/parallel.hpp"
#include "immanants/weingarten.hpp"

#include <stdexcept>

namespace immanants {

Rational conjecture_lhs(const Partition& gamma, long N) {
  const int n = gamma.size();
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const Rational G = G_value(lambda, gamma);
    if (G == 0) continue;
    const Rational zonal = poly_alpha(lambda, N, 2);
    if (zonal == 0) {
      throw PoleError("conjecture lhs pole at [N]^(2)_" + lambda.to_string(), lambda, N);
    }
    sum += Rational(dim_sn(double_partition(lambda))) * G / zonal;
  }
  return sum;
}

Rational conjecture_rhs(const Partition& gamma, long N) {
  const int n = gamma.size();
  const Rational brace = poly_brace(gamma, N);
  if (brace == 0) throw PoleError("conjecture rhs pole at {N}_" + gamma.to_string(), gamma, N);
  const auto un = static_cast<unsigned long>(n);
  const Rational matchings = ratio(factorial(2 * un), factorial(un) * (BigInt(1) << n));
  return matchings * Rational(dim_sn(gamma)) / brace;
}

int conjecture_degree_bound(int n) { return n * static_cast<int>(partitions_of(n).size()) + n; }

int conjecture_point_count(int n) { return 2 * conjecture_degree_bound(n); }

std::pair<long, long> default_conjecture_range(int n) {
  const long lo = 2L * n + 1;
  return {lo, lo + conjecture_point_count(n) - 1};
}

std::vector<ConjectureReport> check_conjecture(int n, long N_lo, long N_hi, unsigned workers) {
  if (n < 1 || n > 7) throw std::invalid_argument("check_conjecture: n must be in [1, 7]");
  if (N_hi < N_lo) throw std::invalid_argument("check_conjecture: empty N range");

  const auto& shapes = partitions_of(n);
  // Warm the zonal and G caches before fanning out.
  for (const auto& lambda : shapes) {
    for (const auto& gamma : shapes) G_value(lambda, gamma);
  }

  std::vector<ConjectureReport> reports(shapes.size());
  parallel_for(shapes.size(), workers, [&](std::size_t g) {
    ConjectureReport& report = reports[g];
    report.n = n;
    report.gamma = shapes[g];
    report.degree_bound = conjecture_degree_bound(n);
    for (long N = N_lo; N <= N_hi; ++N) {
      Rational lhs;
      Rational rhs;
      try {
        lhs = conjecture_lhs(report.gamma, N);
        rhs = conjecture_rhs(report.gamma, N);
      } catch (const PoleError&) {
        report.skipped_poles.push_back(N);
        continue;
      }
      report.tested_N.push_back(N);
      if (lhs != rhs && !report.first_failure) report.first_failure = ConjectureFailure{N, lhs, rhs};
    }
    report.verified = !report.first_failure.has_value();
    report.certified = report.verified && static_cast<int>(report.tested_N.size()) > report.degree_bound;
  });
  return reports;
}

}  // namespace immanants
