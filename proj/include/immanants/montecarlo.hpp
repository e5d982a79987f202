#pragma once

#include "immanants/moments.hpp"
#include "immanants/partitions.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace immanants {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// SplitMix64. Each Monte Carlo sample draws from its own stream keyed by
/// (seed, sample index), so results do not depend on how samples are spread
/// over threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

 private:
  std::uint64_t state_;
};

/// Haar unitary: complex Ginibre matrix, Householder QR, then each column of
/// Q multiplied by the phase of the matching diagonal entry of R.
ComplexMatrix haar_unitary(int N, SplitMix64& rng);

/// Haar orthogonal (real entries): real Ginibre, QR, sign correction.
ComplexMatrix haar_orthogonal(int N, SplitMix64& rng);

/// COE element V = U U^T with U Haar unitary.
ComplexMatrix coe_sample(int N, SplitMix64& rng);

ComplexMatrix sample(Ensemble ensemble, int N, SplitMix64& rng);

/// max |(M M^dagger - I)_{ij}|.
double unitarity_residual(const ComplexMatrix& m);

Complex determinant(const ComplexMatrix& a);

/// Ryser's inclusion-exclusion formula with Gray-code updates, O(2^n n).
Complex permanent_ryser(const ComplexMatrix& a);

/// sum_{pi in S_n} chi_gamma(pi) prod_k A_{k, pi(k)}, summed term by term.
Complex immanant_by_characters(const ComplexMatrix& a, const Partition& gamma);

/// Immanant of a square matrix: determinant for (1^n), Ryser for (n), the
/// character sum otherwise (n <= 10). Throws std::invalid_argument when the
/// matrix is not |gamma| x |gamma|.
Complex immanant(const ComplexMatrix& a, const Partition& gamma);

/// Precomputed immanant evaluator for repeated use on n x n blocks.
class ImmanantKernel {
 public:
  explicit ImmanantKernel(Partition gamma);
  Complex operator()(const ComplexMatrix& a) const;
  /// Immanant of the top-left n x n block of `m`.
  Complex block(const ComplexMatrix& m) const;
  const Partition& gamma() const noexcept { return gamma_; }

 private:
  enum class Path { determinant, permanent, characters };
  Partition gamma_;
  Path path_;
  std::vector<std::pair<std::vector<int>, double>> terms_;
};

struct MCEstimate {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(samples)
  long samples = 0;
  std::uint64_t seed = 0;
};

/// Streaming mean / sum of squared deviations, mergeable in a fixed order.
struct RunningMoments {
  long count = 0;
  double mean = 0;
  double m2 = 0;
  void add(double x);
  void merge(const RunningMoments& other);
};

/// Evaluates `statistics` real-valued functions per sample and returns one
/// estimate each. Samples are processed in fixed blocks merged pairwise, so
/// the output is bit-identical for any worker count. samples >= 2.
std::vector<MCEstimate> mc_estimate_many(long samples, std::uint64_t seed, std::size_t statistics, unsigned workers,
                                         const std::function<void(SplitMix64&, std::span<double>)>& fn);

/// Estimates <|Imm_gamma(block)|^power> (unitary, COE) or <Imm_gamma(block)^2>
/// (orthogonal) over the top-left n x n block. Power 4 is only allowed for the
/// unitary permanent. Throws std::invalid_argument otherwise.
MCEstimate mc_moment(Ensemble ensemble, const Partition& gamma, int N, int power, long samples, std::uint64_t seed,
                     unsigned workers = 0);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic two-sample KS critical value at level alpha.
double ks_critical_value(double alpha, std::size_t n, std::size_t m);

}  // namespace immanants
