#include "immanants/montecarlo.hpp"

#include "immanants/parallel.hpp"
#include "immanants/symgroup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace immanants {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr long kBlockSize = 1024;

}  // namespace

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(mix64(seed) ^ mix64(index + 0x9e3779b97f4a7c15ULL)));
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

ComplexMatrix haar_unitary(int N, SplitMix64& rng) {
  if (N < 1) throw std::invalid_argument("haar_unitary: N must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : Complex(1.0);
  }
  return q;
}

ComplexMatrix haar_orthogonal(int N, SplitMix64& rng) {
  if (N < 1) throw std::invalid_argument("haar_orthogonal: N must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) z(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q.cast<Complex>();
}

ComplexMatrix coe_sample(int N, SplitMix64& rng) {
  const ComplexMatrix u = haar_unitary(N, rng);
  return u * u.transpose();
}

ComplexMatrix sample(Ensemble ensemble, int N, SplitMix64& rng) {
  switch (ensemble) {
    case Ensemble::unitary: return haar_unitary(N, rng);
    case Ensemble::orthogonal: return haar_orthogonal(N, rng);
    case Ensemble::coe: return coe_sample(N, rng);
  }
  throw std::invalid_argument("sample: unknown ensemble");
}

double unitarity_residual(const ComplexMatrix& m) {
  const ComplexMatrix e = m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols());
  return e.cwiseAbs().maxCoeff();
}

Complex determinant(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix must be square");
  if (a.rows() == 0) return 1.0;
  return a.partialPivLu().determinant();
}

Complex permanent_ryser(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent_ryser: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 30) throw std::invalid_argument("permanent_ryser: n too large");

  // per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} A_ij, walking the
  // subsets S in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex(0.0));
  Complex total = 0.0;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t changed = next ^ gray;
    const int col = std::countr_zero(changed);
    const double sign = (next & changed) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += sign * a(i, col);
    gray = next;
    Complex product = 1.0;
    for (const auto& s : row_sums) product *= s;
    total += (std::popcount(gray) % 2 == 0) ? product : -product;
  }
  return (n % 2 == 0) ? total : -total;
}

Complex immanant_by_characters(const ComplexMatrix& a, const Partition& gamma) {
  const int n = gamma.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("immanant: matrix size does not match partition");
  if (n > 10) throw std::invalid_argument("immanant: character-sum path limited to n <= 10");
  if (n == 0) return 1.0;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Complex total = 0.0;
  do {
    const auto chi = character(gamma, cycle_type(Permutation(images)));
    if (chi == 0) continue;
    Complex product = 1.0;
    for (int k = 0; k < n; ++k) product *= a(k, images[static_cast<std::size_t>(k)]);
    total += static_cast<double>(chi) * product;
  } while (std::next_permutation(images.begin(), images.end()));
  return total;
}

Complex immanant(const ComplexMatrix& a, const Partition& gamma) { return ImmanantKernel(gamma)(a); }

ImmanantKernel::ImmanantKernel(Partition gamma) : gamma_(std::move(gamma)) {
  const int n = gamma_.size();
  if (n >= 1 && gamma_ == Partition::column(n)) {
    path_ = Path::determinant;
  } else if (n >= 1 && gamma_ == Partition::row(n)) {
    path_ = Path::permanent;
  } else {
    if (n > 10) throw std::invalid_argument("immanant: character-sum path limited to n <= 10");
    path_ = Path::characters;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    do {
      const auto chi = character(gamma_, cycle_type(Permutation(images)));
      if (chi != 0) terms_.emplace_back(images, static_cast<double>(chi));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

Complex ImmanantKernel::operator()(const ComplexMatrix& a) const {
  const int n = gamma_.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("immanant: matrix size does not match partition");
  switch (path_) {
    case Path::determinant: return determinant(a);
    case Path::permanent: return permanent_ryser(a);
    case Path::characters: break;
  }
  if (n == 0) return 1.0;
  Complex total = 0.0;
  for (const auto& [images, chi] : terms_) {
    Complex product = 1.0;
    for (int k = 0; k < n; ++k) product *= a(k, images[static_cast<std::size_t>(k)]);
    total += chi * product;
  }
  return total;
}

Complex ImmanantKernel::block(const ComplexMatrix& m) const {
  const int n = gamma_.size();
  if (m.rows() < n || m.cols() < n) throw std::invalid_argument("immanant: block larger than matrix");
  return (*this)(m.topLeftCorner(n, n));
}

void RunningMoments::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void RunningMoments::merge(const RunningMoments& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(count + other.count);
  const double delta = other.mean - mean;
  mean += delta * static_cast<double>(other.count) / total;
  m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
  count += other.count;
}

std::vector<MCEstimate> mc_estimate_many(long samples, std::uint64_t seed, std::size_t statistics, unsigned workers,
                                         const std::function<void(SplitMix64&, std::span<double>)>& fn) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo estimate needs at least 2 samples");
  const auto blocks = static_cast<std::size_t>((samples + kBlockSize - 1) / kBlockSize);
  std::vector<std::vector<RunningMoments>> partial(blocks, std::vector<RunningMoments>(statistics));

  parallel_for(blocks, workers, [&](std::size_t b) {
    std::vector<double> values(statistics);
    const long begin = static_cast<long>(b) * kBlockSize;
    const long end = std::min(samples, begin + kBlockSize);
    for (long s = begin; s < end; ++s) {
      SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(s));
      fn(rng, values);
      for (std::size_t k = 0; k < statistics; ++k) partial[b][k].add(values[k]);
    }
  });

  // Pairwise merge tree over blocks.
  for (std::size_t stride = 1; stride < blocks; stride *= 2) {
    for (std::size_t i = 0; i + stride < blocks; i += 2 * stride) {
      for (std::size_t k = 0; k < statistics; ++k) partial[i][k].merge(partial[i + stride][k]);
    }
  }

  std::vector<MCEstimate> out(statistics);
  for (std::size_t k = 0; k < statistics; ++k) {
    const auto& m = partial[0][k];
    const double variance = m.m2 / static_cast<double>(m.count - 1);
    out[k] = MCEstimate{m.mean, std::sqrt(variance / static_cast<double>(m.count)), m.count, seed};
  }
  return out;
}

MCEstimate mc_moment(Ensemble ensemble, const Partition& gamma, int N, int power, long samples, std::uint64_t seed,
                     unsigned workers) {
  const int n = gamma.size();
  if (n < 1 || n > N) throw std::invalid_argument("mc_moment: need 1 <= n <= N");
  if (power != 2 && power != 4) throw std::invalid_argument("mc_moment: power must be 2 or 4");
  if (power == 4 && (ensemble != Ensemble::unitary || gamma != Partition::row(n))) {
    throw std::invalid_argument("mc_moment: power 4 is only supported for the unitary permanent");
  }
  const ImmanantKernel kernel(gamma);
  return mc_estimate_many(samples, seed, 1, workers, [&](SplitMix64& rng, std::span<double> out) {
    const Complex value = kernel.block(sample(ensemble, N, rng));
    if (ensemble == Ensemble::orthogonal) {
      out[0] = value.real() * value.real();
    } else {
      const double sq = std::norm(value);
      out[0] = power == 2 ? sq : sq * sq;
    }
  })[0];
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    const double fa = static_cast<double>(i) / static_cast<double>(a.size());
    const double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

double ks_critical_value(double alpha, std::size_t n, std::size_t m) {
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  const auto dn = static_cast<double>(n);
  const auto dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

}  // namespace immanants
