#include "immanants/montecarlo.hpp"
#include "immanants/weingarten.hpp"
#include "support/brute.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace immanants;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

bool within(const MCEstimate& e, double exact, double sigmas = 4.0) {
  return std::abs(e.mean - exact) <= sigmas * e.std_error + 1e-12;
}

ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  }
  return a;
}

// Orthonormalization without the phase fix on the triangular factor.
ComplexMatrix naive_unitary(int N, SplitMix64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  return qr.householderQ();
}

// All sequences over {1, 2} of the given length.
std::vector<std::vector<int>> index_patterns(int length) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << length); ++mask) {
    std::vector<int> seq;
    for (int k = 0; k < length; ++k) seq.push_back(((mask >> k) & 1) + 1);
    out.push_back(seq);
  }
  return out;
}

}  // namespace

TEST_CASE("substreams are deterministic and distinct") {
  auto a = SplitMix64::substream(1, 2);
  auto b = SplitMix64::substream(1, 2);
  auto c = SplitMix64::substream(1, 3);
  auto d = SplitMix64::substream(2, 2);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("samplers produce unitary matrices") {
  for (int N : {1, 2, 5, 9}) {
    auto rng = SplitMix64::substream(99, static_cast<std::uint64_t>(N));
    const auto u = haar_unitary(N, rng);
    CHECK(unitarity_residual(u) < 1e-12);
    const auto o = haar_orthogonal(N, rng);
    CHECK(unitarity_residual(o) < 1e-12);
    CHECK(o.imag().cwiseAbs().maxCoeff() == 0.0);
    const auto v = coe_sample(N, rng);
    CHECK(unitarity_residual(v) < 1e-12);
    CHECK((v - v.transpose()).cwiseAbs().maxCoeff() < 1e-13);
  }
  auto rng = SplitMix64::substream(0, 0);
  CHECK_THROWS_AS(haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("low moments of the samplers") {
  const long S = 100000;
  auto stats = mc_estimate_many(S, 2024, 4, 0, [](SplitMix64& rng, std::span<double> out) {
    const double u = std::norm(haar_unitary(5, rng)(0, 0));
    out[0] = u;
    out[1] = u * u;
    const double o = haar_orthogonal(4, rng)(0, 0).real();
    out[2] = o;
    out[3] = o * o;
  });
  CHECK(within(stats[0], 1.0 / 5));
  CHECK(within(stats[1], 2.0 / 30));
  CHECK(within(stats[2], 0.0));
  CHECK(within(stats[3], 1.0 / 4));
  const auto coe = mc_estimate_many(S, 77, 1, 0, [](SplitMix64& rng, std::span<double> out) {
    out[0] = std::norm(coe_sample(7, rng)(0, 0));
  });
  CHECK(within(coe[0], 2.0 / 8));
}

TEST_CASE("immanant evaluation") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : partitions_of(n)) {
      CHECK(std::abs(immanant(ComplexMatrix::Identity(n, n), g) - to_double(Rational(dim_sn(g)))) < 1e-12);
    }
  }
  CHECK(std::abs(immanant(ComplexMatrix::Ones(3, 3), P("2,1"))) < 1e-12);
  CHECK(std::abs(immanant(ComplexMatrix::Ones(4, 4), P("4")) - 24.0) < 1e-9);
  CHECK(std::abs(immanant(ComplexMatrix(0, 0), Partition{}) - 1.0) < 1e-15);
  CHECK_THROWS_AS(immanant(ComplexMatrix::Ones(3, 3), P("2,2")), std::invalid_argument);
  CHECK_THROWS_AS(ImmanantKernel(P("10,1")), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_matrix(6, rng);
    const auto ryser = permanent_ryser(a);
    const auto sum = immanant_by_characters(a, P("6"));
    CHECK(std::abs(ryser - sum) <= 1e-10 * std::abs(sum));
    const auto det = determinant(a);
    const auto via_chars = immanant_by_characters(a, Partition::column(6));
    CHECK(std::abs(det - via_chars) <= 1e-10 * std::abs(det));
    CHECK(std::abs(immanant(a, P("3,2,1")) - immanant_by_characters(a, P("3,2,1"))) <= 1e-10 * std::abs(sum));
  }
  const ComplexMatrix big = ComplexMatrix::Identity(5, 5);
  CHECK(std::abs(ImmanantKernel(P("2,1")).block(big) - 2.0) < 1e-12);
}

TEST_CASE("mc_moment examples") {
  CHECK(within(mc_moment(Ensemble::unitary, P("2"), 4, 2, 100000, 42), 0.1));
  CHECK(within(mc_moment(Ensemble::coe, P("1,1"), 5, 2, 100000, 7), 0.2));
  CHECK(within(mc_moment(Ensemble::orthogonal, P("2"), 5, 2, 100000, 3), 1.0 / 14));
  CHECK_THROWS_AS(mc_moment(Ensemble::unitary, P("1,1"), 4, 4, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_moment(Ensemble::orthogonal, P("2"), 4, 4, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_moment(Ensemble::unitary, P("3"), 2, 2, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_moment(Ensemble::unitary, P("2"), 4, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
  const auto a = mc_moment(Ensemble::unitary, P("2,1"), 5, 2, 5000, 11, 1);
  const auto b = mc_moment(Ensemble::unitary, P("2,1"), 5, 2, 5000, 11, 3);
  const auto c = mc_moment(Ensemble::unitary, P("2,1"), 5, 2, 5000, 11, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(b.mean == c.mean);
  CHECK(a.samples == 5000);
  CHECK(a.seed == 11);
}

TEST_CASE("unitary entry correlations, n <= 2, N = 6") {
  const int N = 6;
  struct Pattern {
    std::vector<int> a, b, c, d;
    Rational exact;
  };
  std::vector<Pattern> patterns;
  for (int n = 1; n <= 2; ++n) {
    for (const auto& a : index_patterns(n))
      for (const auto& b : index_patterns(n))
        for (const auto& c : index_patterns(n))
          for (const auto& d : index_patterns(n)) patterns.push_back({a, b, c, d, unitary_entry_moment(a, b, c, d, N)});
  }
  const auto stats = mc_estimate_many(20000, 5, 2 * patterns.size(), 0, [&](SplitMix64& rng, std::span<double> out) {
    const auto u = haar_unitary(N, rng);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const auto& pt = patterns[p];
      Complex value = 1.0;
      for (std::size_t k = 0; k < pt.a.size(); ++k) {
        value *= u(pt.a[k] - 1, pt.b[k] - 1) * std::conj(u(pt.c[k] - 1, pt.d[k] - 1));
      }
      out[2 * p] = value.real();
      out[2 * p + 1] = value.imag();
    }
  });
  int nonzero = 0;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    nonzero += patterns[p].exact != 0;
    CHECK(within(stats[2 * p], to_double(patterns[p].exact)));
    CHECK(within(stats[2 * p + 1], 0.0));
  }
  CHECK(nonzero > 10);
}

TEST_CASE("orthogonal entry correlations, up to four entries, N = 6") {
  const int N = 6;
  struct Pattern {
    std::vector<int> rows, cols;
    Rational exact;
  };
  std::vector<Pattern> patterns;
  for (int m = 1; m <= 4; ++m) {
    for (const auto& r : index_patterns(m))
      for (const auto& c : index_patterns(m)) patterns.push_back({r, c, orthogonal_entry_moment(r, c, N)});
  }
  const auto stats = mc_estimate_many(20000, 6, patterns.size(), 0, [&](SplitMix64& rng, std::span<double> out) {
    const auto o = haar_orthogonal(N, rng);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      double value = 1.0;
      for (std::size_t k = 0; k < patterns[p].rows.size(); ++k) {
        value *= o(patterns[p].rows[k] - 1, patterns[p].cols[k] - 1).real();
      }
      out[p] = value;
    }
  });
  for (std::size_t p = 0; p < patterns.size(); ++p) CHECK(within(stats[p], to_double(patterns[p].exact)));
}

TEST_CASE("COE entry correlations, n <= 2, N = 6") {
  const int N = 6;
  struct Pattern {
    std::vector<int> i, j;
    Rational exact;
  };
  std::vector<Pattern> patterns;
  for (int n = 1; n <= 2; ++n) {
    for (const auto& i : index_patterns(2 * n))
      for (const auto& j : index_patterns(2 * n)) patterns.push_back({i, j, coe_entry_moment(i, j, N)});
  }
  const auto stats = mc_estimate_many(20000, 8, 2 * patterns.size(), 0, [&](SplitMix64& rng, std::span<double> out) {
    const auto v = coe_sample(N, rng);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const auto& pt = patterns[p];
      Complex value = 1.0;
      for (std::size_t k = 0; k + 1 < pt.i.size(); k += 2) {
        value *= v(pt.i[k] - 1, pt.i[k + 1] - 1) * std::conj(v(pt.j[k] - 1, pt.j[k + 1] - 1));
      }
      out[2 * p] = value.real();
      out[2 * p + 1] = value.imag();
    }
  });
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    CHECK(within(stats[2 * p], to_double(patterns[p].exact)));
    CHECK(within(stats[2 * p + 1], 0.0));
  }
}

TEST_CASE("left invariance: |(UV)_11|^2 and |V_11|^2 share a distribution") {
  const int N = 4;
  const std::size_t S = 10000;
  auto fixed_rng = SplitMix64::substream(1234, 0);
  const auto U = haar_unitary(N, fixed_rng);
  std::vector<double> plain;
  std::vector<double> rotated;
  for (std::size_t s = 0; s < S; ++s) {
    auto r1 = SplitMix64::substream(555, s);
    auto r2 = SplitMix64::substream(556, s);
    plain.push_back(std::norm(haar_unitary(N, r1)(0, 0)));
    rotated.push_back(std::norm((U * haar_unitary(N, r2))(0, 0)));
  }
  CHECK(ks_statistic(plain, rotated) < ks_critical_value(0.01, S, S));
  CHECK(ks_critical_value(0.01, S, S) == doctest::Approx(1.6276 * std::sqrt(2.0 / S)).epsilon(1e-3));
  CHECK(ks_statistic({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(ks_statistic({1, 2}, {3, 4}) == 1.0);
}

TEST_CASE("sentinel: the uncorrected orthonormalization is caught") {
  const int N = 4;
  const long S = 100000;
  auto probe = [&](bool naive) {
    return mc_estimate_many(S, 31, 2, 0, [&](SplitMix64& rng, std::span<double> out) {
      const auto u = naive ? naive_unitary(N, rng) : haar_unitary(N, rng);
      out[0] = std::pow(std::norm(u(0, 0)), 2);
      out[1] = u(0, 0).real();
    });
  };
  const auto haar = probe(false);
  const auto naive = probe(true);
  const double fourth = 2.0 / (N * (N + 1));
  CHECK(within(haar[0], fourth));
  CHECK(within(haar[1], 0.0));
  // Column phases leave |U_11| unchanged, so the fourth moment cannot see the
  // defect; the phase of U_11 does.
  CHECK(within(naive[0], fourth));
  CHECK_FALSE(within(naive[1], 0.0));
  CHECK(std::abs(naive[1].mean) > 100 * naive[1].std_error);
}
