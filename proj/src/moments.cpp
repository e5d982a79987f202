#include "immanants/moments.hpp"

#include "immanants/matchings.hpp"
#include "immanants/symgroup.hpp"
#include "immanants/weingarten.hpp"

#include <stdexcept>

namespace immanants {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// 2^n n! / (2n)!
Rational hyperoctahedral_fraction(int n) {
  const auto un = static_cast<unsigned long>(n);
  return ratio(factorial(un) * (BigInt(1) << n), factorial(2 * un));
}

Rational checked_denominator(const Partition& lambda, long N, const Rational& alpha, const char* family) {
  const Rational value = poly_alpha(lambda, N, alpha);
  if (value == 0) {
    throw PoleError(std::string(family) + " pole: [N]_" + lambda.to_string() + " vanishes at N = " + std::to_string(N),
                    lambda, N);
  }
  return value;
}

// (v(1), ..., v(n)) for a permutation of S_n, 1-based.
IndexSequence images_of(const Permutation& p) {
  IndexSequence out;
  for (int i = 0; i < p.degree(); ++i) out.push_back(p(i) + 1);
  return out;
}

IndexSequence iota_sequence(int n) {
  IndexSequence out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::string_view to_string(Ensemble ensemble) {
  switch (ensemble) {
    case Ensemble::unitary: return "unitary";
    case Ensemble::orthogonal: return "orthogonal";
    case Ensemble::coe: return "coe";
  }
  return "?";
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "unitary") return Ensemble::unitary;
  if (name == "orthogonal") return Ensemble::orthogonal;
  if (name == "coe") return Ensemble::coe;
  throw std::invalid_argument("unknown ensemble '" + std::string(name) + "'");
}

Rational unitary_imm_sq(const Partition& gamma, long N) {
  return Rational(factorial(static_cast<unsigned long>(gamma.size()))) / checked_denominator(gamma, N, 1, "unitary");
}

Rational unitary_per_4(int n, long N) {
  require(n >= 1, "unitary_per_4: n must be positive");
  const auto un = static_cast<unsigned long>(n);
  const BigInt h = factorial(un) * (BigInt(1) << n);
  const Rational prefactor = ratio(h * h, factorial(2 * un));
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const Rational g = g_value(lambda);
    if (g == 0) continue;
    const Partition doubled = double_partition(lambda);
    sum += Rational(dim_sn(doubled)) * g * g / checked_denominator(doubled, N, 1, "unitary quartic");
  }
  return prefactor * sum;
}

Rational coe_imm_sq(const Partition& gamma, long N) {
  const int n = gamma.size();
  require(n >= 1, "coe_imm_sq: n must be positive");
  const auto un = static_cast<unsigned long>(n);
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, un);
  const Rational prefactor = ratio(four_n * factorial(un), factorial(2 * un));
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const Rational G = G_value(lambda, gamma);
    if (G == 0) continue;
    sum += Rational(dim_sn(double_partition(lambda))) * G * G / checked_denominator(lambda, N + 1, 2, "COE");
  }
  return prefactor * sum;
}

Rational orth_imm_sq(const Partition& gamma, long N) {
  const int n = gamma.size();
  require(n >= 1, "orth_imm_sq: n must be positive");
  const Rational prefactor =
      ratio(factorial(static_cast<unsigned long>(n)), dim_sn(gamma)) * hyperoctahedral_fraction(n);
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const Rational G = G_value(lambda, gamma);
    if (G == 0) continue;
    sum += Rational(dim_sn(double_partition(lambda))) * G / checked_denominator(lambda, N, 2, "orthogonal");
  }
  return prefactor * sum;
}

std::vector<Rational> perm_poly_quad(int n, long N, Ensemble ensemble) {
  require(n >= 0, "perm_poly_quad: negative n");
  require(ensemble != Ensemble::coe, "perm_poly_quad: only unitary and orthogonal ensembles");
  std::vector<Rational> coefficients;
  for (int m = 0; m <= n; ++m) {
    Rational moment = 1;
    if (m > 0) {
      moment = ensemble == Ensemble::unitary ? unitary_imm_sq(Partition::row(m), N) : orth_imm_sq(Partition::row(m), N);
    }
    coefficients.push_back(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m))) * moment);
  }
  return coefficients;
}

MomentResult exact_moment(Ensemble ensemble, const Partition& gamma, long N, int power) {
  const int n = gamma.size();
  require(n >= 1, "exact_moment: empty partition");
  require(n <= N, "exact_moment: block size exceeds N");
  MomentResult result{ensemble, gamma, n, N, 0};
  switch (ensemble) {
    case Ensemble::unitary:
      if (power == 2) {
        result.value = unitary_imm_sq(gamma, N);
      } else if (power == 4) {
        require(gamma == Partition::row(n), "exact_moment: power 4 is only available for the permanent");
        result.value = unitary_per_4(n, N);
      } else {
        throw std::invalid_argument("exact_moment: power must be 2 or 4");
      }
      break;
    case Ensemble::coe:
      require(power == 2, "exact_moment: COE supports power 2 only");
      result.value = coe_imm_sq(gamma, N);
      break;
    case Ensemble::orthogonal:
      require(power == 2, "exact_moment: orthogonal supports power 2 only");
      result.value = orth_imm_sq(gamma, N);
      break;
  }
  return result;
}

RationalFunction unitary_imm_sq_rf(const Partition& gamma) {
  return RationalFunction::term(Rational(factorial(static_cast<unsigned long>(gamma.size()))),
                                poly_alpha_shifts(gamma, 1));
}

RationalFunction unitary_per_4_rf(int n) {
  const auto un = static_cast<unsigned long>(n);
  const BigInt h = factorial(un) * (BigInt(1) << n);
  const Rational prefactor = ratio(h * h, factorial(2 * un));
  RationalFunction f;
  for (const auto& lambda : partitions_of(n)) {
    const Rational g = g_value(lambda);
    const Partition doubled = double_partition(lambda);
    f += RationalFunction::term(prefactor * Rational(dim_sn(doubled)) * g * g, poly_alpha_shifts(doubled, 1));
  }
  return f;
}

RationalFunction coe_imm_sq_rf(const Partition& gamma) {
  const int n = gamma.size();
  const auto un = static_cast<unsigned long>(n);
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, un);
  const Rational prefactor = ratio(four_n * factorial(un), factorial(2 * un));
  RationalFunction f;
  for (const auto& lambda : partitions_of(n)) {
    const Rational G = G_value(lambda, gamma);
    auto shifts = poly_alpha_shifts(lambda, 2);
    for (auto& c : shifts) c += 1;
    f += RationalFunction::term(prefactor * Rational(dim_sn(double_partition(lambda))) * G * G, shifts);
  }
  return f;
}

RationalFunction orth_imm_sq_rf(const Partition& gamma) {
  const int n = gamma.size();
  const Rational prefactor =
      ratio(factorial(static_cast<unsigned long>(n)), dim_sn(gamma)) * hyperoctahedral_fraction(n);
  RationalFunction f;
  for (const auto& lambda : partitions_of(n)) {
    const Rational G = G_value(lambda, gamma);
    f += RationalFunction::term(prefactor * Rational(dim_sn(double_partition(lambda))) * G,
                                poly_alpha_shifts(lambda, 2));
  }
  return f;
}

Rational oracle_prop1(const Partition& gamma, long N) {
  const int n = gamma.size();
  require(n >= 1 && n <= 4, "oracle_prop1: n must be in [1, 4]");
  const auto group = all_permutations(n);
  Rational sum = 0;
  for (const auto& p1 : group) {
    const auto chi1 = character(gamma, p1);
    if (chi1 == 0) continue;
    for (const auto& p2 : group) {
      const auto chi2 = character(gamma, p2);
      if (chi2 == 0) continue;
      sum += wg_unitary(cycle_type(inverse(p2) * p1), N) * (chi1 * chi2);
    }
  }
  return sum;
}

Rational oracle_prop2(int n, long N) {
  require(n >= 1 && n <= 2, "oracle_prop2: n must be 1 or 2");
  const auto group = all_permutations(n);
  const IndexSequence identity = iota_sequence(n);
  const IndexSequence fixed = interleave(identity, identity);
  Rational sum = 0;
  for (const auto& a : group) {
    for (const auto& b : group) {
      const IndexSequence rows = interleave(images_of(a), images_of(b));
      for (const auto& c : group) {
        for (const auto& d : group) {
          const IndexSequence conj_cols = interleave(images_of(c), images_of(d));
          sum += unitary_entry_moment(rows, fixed, fixed, conj_cols, N);
        }
      }
    }
  }
  return sum;
}

Rational oracle_coe(const Partition& gamma, long N) {
  const int n = gamma.size();
  require(n >= 1 && n <= 3, "oracle_coe: n must be in [1, 3]");
  const auto group = all_permutations(n);
  const IndexSequence identity = iota_sequence(n);
  Rational sum = 0;
  for (const auto& a : group) {
    const auto chi_a = character(gamma, a);
    if (chi_a == 0) continue;
    const IndexSequence i = interleave(images_of(a), identity);
    for (const auto& b : group) {
      const auto chi_b = character(gamma, b);
      if (chi_b == 0) continue;
      sum += coe_entry_moment(i, interleave(identity, images_of(b)), N) * (chi_a * chi_b);
    }
  }
  return sum;
}

Rational oracle_orth(const Partition& gamma, long N) {
  const int n = gamma.size();
  require(n >= 1 && n <= 4, "oracle_orth: n must be in [1, 4]");
  const auto group = all_permutations(n);
  const IndexSequence identity = iota_sequence(n);
  const IndexSequence rows = interleave(identity, identity);
  Rational sum = 0;
  for (const auto& a : group) {
    const auto chi_a = character(gamma, a);
    if (chi_a == 0) continue;
    for (const auto& b : group) {
      const auto chi_b = character(gamma, b);
      if (chi_b == 0) continue;
      sum += orthogonal_entry_moment(rows, interleave(images_of(a), images_of(b)), N) * (chi_a * chi_b);
    }
  }
  return sum;
}

std::vector<std::vector<Rational>> oracle_perm_poly(int n, long N, Ensemble ensemble) {
  require(n >= 0 && n <= 3, "oracle_perm_poly: n must be in [0, 3]");
  require(ensemble != Ensemble::coe, "oracle_perm_poly: only unitary and orthogonal ensembles");
  std::vector<std::vector<Rational>> coefficients(static_cast<std::size_t>(n + 1),
                                                  std::vector<Rational>(static_cast<std::size_t>(n + 1)));

  // Each subset P of {1..n} with every bijection of P onto itself.
  struct Term {
    IndexSequence points;
    IndexSequence images;
  };
  std::vector<Term> terms;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSequence points;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) points.push_back(i + 1);
    }
    for (const auto& p : all_permutations(static_cast<int>(points.size()))) {
      IndexSequence images;
      for (int k = 0; k < p.degree(); ++k) images.push_back(points[static_cast<std::size_t>(p(k))]);
      terms.push_back({points, images});
    }
  }

  for (const auto& t1 : terms) {
    for (const auto& t2 : terms) {
      // Per_n(U - z1) contributes prod_{i in P1} U_{i, pi1(i)}; Per_n(U^dagger - z2)
      // contributes prod_{j in P2} conj(U_{pi2(j), j}).
      Rational moment;
      if (ensemble == Ensemble::unitary) {
        moment = unitary_entry_moment(t1.points, t1.images, t2.images, t2.points, N);
      } else {
        IndexSequence rows = t1.points;
        rows.insert(rows.end(), t2.images.begin(), t2.images.end());
        IndexSequence cols = t1.images;
        cols.insert(cols.end(), t2.points.begin(), t2.points.end());
        moment = orthogonal_entry_moment(rows, cols, N);
      }
      if (moment == 0) continue;
      const auto k1 = static_cast<std::size_t>(n) - t1.points.size();
      const auto k2 = static_cast<std::size_t>(n) - t2.points.size();
      coefficients[k1][k2] += (k1 + k2) % 2 == 0 ? moment : Rational(-moment);
    }
  }
  return coefficients;
}

Asymptotic asymptotic_check(AsymptoticFamily family, int n, std::optional<Partition> gamma) {
  require(n >= 1 && n <= 5, "asymptotic_check: n must be in [1, 5]");
  switch (family) {
    case AsymptoticFamily::prop2: return unitary_per_4_rf(n).asymptotic();
    case AsymptoticFamily::coe: return coe_imm_sq_rf(Partition::row(n)).asymptotic();
    case AsymptoticFamily::orth: {
      const Partition g = gamma.value_or(Partition::row(n));
      require(g.size() == n, "asymptotic_check: gamma must partition n");
      return orth_imm_sq_rf(g).asymptotic();
    }
  }
  throw std::invalid_argument("asymptotic_check: unknown family");
}

}  // namespace immanants
