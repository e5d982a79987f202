#pragma once

#include "immanants/partitions.hpp"
#include "immanants/ratfunc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace immanants {

enum class Ensemble { unitary, orthogonal, coe };

std::string_view to_string(Ensemble ensemble);
/// Throws std::invalid_argument for unknown names.
Ensemble parse_ensemble(std::string_view name);

/// An exact second (or fourth) moment of an immanant of the top-left n x n block.
struct MomentResult {
  Ensemble ensemble = Ensemble::unitary;
  Partition gamma;
  int n = 0;
  long N = 0;
  Rational value;
};

// Closed forms. All throw PoleError when a contributing denominator vanishes.

/// <|Imm_gamma(U)|^2> over U(N) = n! / [N]^(1)_gamma.
Rational unitary_imm_sq(const Partition& gamma, long N);

/// <|Per_n(U)|^4> over U(N) = ((2^n n!)^2 / (2n)!) sum_lambda d_{2 lambda} g_lambda^2 / [N]^(1)_{2 lambda}.
Rational unitary_per_4(int n, long N);

/// <|Imm_gamma(V)|^2> over COE(N) = (4^n n!/(2n)!) sum_lambda d_{2 lambda} G_{lambda,gamma}^2 / [N+1]^(2)_lambda.
Rational coe_imm_sq(const Partition& gamma, long N);

/// <Imm_gamma(O)^2> over O(N) = (n!/d_gamma)(2^n n!/(2n)!) sum_lambda d_{2 lambda} G_{lambda,gamma} / [N]^(2)_lambda.
Rational orth_imm_sq(const Partition& gamma, long N);

/// Coefficients of <Per_n(U - z1) Per_n(U^dagger - z2)>, entry m holding the
/// coefficient of (z1 z2)^(n - m), namely C(n, m) <|Per_m(U)|^2>. Unitary or
/// orthogonal only.
std::vector<Rational> perm_poly_quad(int n, long N, Ensemble ensemble);

/// The closed-form moment that an MC run of (ensemble, gamma, power)
/// estimates. Throws std::invalid_argument for unsupported combinations.
MomentResult exact_moment(Ensemble ensemble, const Partition& gamma, long N, int power);

// The same closed forms as rational functions of N.
RationalFunction unitary_imm_sq_rf(const Partition& gamma);
RationalFunction unitary_per_4_rf(int n);
RationalFunction coe_imm_sq_rf(const Partition& gamma);
RationalFunction orth_imm_sq_rf(const Partition& gamma);

// Oracles: the earliest sums in each derivation, evaluated by brute force
// over permutations and matchings with the raw entry-moment expansions.

/// sum_{pi1, pi2 in S_n} chi(pi1) chi(pi2) W_U(pi2^-1 pi1). n <= 4.
Rational oracle_prop1(const Partition& gamma, long N);

/// sum over a, b, c, d in S_n of <prod_i U_{a(i) i} U_{b(i) i} conj(U_{i c(i)}) conj(U_{i d(i)})>. n <= 2.
Rational oracle_prop2(int n, long N);

/// sum_{a, b} chi(a) chi(b) <prod_i V_{a(i) i} conj(V_{i b(i)})> over COE(N). n <= 3.
Rational oracle_coe(const Partition& gamma, long N);

/// sum_{a, b} chi(a) chi(b) <prod_i O_{i a(i)} O_{i b(i)}> over O(N). n <= 4.
Rational oracle_orth(const Partition& gamma, long N);

/// Brute-force expansion of <Per_n(U - z1) Per_n(U^dagger - z2)> over every
/// pair of row subsets and bijections. Entry [k1][k2] is the coefficient of
/// z1^k1 z2^k2. n <= 3.
std::vector<std::vector<Rational>> oracle_perm_poly(int n, long N, Ensemble ensemble);

enum class AsymptoticFamily { prop2, coe, orth };

/// Leading large-N behaviour of P_n (prop2), I^C_(n) (coe) or I^O_gamma
/// (orth, gamma defaults to (n)), from exact rational-function degree
/// analysis. n <= 5.
Asymptotic asymptotic_check(AsymptoticFamily family, int n, std::optional<Partition> gamma = std::nullopt);

}  // namespace immanants
