#pragma once

#include "immanants/partitions.hpp"
#include "immanants/symgroup.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace immanants {

/// An exact formula hit a vanishing denominator [N]_lambda (or {N}_lambda).
/// Carries the offending shape and evaluation point.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, Partition lambda, long N)
      : std::domain_error(what), lambda_(std::move(lambda)), N_(N) {}

  const Partition& lambda() const noexcept { return lambda_; }
  long N() const noexcept { return N_; }

 private:
  Partition lambda_;
  long N_;
};

/// Sequence of matrix indices; values are 1-based like the matrix entries
/// they address, but any integers work since only equality matters.
using IndexSequence = std::vector<int>;

/// prod_k [j_k == m_{tau(k)}]. Throws std::invalid_argument on length mismatch.
bool delta_match(const Permutation& tau, std::span<const int> j, std::span<const int> m);

/// prod_k [i_{sigma(2k-1)} == i_{sigma(2k)}]: i is constant on every block of
/// the matching sigma(t).
bool pair_match(const Permutation& sigma, std::span<const int> i);

/// (i_1, j_1, i_2, j_2, ...).
IndexSequence interleave(std::span<const int> i, std::span<const int> j);

/// Unitary Weingarten function on the class mu:
/// (1/n!) sum_lambda d_lambda chi_lambda(mu) / [N]^(1)_lambda.
Rational wg_unitary(const Partition& mu, long N);

/// Orthogonal Weingarten function on the coset type mu:
/// (2^n n!/(2n)!) sum_lambda d_{2 lambda} omega_lambda(mu) / [N]^(2)_lambda.
Rational wg_orthogonal(const Partition& mu, long N);

/// COE Weingarten function: the orthogonal one at N + 1.
Rational wg_coe(const Partition& mu, long N);

// Haar averages of monomials in matrix entries, straight from the Weingarten
// expansions. These do not know anything about immanants and serve as the
// independent route for the moment oracles.

/// <U_{a_1 b_1} ... U_{a_k b_k} conj(U_{c_1 d_1}) ... conj(U_{c_k' d_k'})> over U(N).
Rational unitary_entry_moment(std::span<const int> a, std::span<const int> b, std::span<const int> c,
                              std::span<const int> d, long N);

/// <O_{i_1 j_1} ... O_{i_m j_m}> over O(N).
Rational orthogonal_entry_moment(std::span<const int> rows, std::span<const int> cols, long N);

/// <V_{i_1 i_2} ... V_{i_{2k-1} i_{2k}} conj(V_{j_1 j_2}) ... conj(V_{j_{2k'-1} j_{2k'}})> over COE(N).
Rational coe_entry_moment(std::span<const int> i, std::span<const int> j, long N);

}  // namespace immanants
