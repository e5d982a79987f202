#pragma once

#include "immanants/partitions.hpp"
#include "immanants/symgroup.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace immanants {

/// A perfect matching of {1, ..., 2n}, stored as sorted pairs (a < b).
class Matching {
 public:
  Matching() = default;

  /// Throws std::invalid_argument unless the pairs are disjoint and cover
  /// {1, ..., 2n}.
  explicit Matching(std::vector<std::pair<int, int>> blocks);

  /// Parses "1-2,3-4".
  static Matching parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::pair<int, int>>& blocks() const noexcept { return blocks_; }

  /// 1-based partner of the 1-based point x.
  int partner(int x) const;

  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::pair<int, int>> blocks_;
};

/// {{1,2},{3,4},...,{2n-1,2n}}.
Matching trivial_matching(int n);

/// Block {a, b} of m becomes {sigma(a), sigma(b)}.
Matching apply_perm(const Permutation& sigma, const Matching& m);

/// The unique sigma in M_n with m = sigma(t): sigma(2k-1) < sigma(2k) and
/// sigma(1) < sigma(3) < ... < sigma(2n-1).
Permutation canonical_rep(const Matching& m);

/// All (2n-1)!! canonical representatives M_n.
std::vector<Permutation> canonical_reps(int n);

/// Coset type of sigma in S_2n: half the cycle lengths of the graph whose
/// edges are the blocks of sigma(t) and of t.
Partition coset_type(const Permutation& sigma);
Partition coset_type(const Matching& m);

/// pi_o acts on odd points, pi_o(2k-1) = 2 pi(k) - 1; even points fixed.
Permutation lift_odd(const Permutation& pi);
/// pi_e acts on even points, pi_e(2k) = 2 pi(k); odd points fixed.
Permutation lift_even(const Permutation& pi);

/// Calls `visit` once for each element of the hyperoctahedral group H_n,
/// enumerated as pi_e pi_o xi with xi in S_2^n.
void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& visit);

/// H_n as a list. n <= 6.
std::vector<Permutation> hyperoctahedral(int n);

/// omega_lambda(mu) = |H_n|^-1 sum_{xi in H_n} chi_{2 lambda}(tau xi) for any
/// tau of coset type mu. Whole tables are memoized per n. n <= 7.
Rational zonal_spherical(const Partition& lambda, const Partition& mu);

/// g_lambda in closed form: 0 if lambda has more than two parts, else
/// (2 lambda_2)! lambda_1! / (4^lambda_2 lambda_2!).
Rational g_value(const Partition& lambda);

/// G_{lambda, gamma} = sum_mu |C_mu| omega_lambda(mu) chi_gamma(mu).
Rational G_value(const Partition& lambda, const Partition& gamma);

enum class FactorizationMode { character, zonal };

/// Number of solutions of pi_1 ... pi_r = 1 with pi_i in the class (character
/// mode, in S_n) or double coset (zonal mode, in S_2n) labelled alpha_i.
Rational count_factorizations(std::span<const Partition> alphas, FactorizationMode mode);

}  // namespace immanants
