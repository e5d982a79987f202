#pragma once

#include "immanants/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace immanants {

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions label conjugacy classes and irreducible characters of S_n as
/// well as the double cosets H_n \ S_2n / H_n. Comparison is lexicographic on
/// the parts, so sorting descending yields reverse-lexicographic order.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless the parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses a comma-separated part list such as "3,1,1". The empty string is
  /// the empty partition of 0.
  static Partition parse(std::string_view text);

  static Partition row(int n);     // (n)
  static Partition column(int n);  // (1^n)

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of parts equal to `part`.
  int multiplicity(int part) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
const std::vector<Partition>& partitions_of(int n);

/// Position of `lambda` inside partitions_of(lambda.size()).
std::size_t partition_index(const Partition& lambda);

Partition conjugate(const Partition& lambda);
Partition double_partition(const Partition& lambda);

/// z_lambda = prod_j j^{v_j} v_j!, the centralizer order of a permutation of
/// cycle type lambda.
BigInt z_of(const Partition& lambda);

/// |C_lambda| = n! / z_lambda.
BigInt class_size(const Partition& lambda);

/// Dimension of the irreducible S_n representation lambda, from the
/// product formula n! prod_{i<j} (l_i - l_j) / prod_i l_i! with
/// l_i = lambda_i + len - i.
BigInt dim_sn(const Partition& lambda);

/// |K_lambda| = 4^n n! |C_lambda| / 2^len, size of the double coset of type
/// lambda in S_2n.
BigInt double_coset_size(const Partition& lambda);

/// The linear-factor shifts c of [N]^(alpha)_lambda = prod (N + c), one per
/// box (i, j) with c = alpha (j - 1) - i + 1, in row-major box order.
std::vector<Rational> poly_alpha_shifts(const Partition& lambda, const Rational& alpha);

/// [N]^(alpha)_lambda at the integer N.
Rational poly_alpha(const Partition& lambda, long N, const Rational& alpha);

/// Shifts c of {N}_lambda = prod (N - 1 + e(i, j)), i.e. c = e(i, j) - 1.
std::vector<long> poly_brace_shifts(const Partition& lambda);

/// {N}_lambda at the integer N. Equals n!/d_lambda times the dimension of the
/// O(N) irreducible labelled by lambda.
Rational poly_brace(const Partition& lambda, long N);

}  // namespace immanants
