#pragma once

#include "immanants/partitions.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace immanants {

/// A permutation of {0, ..., m-1}.
///
/// Points are 0-based in the C++ API; the text form is 1-based one-line
/// notation ("3,1,2" sends 1 -> 3, 2 -> 1, 3 -> 2). Products apply right to
/// left: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  /// `images[i]` is the image of point i (0-based). Throws
  /// std::invalid_argument unless this is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// 1-based one-line notation.
  static Permutation from_one_line(std::span<const int> one_line);

  /// Product of disjoint or overlapping cycles written 1-based, applied right
  /// to left, e.g. from_cycles(10, {{2, 3}, {6, 8, 9, 7}}).
  static Permutation from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles);

  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const noexcept { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// Cycle lengths, sorted, as a partition of the degree.
Partition cycle_type(const Permutation& p);

/// Every element of S_m in lexicographic one-line order. m <= 10.
std::vector<Permutation> all_permutations(int m);

/// Irreducible character chi_lambda evaluated on the class mu, by the
/// Murnaghan-Nakayama rule. Results are memoized per (shape, remaining
/// cycle lengths) in a process-wide cache that is safe for concurrent use.
/// Throws std::invalid_argument when |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

inline std::int64_t character(const Partition& lambda, const Permutation& p) {
  return character(lambda, cycle_type(p));
}

}  // namespace immanants
