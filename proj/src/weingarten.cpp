#include "immanants/weingarten.hpp"

#include "immanants/matchings.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace immanants {

namespace {

enum class Kind { unitary, orthogonal };

Rational compute_unitary(const Partition& mu, long N) {
  const int n = mu.size();
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto chi = character(lambda, mu);
    if (chi == 0) continue;
    const Rational content = poly_alpha(lambda, N, 1);
    if (content == 0) {
      throw PoleError("unitary Weingarten pole: [N]^(1)_" + lambda.to_string() + " vanishes at N = " + std::to_string(N),
                      lambda, N);
    }
    sum += Rational(dim_sn(lambda)) * chi / content;
  }
  return sum / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational compute_orthogonal(const Partition& mu, long N) {
  const int n = mu.size();
  if (n == 0) return 1;
  Rational sum = 0;
  for (const auto& lambda : partitions_of(n)) {
    const Rational omega = zonal_spherical(lambda, mu);
    if (omega == 0) continue;
    const Rational zonal = poly_alpha(lambda, N, 2);
    if (zonal == 0) {
      throw PoleError("orthogonal Weingarten pole: [N]^(2)_" + lambda.to_string() + " vanishes at N = " +
                          std::to_string(N),
                      lambda, N);
    }
    sum += Rational(dim_sn(double_partition(lambda))) * omega / zonal;
  }
  const auto un = static_cast<unsigned long>(n);
  return sum * ratio(factorial(un) * (BigInt(1) << n), factorial(2 * un));
}

Rational cached(Kind kind, const Partition& mu, long N) {
  static std::mutex mutex;
  static std::map<std::tuple<Kind, Partition, long>, Rational> cache;
  const auto key = std::make_tuple(kind, mu, N);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Rational value = kind == Kind::unitary ? compute_unitary(mu, N) : compute_orthogonal(mu, N);
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

const std::vector<Permutation>& symmetric_group(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> groups;
  std::lock_guard lock(mutex);
  auto it = groups.find(m);
  if (it == groups.end()) it = groups.emplace(m, all_permutations(m)).first;
  return it->second;
}

const std::vector<Permutation>& matching_reps(int k) {
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> reps;
  std::lock_guard lock(mutex);
  auto it = reps.find(k);
  if (it == reps.end()) it = reps.emplace(k, canonical_reps(k)).first;
  return it->second;
}

}  // namespace

bool delta_match(const Permutation& tau, std::span<const int> j, std::span<const int> m) {
  if (j.size() != m.size() || static_cast<int>(j.size()) != tau.degree()) {
    throw std::invalid_argument("delta_match: length mismatch");
  }
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] != m[static_cast<std::size_t>(tau(static_cast<int>(k)))]) return false;
  }
  return true;
}

bool pair_match(const Permutation& sigma, std::span<const int> i) {
  if (static_cast<int>(i.size()) != sigma.degree() || i.size() % 2 != 0) {
    throw std::invalid_argument("pair_match: length mismatch");
  }
  for (int k = 0; k < sigma.degree(); k += 2) {
    if (i[static_cast<std::size_t>(sigma(k))] != i[static_cast<std::size_t>(sigma(k + 1))]) return false;
  }
  return true;
}

IndexSequence interleave(std::span<const int> i, std::span<const int> j) {
  if (i.size() != j.size()) throw std::invalid_argument("interleave: length mismatch");
  IndexSequence out;
  out.reserve(2 * i.size());
  for (std::size_t k = 0; k < i.size(); ++k) {
    out.push_back(i[k]);
    out.push_back(j[k]);
  }
  return out;
}

Rational wg_unitary(const Partition& mu, long N) { return cached(Kind::unitary, mu, N); }

Rational wg_orthogonal(const Partition& mu, long N) { return cached(Kind::orthogonal, mu, N); }

Rational wg_coe(const Partition& mu, long N) { return wg_orthogonal(mu, N + 1); }

Rational unitary_entry_moment(std::span<const int> a, std::span<const int> b, std::span<const int> c,
                              std::span<const int> d, long N) {
  if (a.size() != b.size() || c.size() != d.size()) {
    throw std::invalid_argument("unitary_entry_moment: row/column length mismatch");
  }
  if (a.size() != c.size()) return 0;
  const int k = static_cast<int>(a.size());
  std::vector<const Permutation*> rows;
  std::vector<const Permutation*> cols;
  for (const auto& p : symmetric_group(k)) {
    if (delta_match(p, a, c)) rows.push_back(&p);
    if (delta_match(p, b, d)) cols.push_back(&p);
  }
  Rational sum = 0;
  for (const auto* sigma : rows) {
    const Permutation sigma_inv = inverse(*sigma);
    for (const auto* tau : cols) sum += wg_unitary(cycle_type(sigma_inv * *tau), N);
  }
  return sum;
}

Rational orthogonal_entry_moment(std::span<const int> rows, std::span<const int> cols, long N) {
  if (rows.size() != cols.size()) throw std::invalid_argument("orthogonal_entry_moment: length mismatch");
  if (rows.size() % 2 != 0) return 0;
  const int k = static_cast<int>(rows.size() / 2);
  std::vector<const Permutation*> row_pairings;
  std::vector<const Permutation*> col_pairings;
  for (const auto& m : matching_reps(k)) {
    if (pair_match(m, rows)) row_pairings.push_back(&m);
    if (pair_match(m, cols)) col_pairings.push_back(&m);
  }
  Rational sum = 0;
  for (const auto* sigma : row_pairings) {
    const Permutation sigma_inv = inverse(*sigma);
    for (const auto* tau : col_pairings) sum += wg_orthogonal(coset_type(sigma_inv * *tau), N);
  }
  return sum;
}

Rational coe_entry_moment(std::span<const int> i, std::span<const int> j, long N) {
  if (i.size() % 2 != 0 || j.size() % 2 != 0) throw std::invalid_argument("coe_entry_moment: odd length");
  if (i.size() != j.size()) return 0;
  Rational sum = 0;
  for (const auto& tau : symmetric_group(static_cast<int>(i.size()))) {
    if (delta_match(tau, i, j)) sum += wg_coe(coset_type(tau), N);
  }
  return sum;
}

}  // namespace immanants
