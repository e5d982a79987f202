#include "immanants/matchings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace immanants {

Matching::Matching(std::vector<std::pair<int, int>> blocks) : blocks_(std::move(blocks)) {
  const auto points = 2 * blocks_.size();
  std::vector<char> seen(points + 1, 0);
  for (auto& [a, b] : blocks_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > static_cast<int>(points) || a == b || seen[static_cast<std::size_t>(a)] ||
        seen[static_cast<std::size_t>(b)]) {
      throw std::invalid_argument("matching blocks must be disjoint pairs covering 1..2n");
    }
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Matching Matching::parse(std::string_view text) {
  std::vector<std::pair<int, int>> blocks;
  if (text.empty()) return Matching{};
  auto number = [&](std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad matching '" + std::string(text) + "'");
    }
    return value;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) throw std::invalid_argument("bad matching '" + std::string(text) + "'");
    blocks.emplace_back(number(token.substr(0, dash)), number(token.substr(dash + 1)));
    pos = comma + 1;
  }
  return Matching(std::move(blocks));
}

int Matching::partner(int x) const {
  for (const auto& [a, b] : blocks_) {
    if (a == x) return b;
    if (b == x) return a;
  }
  throw std::out_of_range("Matching::partner: point not covered");
}

std::string Matching::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i].first) + "-" + std::to_string(blocks_[i].second);
  }
  return out;
}

Matching trivial_matching(int n) {
  if (n < 1) throw std::invalid_argument("trivial_matching: n must be positive");
  std::vector<std::pair<int, int>> blocks;
  for (int k = 1; k <= n; ++k) blocks.emplace_back(2 * k - 1, 2 * k);
  return Matching(std::move(blocks));
}

Matching apply_perm(const Permutation& sigma, const Matching& m) {
  if (sigma.degree() != 2 * m.n()) throw std::invalid_argument("apply_perm: degree mismatch");
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(m.blocks().size());
  for (const auto& [a, b] : m.blocks()) blocks.emplace_back(sigma(a - 1) + 1, sigma(b - 1) + 1);
  return Matching(std::move(blocks));
}

Permutation canonical_rep(const Matching& m) {
  // Blocks are kept sorted by their smaller element.
  std::vector<int> images;
  images.reserve(2 * m.blocks().size());
  for (const auto& [a, b] : m.blocks()) {
    images.push_back(a - 1);
    images.push_back(b - 1);
  }
  return Permutation(std::move(images));
}

namespace {

void extend_matchings(std::vector<int>& images, std::vector<char>& used, std::vector<Permutation>& out) {
  const auto points = used.size();
  const auto first = std::find(used.begin(), used.end(), 0);
  if (first == used.end()) {
    out.emplace_back(images);
    return;
  }
  const auto a = static_cast<std::size_t>(first - used.begin());
  used[a] = 1;
  for (std::size_t b = a + 1; b < points; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    images.push_back(static_cast<int>(a));
    images.push_back(static_cast<int>(b));
    extend_matchings(images, used, out);
    images.resize(images.size() - 2);
    used[b] = 0;
  }
  used[a] = 0;
}

// Coset type from the images of sigma (0-based, degree 2n).
Partition coset_type_of_images(const int* images, int degree) {
  std::vector<int> mate(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; k += 2) {
    mate[static_cast<std::size_t>(images[k])] = images[k + 1];
    mate[static_cast<std::size_t>(images[k + 1])] = images[k];
  }
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> parts;
  for (int start = 0; start < degree; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int edges = 0;
    int v = start;
    do {
      const int w = v ^ 1;
      seen[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(w)] = 1;
      ++edges;
      v = mate[static_cast<std::size_t>(w)];
    } while (v != start);
    parts.push_back(edges);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

// Cycle type from 0-based images, avoiding Permutation validation cost.
Partition cycle_type_of_images(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(images[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>{});
  return Partition(std::move(lengths));
}

// A permutation of S_n with cycle type mu, cycles on consecutive points.
Permutation class_representative(const Partition& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int part : mu.parts()) {
    for (int k = 0; k < part; ++k) images[static_cast<std::size_t>(start + k)] = start + (k + 1) % part;
    start += part;
  }
  return Permutation(std::move(images));
}

using ZonalTable = std::vector<std::vector<Rational>>;  // [lambda][mu]

ZonalTable build_zonal_table(int n) {
  const auto shapes = partitions_of(n);
  const int degree = 2 * n;
  const BigInt order = factorial(static_cast<unsigned long>(n)) * (BigInt(1) << n);

  ZonalTable table(shapes.size(), std::vector<Rational>(shapes.size()));
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::vector<int> h(static_cast<std::size_t>(degree));
  std::vector<int> product(static_cast<std::size_t>(degree));

  for (std::size_t m = 0; m < shapes.size(); ++m) {
    const Permutation tau = lift_odd(class_representative(shapes[m]));
    std::map<Partition, long> histogram;
    std::iota(pi.begin(), pi.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        for (int k = 0; k < n; ++k) {
          const int flip = static_cast<int>((mask >> k) & 1u);
          h[static_cast<std::size_t>(2 * k)] = 2 * pi[static_cast<std::size_t>(k)] + flip;
          h[static_cast<std::size_t>(2 * k + 1)] = 2 * pi[static_cast<std::size_t>(k)] + (1 - flip);
        }
        for (int x = 0; x < degree; ++x) product[static_cast<std::size_t>(x)] = tau(h[static_cast<std::size_t>(x)]);
        ++histogram[cycle_type_of_images(product)];
      }
    } while (std::next_permutation(pi.begin(), pi.end()));

    for (std::size_t l = 0; l < shapes.size(); ++l) {
      const Partition doubled = double_partition(shapes[l]);
      BigInt sum = 0;
      for (const auto& [type, count] : histogram) sum += BigInt(character(doubled, type)) * count;
      Rational value(sum, order);
      value.canonicalize();
      table[l][m] = value;
    }
  }
  return table;
}

const ZonalTable& zonal_table(int n) {
  static std::mutex mutex;
  static std::map<int, ZonalTable> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build_zonal_table(n)).first;
  return it->second;
}

}  // namespace

std::vector<Permutation> canonical_reps(int n) {
  std::vector<Permutation> out;
  std::vector<int> images;
  std::vector<char> used(static_cast<std::size_t>(2 * n), 0);
  extend_matchings(images, used, out);
  return out;
}

Partition coset_type(const Permutation& sigma) {
  if (sigma.degree() % 2 != 0) throw std::invalid_argument("coset_type: degree must be even");
  return coset_type_of_images(sigma.images().data(), sigma.degree());
}

Partition coset_type(const Matching& m) { return coset_type(canonical_rep(m)); }

Permutation lift_odd(const Permutation& pi) {
  std::vector<int> images(static_cast<std::size_t>(2 * pi.degree()));
  for (int k = 0; k < pi.degree(); ++k) {
    images[static_cast<std::size_t>(2 * k)] = 2 * pi(k);
    images[static_cast<std::size_t>(2 * k + 1)] = 2 * k + 1;
  }
  return Permutation(std::move(images));
}

Permutation lift_even(const Permutation& pi) {
  std::vector<int> images(static_cast<std::size_t>(2 * pi.degree()));
  for (int k = 0; k < pi.degree(); ++k) {
    images[static_cast<std::size_t>(2 * k)] = 2 * k;
    images[static_cast<std::size_t>(2 * k + 1)] = 2 * pi(k) + 1;
  }
  return Permutation(std::move(images));
}

void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("hyperoctahedral: n must be positive");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<int> h(static_cast<std::size_t>(2 * n));
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int k = 0; k < n; ++k) {
        const int flip = static_cast<int>((mask >> k) & 1u);
        h[static_cast<std::size_t>(2 * k)] = 2 * pi[static_cast<std::size_t>(k)] + flip;
        h[static_cast<std::size_t>(2 * k + 1)] = 2 * pi[static_cast<std::size_t>(k)] + (1 - flip);
      }
      visit(Permutation(h));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

std::vector<Permutation> hyperoctahedral(int n) {
  if (n > 6) throw std::invalid_argument("hyperoctahedral: n must be at most 6");
  std::vector<Permutation> out;
  for_each_hyperoctahedral(n, [&](const Permutation& h) { out.push_back(h); });
  return out;
}

Rational zonal_spherical(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("zonal_spherical: size mismatch");
  const int n = lambda.size();
  if (n < 1 || n > 7) throw std::invalid_argument("zonal_spherical: n must be in [1, 7]");
  return zonal_table(n)[partition_index(lambda)][partition_index(mu)];
}

Rational g_value(const Partition& lambda) {
  if (lambda.length() > 2) return 0;
  const auto l1 = static_cast<unsigned long>(lambda[0]);
  const auto l2 = static_cast<unsigned long>(lambda[1]);
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, l2);
  Rational value(factorial(2 * l2) * factorial(l1), four_pow * factorial(l2));
  value.canonicalize();
  return value;
}

Rational G_value(const Partition& lambda, const Partition& gamma) {
  if (lambda.size() != gamma.size()) throw std::invalid_argument("G_value: size mismatch");
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Rational> cache;
  auto key = std::make_pair(lambda, gamma);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Rational sum = 0;
  for (const auto& mu : partitions_of(lambda.size())) {
    sum += Rational(class_size(mu)) * zonal_spherical(lambda, mu) * character(gamma, mu);
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), sum);
  return sum;
}

Rational count_factorizations(std::span<const Partition> alphas, FactorizationMode mode) {
  if (alphas.empty()) throw std::invalid_argument("count_factorizations: need at least one factor");
  const int n = alphas.front().size();
  for (const auto& a : alphas) {
    if (a.size() != n) throw std::invalid_argument("count_factorizations: size mismatch");
  }
  const long r = static_cast<long>(alphas.size());

  Rational sum = 0;
  Rational prefactor = 1;
  if (mode == FactorizationMode::character) {
    for (const auto& a : alphas) prefactor *= Rational(class_size(a));
    prefactor /= Rational(factorial(static_cast<unsigned long>(n)));
    for (const auto& beta : partitions_of(n)) {
      Rational term = 1;
      for (const auto& a : alphas) term *= character(beta, a);
      const Rational d(dim_sn(beta));
      for (long k = 0; k < r - 2; ++k) term /= d;
      for (long k = r - 2; k < 0; ++k) term *= d;
      sum += term;
    }
  } else {
    for (const auto& a : alphas) prefactor *= Rational(double_coset_size(a));
    prefactor /= Rational(factorial(static_cast<unsigned long>(2 * n)));
    for (const auto& beta : partitions_of(n)) {
      Rational term(dim_sn(double_partition(beta)));
      for (const auto& a : alphas) term *= zonal_spherical(beta, a);
      sum += term;
    }
  }
  return prefactor * sum;
}

}  // namespace immanants
