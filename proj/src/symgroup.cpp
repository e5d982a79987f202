#include "immanants/symgroup.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace immanants {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int image : images_) {
    if (image < 0 || image >= degree() || seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(image)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> one_line) {
  std::vector<int> images(one_line.begin(), one_line.end());
  for (int& x : images) --x;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> images = identity(degree).images();
    const std::vector<int> points(cycle);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int from = points[k] - 1;
      const int to = points[(k + 1) % points.size()] - 1;
      if (from < 0 || from >= degree) throw std::invalid_argument("cycle point out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
    // Each listed cycle is applied after those to its right.
    result = compose(result, Permutation(std::move(images)));
  }
  return result;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> one_line;
  if (text.empty()) return Permutation{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
    }
    one_line.push_back(value);
    pos = comma + 1;
  }
  return from_one_line(one_line);
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(p(i))] = i;
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
  const int m = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> lengths;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>{});
  return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(int m) {
  if (m < 0 || m > 10) throw std::invalid_argument("all_permutations: degree must be in [0, 10]");
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

// Murnaghan-Nakayama on beta-sets. A shape with parts l_0 >= ... >= l_{k-1}
// is encoded as the strictly decreasing beads b_i = l_i + (k - 1 - i);
// removing a rim hook of length r moves one bead from b to b - r onto an
// empty position, with sign (-1)^(beads strictly between).
using Key = std::pair<std::vector<int>, std::vector<int>>;

std::shared_mutex cache_mutex;
std::map<Key, std::int64_t> cache;

std::int64_t mn_recurse(const std::vector<int>& shape, const std::vector<int>& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;

  Key key{shape, cycles};
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const int r = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const int k = static_cast<int>(shape.size());

  std::vector<int> beads(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (k - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) {
    const int from = beads[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int between = 0;
    for (int b : beads) between += (b > to && b < from) ? 1 : 0;

    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>{});
    std::vector<int> next;
    for (int j = 0; j < k; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (k - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = mn_recurse(next, rest);
    total += (between % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(cache_mutex);
  cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character: |lambda| != |mu|");
  return mn_recurse(lambda.parts(), mu.parts());
}

}  // namespace immanants
