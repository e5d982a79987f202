#include "immanants/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace immanants {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition{} : Partition({n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void extend(std::vector<int>& prefix, int remaining, int max_part, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  if (n > 24) throw std::invalid_argument("partitions_of: n exceeds the enumeration bound 24");
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(prefix, n, n, out);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& all = partitions_of(lambda.size());
  // Descending order.
  const auto it = std::lower_bound(all.begin(), all.end(), lambda, std::greater<>{});
  if (it == all.end() || *it != lambda) throw std::logic_error("partition_index: not found");
  return static_cast<std::size_t>(it - all.begin());
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

Partition double_partition(const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  for (int& p : parts) p *= 2;
  return Partition(std::move(parts));
}

BigInt z_of(const Partition& lambda) {
  BigInt z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto v = static_cast<unsigned long>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), v);
    z *= power * factorial(v);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& lambda) {
  return factorial(static_cast<unsigned long>(lambda.size())) / z_of(lambda);
}

BigInt dim_sn(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<long> l(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) l[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

  BigInt numerator = factorial(static_cast<unsigned long>(lambda.size()));
  BigInt denominator = 1;
  for (int i = 0; i < len; ++i) {
    denominator *= factorial(static_cast<unsigned long>(l[static_cast<std::size_t>(i)]));
    for (int j = i + 1; j < len; ++j) numerator *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)];
  }
  return numerator / denominator;
}

BigInt double_coset_size(const Partition& lambda) {
  const auto n = static_cast<unsigned long>(lambda.size());
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  BigInt two_len;
  mpz_ui_pow_ui(two_len.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
  return four_n * factorial(n) * class_size(lambda) / two_len;
}

std::vector<Rational> poly_alpha_shifts(const Partition& lambda, const Rational& alpha) {
  std::vector<Rational> shifts;
  shifts.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) {
      shifts.push_back(alpha * (j - 1) - i + 1);
    }
  }
  return shifts;
}

Rational poly_alpha(const Partition& lambda, long N, const Rational& alpha) {
  Rational product = 1;
  for (const auto& c : poly_alpha_shifts(lambda, alpha)) product *= c + N;
  return product;
}

std::vector<long> poly_brace_shifts(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<long> shifts;
  shifts.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) {
      const auto ui = static_cast<std::size_t>(i - 1);
      const auto uj = static_cast<std::size_t>(j - 1);
      const long e = i <= j ? lambda[ui] + lambda[uj] - i - j + 1 : -conj[ui] - conj[uj] + i + j - 1;
      shifts.push_back(e - 1);
    }
  }
  return shifts;
}

Rational poly_brace(const Partition& lambda, long N) {
  Rational product = 1;
  for (long c : poly_brace_shifts(lambda)) product *= N + c;
  return product;
}

}  // namespace immanants
