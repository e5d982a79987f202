#include "immanants/rational.hpp"

#include <stdexcept>

namespace immanants {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
  };

  const auto slash = text.find('/');
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return ratio(num, den);
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace immanants
