#include "immanants/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace immanants {

namespace {

std::string plain(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& shift) { return Polynomial({shift, Rational(1)}); }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coefficients_.back(); }

Rational Polynomial::operator()(const Rational& N) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * N + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * other.coefficients_[j];
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::divide_linear(const Rational& shift) const {
  if (is_zero()) return {};
  // Synthetic division by N - root with root = -shift.
  const Rational root = -shift;
  std::vector<Rational> quotient(coefficients_.size() - 1);
  Rational carry = 0;
  for (std::size_t k = coefficients_.size(); k-- > 1;) {
    carry = coefficients_[k] + carry * root;
    quotient[k - 1] = carry;
  }
  if (coefficients_[0] + carry * root != 0) throw std::domain_error("divide_linear: not a root");
  return Polynomial(std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    const bool first = out.empty();
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (k == 0 || !unit) out += plain(magnitude);
    if (k > 0) {
      if (!unit) out += "*";
      out += "N";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RationalFunction RationalFunction::term(const Rational& coefficient, const std::vector<Rational>& shifts) {
  RationalFunction f;
  f.numerator_ = Polynomial::constant(coefficient);
  if (coefficient != 0) {
    for (const auto& c : shifts) ++f.denominator_[c];
  }
  return f;
}

int RationalFunction::denominator_degree() const noexcept {
  int degree = 0;
  for (const auto& [shift, mult] : denominator_) degree += mult;
  return degree;
}

bool RationalFunction::is_pole(long N) const {
  for (const auto& [shift, mult] : denominator_) {
    if (shift + N == 0) return true;
  }
  return false;
}

Rational RationalFunction::operator()(long N) const {
  Rational den = 1;
  for (const auto& [shift, mult] : denominator_) {
    const Rational factor = shift + N;
    if (factor == 0) throw std::domain_error("rational function evaluated at a pole N = " + std::to_string(N));
    for (int k = 0; k < mult; ++k) den *= factor;
  }
  return numerator_(Rational(N)) / den;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.numerator_.is_zero()) return *this;
  if (numerator_.is_zero()) return *this = other;

  std::map<Rational, int> lcm = denominator_;
  for (const auto& [shift, mult] : other.denominator_) lcm[shift] = std::max(lcm[shift], mult);

  auto lift = [&](const RationalFunction& f) {
    Polynomial p = f.numerator_;
    for (const auto& [shift, mult] : lcm) {
      const auto it = f.denominator_.find(shift);
      const int have = it == f.denominator_.end() ? 0 : it->second;
      for (int k = have; k < mult; ++k) p *= Polynomial::linear(shift);
    }
    return p;
  };
  numerator_ = lift(*this) + lift(other);
  denominator_ = std::move(lcm);
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& scale) {
  numerator_ *= Polynomial::constant(scale);
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction out = *this;
  for (auto it = out.denominator_.begin(); it != out.denominator_.end();) {
    while (it->second > 0 && !out.numerator_.is_zero() && out.numerator_(-it->first) == 0) {
      out.numerator_ = out.numerator_.divide_linear(it->first);
      --it->second;
    }
    it = it->second == 0 ? out.denominator_.erase(it) : std::next(it);
  }
  return out;
}

Asymptotic RationalFunction::asymptotic() const {
  if (numerator_.is_zero()) throw std::domain_error("asymptotic: zero function");
  return {denominator_degree() - numerator_.degree(), numerator_.leading()};
}

std::string RationalFunction::to_string() const {
  std::string num = numerator_.to_string();
  if (denominator_.empty()) return num;
  std::string den;
  for (const auto& [shift, mult] : denominator_) {
    if (!den.empty()) den += " ";
    std::string factor;
    if (shift == 0) {
      factor = "N";
    } else {
      factor = "(N " + std::string(shift < 0 ? "- " : "+ ") + plain(abs(shift)) + ")";
    }
    den += factor;
    if (mult > 1) den += "^" + std::to_string(mult);
  }
  if (numerator_.degree() > 0) num = "(" + num + ")";
  return num + " / (" + den + ")";
}

}  // namespace immanants
