#pragma once

#include "immanants/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace immanants {

/// Polynomial in N with exact rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial linear(const Rational& shift);  // N + shift

  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational leading() const;

  Rational operator()(const Rational& N) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  /// Exact division by (N + shift); requires -shift to be a root.
  Polynomial divide_linear(const Rational& shift) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Leading behaviour f(N) ~ coefficient * N^(-decay) as N -> infinity.
struct Asymptotic {
  int decay = 0;
  Rational coefficient;
};

/// numerator(N) / prod_c (N + c)^m_c. Denominators stay factored so poles
/// are read off the shifts directly.
class RationalFunction {
 public:
  RationalFunction() = default;

  /// coefficient / prod_{c in shifts} (N + c).
  static RationalFunction term(const Rational& coefficient, const std::vector<Rational>& shifts);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const std::map<Rational, int>& denominator() const noexcept { return denominator_; }
  int denominator_degree() const noexcept;

  /// Integer N at which the denominator vanishes.
  bool is_pole(long N) const;

  /// Throws std::domain_error at a pole.
  Rational operator()(long N) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator*=(const Rational& scale);

  /// Cancels common linear factors between numerator and denominator.
  RationalFunction reduced() const;

  /// Throws std::domain_error for the zero function.
  Asymptotic asymptotic() const;

  /// Human-readable form, e.g. "(12*N^2 - 4*N + 8) / (N^2 (N - 1) (N + 1) ...)".
  std::string to_string() const;

 private:
  Polynomial numerator_;
  std::map<Rational, int> denominator_;
};

}  // namespace immanants
