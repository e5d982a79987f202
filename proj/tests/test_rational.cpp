#include "immanants/ratfunc.hpp"
#include "immanants/rational.hpp"

#include <doctest.h>

using namespace immanants;

TEST_CASE("rational serialization") {
  CHECK(to_string(ratio(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(to_string(ratio(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("6/4") == ratio(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(to_double(ratio(1, 4)) == 0.25);
}

TEST_CASE("polynomial arithmetic") {
  const auto p = Polynomial::linear(2) * Polynomial::linear(-1);  // N^2 + N - 2
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 10);
  CHECK(p.divide_linear(2) == Polynomial::linear(-1));
  CHECK_THROWS(p.divide_linear(5));
  CHECK(Polynomial().degree() == -1);
  CHECK((Polynomial::linear(1) + Polynomial::constant(-1)).to_string() == "N");
}

TEST_CASE("rational function sums and reduction") {
  // 1/(N (N+1)) + 1/(N+1) = 1/N
  auto f = RationalFunction::term(1, {0, 1});
  f += RationalFunction::term(1, {1});
  const auto r = f.reduced();
  CHECK(r.denominator_degree() == 1);
  CHECK(r.numerator() == Polynomial::constant(1));
  for (long N = 1; N < 10; ++N) CHECK(r(N) == ratio(1, N));
  CHECK(r.is_pole(0));
  CHECK_THROWS_AS(r(0), std::domain_error);
  const auto a = r.asymptotic();
  CHECK(a.decay == 1);
  CHECK(a.coefficient == 1);
  CHECK(RationalFunction::term(3, {0, 0, -1}).to_string() == "3 / ((N - 1) N^2)");
}
