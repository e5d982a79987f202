#include "immanants/conjecture.hpp"
#include "immanants/moments.hpp"
#include "immanants/weingarten.hpp"

#include <doctest.h>

using namespace immanants;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
}  // namespace

TEST_CASE("small cases by hand") {
  for (long N = 3; N <= 12; ++N) {
    CHECK(conjecture_lhs(P("1"), N) == ratio(1, N));
    CHECK(conjecture_rhs(P("1"), N) == ratio(1, N));
    CHECK(conjecture_lhs(P("2"), N) == ratio(3, (N - 1) * (N + 2)));
    CHECK(conjecture_rhs(P("2"), N) == ratio(3, (N - 1) * (N + 2)));
    CHECK(conjecture_lhs(P("1,1"), N) == ratio(3, N * (N - 1)));
  }
  CHECK_THROWS_AS(conjecture_rhs(P("2"), 1), PoleError);
}

TEST_CASE("degree bound and default range") {
  CHECK(conjecture_degree_bound(1) == 2);
  CHECK(conjecture_degree_bound(6) == 6 * 11 + 6);
  CHECK(conjecture_point_count(6) == 144);
  CHECK(default_conjecture_range(6) == std::pair<long, long>{13, 156});
}

TEST_CASE("sweeps") {
  for (const auto& r : check_conjecture(1, 3, 10)) {
    CHECK(r.verified);
    CHECK(r.tested_N.size() == 8);
    CHECK(r.certified);
  }
  for (const auto& r : check_conjecture(2, 5, 30)) CHECK(r.verified);
  const auto six = check_conjecture(6, 13, 72);
  CHECK(six.size() == 11);
  for (const auto& r : six) {
    CHECK(r.verified);
    CHECK_FALSE(r.first_failure);
  }
  CHECK_THROWS_AS(check_conjecture(8, 17, 20), std::invalid_argument);
}

TEST_CASE("pole points are recorded, not failed") {
  const auto reports = check_conjecture(2, 1, 6);
  for (const auto& r : reports) {
    CHECK(r.verified);
    CHECK_FALSE(r.skipped_poles.empty());
  }
}

TEST_CASE("orthogonal moments follow the brace polynomial") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : partitions_of(n)) {
      for (long N = 2 * n + 1; N <= 2 * n + 6; ++N) {
        CHECK(orth_imm_sq(g, N) == Rational(factorial(static_cast<unsigned long>(n))) / poly_brace(g, N));
      }
    }
  }
}

TEST_CASE("worker count does not change results") {
  const auto a = check_conjecture(4, 9, 20, 1);
  const auto b = check_conjecture(4, 9, 20, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].gamma == b[i].gamma);
    CHECK(a[i].tested_N == b[i].tested_N);
    CHECK(a[i].verified == b[i].verified);
  }
}
