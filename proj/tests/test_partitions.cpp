#include "immanants/partitions.hpp"
#include "support/brute.hpp"

#include <doctest.h>

using namespace immanants;

namespace {
Partition P(const char* text) { return Partition::parse(text); }
}  // namespace

TEST_CASE("partition construction and parsing") {
  CHECK(P("3,1,1").parts() == std::vector<int>{3, 1, 1});
  CHECK(P("3,1,1").size() == 5);
  CHECK(P("3,1,1").length() == 3);
  CHECK(P("3,1,1").to_string() == "3,1,1");
  CHECK(P("2,1")[5] == 0);
  CHECK_THROWS_AS(P("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(P("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(P("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
  CHECK(Partition::row(3) == P("3"));
  CHECK(Partition::column(3) == P("1,1,1"));
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].size() == 0);
  CHECK(partitions_of(1) == std::vector<Partition>{P("1")});
  CHECK(partitions_of(4) == std::vector<Partition>{P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1,1,1,1")});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(12).size() == 77);
  CHECK(partitions_of(24).size() == 1575);
  CHECK_THROWS(partitions_of(25));
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(partitions_of(n) == testing::partitions_by_compositions(n));
  }
  for (int n = 1; n <= 8; ++n) {
    const auto& all = partitions_of(n);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(partition_index(all[i]) == i);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P("4")) == P("1,1,1,1"));
  CHECK(conjugate(P("3,1")) == P("2,1,1"));
  CHECK(conjugate(P("4,2,1")) == P("3,2,1,1"));
  for (int n = 0; n <= 10; ++n) {
    std::vector<Partition> image;
    for (const auto& l : partitions_of(n)) {
      CHECK(conjugate(conjugate(l)) == l);
      image.push_back(conjugate(l));
    }
    std::sort(image.begin(), image.end(), std::greater<>());
    CHECK(image == partitions_of(n));
  }
}

TEST_CASE("z_of and class_size") {
  CHECK(z_of(P("1,1,1,1,1")) == 120);
  CHECK(z_of(P("2,1")) == 2);
  CHECK(z_of(P("3,2,2,1")) == 24);
  CHECK(class_size(P("1,1,1")) == 1);
  CHECK(class_size(P("2,1")) == 3);
  for (int n = 1; n <= 6; ++n) {
    BigInt total = 0;
    BigInt total_k = 0;
    for (const auto& l : partitions_of(n)) {
      total += class_size(l);
      total_k += double_coset_size(l);
    }
    CHECK(total == factorial(static_cast<unsigned long>(n)));
    CHECK(total_k == factorial(static_cast<unsigned long>(2 * n)));
  }
}

TEST_CASE("dim_sn matches standard tableaux") {
  CHECK(dim_sn(P("5")) == 1);
  CHECK(dim_sn(P("2,1")) == 2);
  CHECK(dim_sn(P("3,2")) == 5);
  for (int n = 1; n <= 8; ++n) {
    BigInt sum_sq = 0;
    for (const auto& l : partitions_of(n)) {
      CAPTURE(l.to_string());
      CHECK(dim_sn(l) == testing::count_standard_tableaux(l));
      sum_sq += dim_sn(l) * dim_sn(l);
    }
    CHECK(sum_sq == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("double partition and double coset sizes") {
  CHECK(double_partition(P("1")) == P("2"));
  CHECK(double_partition(P("2,1")) == P("4,2"));
  CHECK(double_partition(P("1,1,1")) == P("2,2,2"));
  CHECK(double_coset_size(P("1,1,1")) == 48);
  CHECK(double_coset_size(P("2")) == 16);
}

TEST_CASE("poly_alpha") {
  for (long N : {1L, 4L, 9L}) {
    CHECK(poly_alpha(P("1"), N, 1) == N);
    CHECK(poly_alpha(P("1"), N, ratio(1, 2)) == N);
    CHECK(poly_alpha(P("2"), N, 1) == N * (N + 1));
    CHECK(poly_alpha(P("1,1"), N, 1) == N * (N - 1));
    CHECK(poly_alpha(P("2"), N, 2) == N * (N + 2));
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (long N = 0; N <= 8; ++N) CHECK((poly_alpha(l, N, 1) == 0) == (N < l.length()));
    }
  }
}

TEST_CASE("poly_brace") {
  for (long N = 0; N <= 12; ++N) {
    CHECK(poly_brace(P("1"), N) == N);
    CHECK(poly_brace(P("2"), N) == (N + 2) * (N - 1));
    CHECK(poly_brace(P("1,1"), N) == N * (N - 1));
  }
  for (int n = 1; n <= 6; ++n) {
    for (long N = n; N <= n + 8; ++N) {
      CHECK(poly_brace(Partition::column(n), N) ==
            ratio(factorial(static_cast<unsigned long>(N)), factorial(static_cast<unsigned long>(N - n))));
    }
  }
}
