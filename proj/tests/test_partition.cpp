#include "doctest.h"

#include <set>

#include "brauer/error.hpp"
#include "brauer/partition.hpp"

using namespace brauer;

namespace {
  std::uint64_t binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
  }
}  // namespace

TEST_CASE("parse and print round-trip") {
  CHECK(Partition::parse("6,4,4,2,1").parts() == std::vector<int>{6, 4, 4, 2, 1});
  CHECK(Partition::parse("0").empty());
  CHECK(Partition().to_string() == "0");
  for (int n = 0; n <= 8; ++n) {
    for (auto const& p : partitions_of(n)) {
      CHECK(Partition::parse(p.to_string()) == p);
    }
  }
}

TEST_CASE("malformed partitions are rejected") {
  for (char const* bad : {"3,4", "a", "2,,1", "-1", "2,0,1", "1.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Partition::parse(bad), Error);
  }
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("contents, addable and removable boxes") {
  Partition const p({2, 1});
  CHECK(contents(p) == std::vector<int>{-1, 0, 1});
  CHECK(removable_boxes(p) == std::vector<Box>{{2, 1}, {1, 2}});
  CHECK(addable_boxes(p) == std::vector<Box>{{3, 1}, {2, 2}, {1, 3}});
  CHECK(Box{2, 5}.content() == 3);
  CHECK(Box{1, 1}.charge(2) == 1);
  CHECK(p.add_box({2, 2}) == Partition({2, 2}));
  CHECK(p.remove_box({1, 2}) == Partition({1, 1}));
  CHECK_THROWS_AS(p.add_box({3, 2}), Error);
  CHECK_THROWS_AS(p.remove_box({1, 1}), Error);
}

TEST_CASE("conjugation is an involution") {
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  for (int n = 0; n <= 9; ++n) {
    for (auto const& p : partitions_of(n)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().size() == n);
    }
  }
}

TEST_CASE("partition counts") {
  std::vector<std::size_t> const expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    CHECK(partitions_of(n).size() == expected[n]);
  }
  CHECK(partitions_of(3).front() == Partition({3}));
  CHECK(subpartitions(Partition({2, 1})).size() == 5);
}

TEST_CASE("containment, intersection and skews") {
  Partition const a({4, 2}), b({2, 2, 1});
  CHECK(intersect(a, b) == Partition({2, 2}));
  CHECK(a.contains(Partition({3, 1})));
  CHECK_FALSE(a.contains(b));
  auto const [left, right] = skew(a, b);
  CHECK(left.boxes() == std::vector<Box>{{1, 3}, {1, 4}});
  CHECK(right.boxes() == std::vector<Box>{{3, 1}});
  CHECK(difference(Partition({3, 1}), Partition({2})).components().size() == 2);
  CHECK(Partition({3, 3}).is_rectangle());
  CHECK(Partition().is_rectangle());
  CHECK(Partition({2, 2}).is_even());
  CHECK_FALSE(Partition({3, 1}).is_even());
}

TEST_CASE("hook length formula matches tableau counting") {
  for (int n = 0; n <= 9; ++n) {
    std::uint64_t sum_squares = 0;
    for (auto const& p : partitions_of(n)) {
      CHECK(specht_dim(p) == count_standard_tableaux(p));
      sum_squares += specht_dim(p) * specht_dim(p);
    }
    CHECK(sum_squares == factorial(n));
  }
}

TEST_CASE("character table orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    auto const parts = partitions_of(n);
    for (auto const& l : parts) {
      CHECK(mn_character(l, Partition(std::vector<int>(n, 1))) == static_cast<long>(specht_dim(l)));
      for (auto const& m : parts) {
        long long sum = 0;
        for (auto const& rho : parts) {
          sum += static_cast<long long>(class_size(rho)) * mn_character(l, rho) * mn_character(m, rho);
        }
        CHECK(sum == (l == m ? static_cast<long long>(factorial(n)) : 0));
      }
    }
  }
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(Partition({1}), Partition({1, 1}), Partition({2, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  // Induction from S_a x S_b: sum_lambda c f^lambda = binom(a+b,a) f^mu f^eta.
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (auto const& mu : partitions_of(a)) {
        for (auto const& eta : partitions_of(b)) {
          std::uint64_t total = 0;
          for (auto const& l : partitions_of(a + b)) {
            total += lr_coefficient(mu, eta, l) * specht_dim(l);
          }
          CHECK(total == binomial(a + b, a) * specht_dim(mu) * specht_dim(eta));
        }
      }
    }
  }
}

TEST_CASE("rectangle skews have a unique eta") {
  CHECK(unique_rectangle_eta(Partition({2, 1}), Partition({3, 3})) == Partition({2, 1}));
  CHECK_FALSE(unique_rectangle_eta(Partition({3, 3}), Partition({3, 3})).has_value());
  Partition const rect({3, 3, 3});
  for (auto const& mu : subpartitions(rect)) {
    auto const eta = unique_rectangle_eta(mu, rect);
    if (mu == rect) {
      continue;
    }
    REQUIRE(eta.has_value());
    for (auto const& other : partitions_of(rect.size() - mu.size())) {
      CHECK(lr_coefficient(mu, other, rect) == (other == *eta ? 1U : 0U));
    }
  }
}
