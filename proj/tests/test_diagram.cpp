#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "brauer/diagram.hpp"
#include "brauer/error.hpp"
#include "test_support.hpp"

using namespace brauer;

namespace {
  std::size_t double_factorial(int k) {
    std::size_t out = 1;
    for (int x = k; x > 1; x -= 2) {
      out *= static_cast<std::size_t>(x);
    }
    return out;
  }

  BrauerDiagram random_diagram(int n, std::mt19937_64& gen) {
    std::vector<int> nodes(2 * n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), gen);
    std::vector<std::uint8_t> p(2 * n);
    for (int k = 0; k < 2 * n; k += 2) {
      p[nodes[k]]     = static_cast<std::uint8_t>(nodes[k + 1]);
      p[nodes[k + 1]] = static_cast<std::uint8_t>(nodes[k]);
    }
    return BrauerDiagram(n, n, std::move(p));
  }

  AlgebraElement random_element(int n, long delta, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    AlgebraElement                     x(n, delta);
    for (int k = 0; k < 3; ++k) {
      x.add_term(random_diagram(n, gen), coeff(gen));
    }
    return x;
  }

  AlgebraElement perm(std::vector<int> const& sigma, long delta) {
    return AlgebraElement(BrauerDiagram::permutation(sigma), delta);
  }

  AlgebraElement s(int n, int i, long delta) {
    return AlgebraElement(BrauerDiagram::transposition(n, i, i + 1), delta);
  }

  // Number of distinct diagrams with nonzero coefficient among the products;
  // every product of diagrams is a scalar times one diagram.
  template <typename F>
  std::size_t span_of_products(int n, F&& product) {
    std::set<BrauerDiagram> seen;
    for (auto const& d : all_diagrams(n)) {
      auto const x = product(d);
      for (auto const& [diagram, c] : x.terms()) {
        seen.insert(diagram);
      }
    }
    return seen.size();
  }
}  // namespace

TEST_CASE("diagram counts are (2n-1)!!") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(all_diagrams(n).size() == double_factorial(2 * n - 1));
  }
}

TEST_CASE("text format") {
  auto const d = BrauerDiagram::parse("n=4; 1-2 3-1' 4-2' 3'-4'");
  CHECK(d.north() == 4);
  CHECK(d.propagating_count() == 2);
  CHECK(BrauerDiagram::parse(d.to_string()) == d);
  auto const half = BrauerDiagram::parse("n=4,t=2; 1-3 2-1' 4-2'");
  CHECK(half.south() == 2);
  CHECK(BrauerDiagram::parse(half.to_string()) == half);
  CHECK_THROWS_AS(BrauerDiagram::parse("n=3; 1-2 2-3'"), Error);
  CHECK_THROWS_AS(BrauerDiagram::parse("n=2; 1-2"), Error);
  for (auto const& x : all_diagrams(4)) {
    CHECK(BrauerDiagram::parse(x.to_string()) == x);
  }
}

TEST_CASE("concatenation examples") {
  auto const u = BrauerDiagram::x_hook(2, 1, 2);
  auto const [uu, loops] = concat(u, u);
  CHECK(uu == u);
  CHECK(loops == 1);
  for (auto const& d : all_diagrams(3)) {
    CHECK(concat(BrauerDiagram::identity(3), d) == std::pair{d, 0});
    CHECK(flip(flip(d)) == d);
  }
  CHECK_THROWS_AS(concat(BrauerDiagram::identity(2), BrauerDiagram::identity(3)), Error);
  CHECK(flip(BrauerDiagram::parse("n=4,t=2; 1-3 2-1' 4-2'")).north() == 2);
}

TEST_CASE("permutation diagrams compose like permutations") {
  std::vector<int> const sigma{1, 2, 0}, tau{0, 2, 1};
  std::vector<int>       st(3);
  for (int x = 0; x < 3; ++x) {
    st[x] = sigma[tau[x]];
  }
  CHECK(perm(sigma, 2) * perm(tau, 2) == perm(st, 2));
  CHECK(BrauerDiagram::permutation(sigma).as_permutation() == sigma);
}

TEST_CASE("associativity and flip anti-automorphism on random triples") {
  auto gen = testing::rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    int const  n     = 1 + trial % 6;
    long const delta = -2 + trial % 6;
    auto const a     = random_element(n, delta, gen);
    auto const b     = random_element(n, delta, gen);
    auto const c     = random_element(n, delta, gen);
    CHECK((a * b) * c == a * (b * c));
    CHECK(flip(a * b) == flip(b) * flip(a));
  }
}

TEST_CASE("loops scale by delta^m") {
  auto gen = testing::rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int const  n     = 2 + trial % 5;
    long const delta = 3;
    auto const a     = random_diagram(n, gen);
    auto const b     = random_diagram(n, gen);
    auto const [d, loops] = concat(a, b);
    auto const prod = AlgebraElement(a, delta) * AlgebraElement(b, delta);
    CHECK(prod.coefficient(d) == loop_factor(delta, loops));
  }
  CHECK(loop_factor(0, 0) == 1);
  CHECK(loop_factor(0, 2) == 0);
}

TEST_CASE("Coxeter and hook relations") {
  for (long delta : {-2L, 0L, 1L, 3L}) {
    for (int n = 2; n <= 5; ++n) {
      auto const one = AlgebraElement::identity(n, delta);
      for (int i = 1; i < n; ++i) {
        auto const si = s(n, i, delta);
        auto const xi = x_hook(n, i, i + 1, delta);
        CHECK(si * si == one);
        CHECK(xi * xi == Rational(delta) * xi);
        CHECK(si * xi == xi);
        CHECK(xi * si == xi);
        if (i + 1 < n) {
          auto const sj = s(n, i + 1, delta);
          auto const xj = x_hook(n, i + 1, i + 2, delta);
          CHECK(si * sj * si == sj * si * sj);
          CHECK(xi * xj * xi == xi);
          CHECK(xj * xi * xj == xj);
          CHECK(si * xj * si == sj * xi * sj);
        }
        for (int j = i + 2; j < n; ++j) {
          CHECK(si * s(n, j, delta) == s(n, j, delta) * si);
          CHECK(xi * x_hook(n, j, j + 1, delta) == x_hook(n, j, j + 1, delta) * xi);
        }
      }
    }
  }
}

TEST_CASE("conjugating hooks by permutations") {
  auto gen = testing::rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int const        n = 2 + trial % 5;
    std::vector<int> sigma(n), inverse(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), gen);
    for (int x = 0; x < n; ++x) {
      inverse[sigma[x]] = x;
    }
    int const i = 1 + trial % (n - 1);
    int const j = i + 1 + (trial / 7) % (n - i);
    int       a = sigma[i - 1] + 1, b = sigma[j - 1] + 1;
    if (a > b) {
      std::swap(a, b);
    }
    CHECK(perm(sigma, 2) * x_hook(n, i, j, 2) * perm(inverse, 2) == x_hook(n, a, b, 2));
  }
}

TEST_CASE("idempotents") {
  for (long delta : {-2L, -1L, 1L, 2L, 3L}) {
    for (int n = 2; n <= 6; ++n) {
      for (int t = 0; 2 * t <= n; ++t) {
        auto const e = e_element(n, t, delta);
        CHECK(e * e == e);
      }
      auto const e = e_element(n, delta);
      CHECK(e * e == e);
    }
    CHECK(e_element(4, 0, delta) == AlgebraElement::identity(4, delta));
  }
  CHECK(e_element(8, 1).terms().size() == 1);
  auto const e8 = e_element(8, 2);
  CHECK(e8.coefficient(BrauerDiagram::parse("n=8; 1-1' 2-2' 3-3' 4-4' 5-5' 6-6' 7-8 7'-8'")) == Rational(1, 2));
  for (long delta : {-2L, 0L, 1L, 2L}) {
    for (int n = 3; n <= 6; ++n) {
      auto const e = e_bar(n, delta);
      CHECK(e * e == e);
    }
  }
  CHECK_THROWS_AS(e_element(4, 0L), Error);
  CHECK_THROWS_AS(e_element(4, 3, 1), Error);
  CHECK_THROWS_AS(e_bar(2, 1), Error);
}

TEST_CASE("Young symmetrizers") {
  auto const one = AlgebraElement::identity(2, 1);
  auto const s1  = s(2, 1, 1);
  CHECK(young_symmetrizer(Partition({2}), 2, 1) == Rational(1, 2) * (one + s1));
  CHECK(young_symmetrizer(Partition({1, 1}), 2, 1) == Rational(1, 2) * (one - s1));
  CHECK((x_hook(2, 1, 2, 1) * young_symmetrizer(Partition({1, 1}), 2, 1)).is_zero());
  for (int n = 1; n <= 5; ++n) {
    for (auto const& l : partitions_of(n)) {
      auto const e = young_symmetrizer(l, n, 2);
      CHECK(e * e == e);
    }
  }
  CHECK_THROWS_AS(young_symmetrizer(Partition({2}), 3, 1), Error);
}

TEST_CASE("central element commutes with generators") {
  for (long delta : {-1L, 0L, 2L}) {
    for (int n = 2; n <= 5; ++n) {
      auto const c = central_element(n, delta);
      CHECK(c == transposition_sum(n, delta) - t_element(n, delta));
      for (int i = 1; i < n; ++i) {
        CHECK(c * s(n, i, delta) == s(n, i, delta) * c);
        CHECK(c * x_hook(n, i, i + 1, delta) == x_hook(n, i, i + 1, delta) * c);
      }
    }
  }
}

TEST_CASE("corner algebras: e B_n e has dimension (2n-5)!!") {
  for (long delta : {-1L, 1L, 2L}) {
    for (int n = 2; n <= 6; ++n) {
      auto const e    = e_element(n, delta);
      auto const dim  = span_of_products(n, [&](BrauerDiagram const& d) {
        return e * AlgebraElement(d, delta) * e;
      });
      CHECK(dim == double_factorial(2 * (n - 2) - 1));
      // Adding an arc pair lands in e B_n e and is multiplicative after
      // scaling by 1/delta.
      auto phi = [&](BrauerDiagram const& d) {
        return AlgebraElement(add_arc_pair(d), delta, Rational(1) / delta);
      };
      for (auto const& a : all_diagrams(n - 2)) {
        CHECK(e * phi(a) * e == phi(a));
        for (auto const& b : all_diagrams(std::min(n - 2, 3))) {
          if (n - 2 <= 3) {
            auto const [ab, loops] = concat(a, b);
            CHECK(phi(a) * phi(b) == loop_factor(delta, loops) * phi(ab));
          }
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    long const delta = 0;
    auto const e     = e_bar(n, delta);
    auto const dim   = span_of_products(n, [&](BrauerDiagram const& d) {
      return e * AlgebraElement(d, delta) * e;
    });
    CHECK(dim == double_factorial(2 * (n - 2) - 1));
    auto phi = [&](BrauerDiagram const& d) { return AlgebraElement(embed_in_e_bar(d), delta); };
    for (auto const& a : all_diagrams(n - 2)) {
      CHECK(e * phi(a) * e == phi(a));
      if (n - 2 <= 3) {
        for (auto const& b : all_diagrams(n - 2)) {
          auto const [ab, loops] = concat(a, b);
          CHECK(phi(a) * phi(b) == loop_factor(delta, loops) * phi(ab));
        }
      }
    }
  }
}

TEST_CASE("B_n e_n has dimension (2n-3)!!") {
  for (int n = 2; n <= 5; ++n) {
    long const delta = 2;
    auto const e     = e_element(n, delta);
    auto const dim   = span_of_products(n, [&](BrauerDiagram const& d) {
      return AlgebraElement(d, delta) * e;
    });
    CHECK(dim == double_factorial(2 * (n - 1) - 1));
  }
}

TEST_CASE("inclusion B_n in B_{n+1} is multiplicative") {
  auto gen = testing::rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int const  n = 1 + trial % 5;
    auto const a = random_diagram(n, gen);
    auto const b = random_diagram(n, gen);
    auto const [ab, loops] = concat(a, b);
    auto const [lifted, lifted_loops] = concat(add_through_line(a), add_through_line(b));
    CHECK(lifted == add_through_line(ab));
    CHECK(lifted_loops == loops);
  }
}

TEST_CASE("algebra element JSON round-trip") {
  auto gen = testing::rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto const x = random_element(4, 2, gen);
    CHECK(AlgebraElement::from_json(x.to_json(), 4, 2) == x);
  }
}
