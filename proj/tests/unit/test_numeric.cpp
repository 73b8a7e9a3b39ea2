#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "pellsq/numeric.hpp"

using namespace pellsq;

TEST_CASE("isqrt examples") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(33203125) == 5762);
  CHECK(5762 * 5762 == 33200644);
  CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt matches bisection up to 2^512") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(42);
  for (int i = 0; i < 300; ++i) {
    BigInt n = rng.get_z_bits(1 + i % 512);
    BigInt r = isqrt(n);
    CHECK(r == oracle::isqrt(n));
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_perfect_square(n) == (r * r == n));
    CHECK(is_perfect_square(n * n));
  }
}

TEST_CASE("perfect squares") {
  auto r = perfect_square_root(390625);
  REQUIRE(r);
  CHECK(*r == 625);
  CHECK_FALSE(is_perfect_square(28));
  CHECK(is_perfect_square(0));
  CHECK(*perfect_square_root(0) == 0);
  CHECK_FALSE(is_perfect_square(-4));
}

TEST_CASE("floor_root") {
  CHECK(floor_root(BigInt(1000), 3) == 10);
  CHECK(floor_root(BigInt(999), 3) == 9);
  CHECK(floor_root(ipow(BigInt(7), 23), 23) == 7);
  CHECK(floor_root(ipow(BigInt(7), 23) - 1, 23) == 6);
  CHECK(floor_root(BigInt(0), 5) == 0);
}

TEST_CASE("squarefree core") {
  CHECK(squarefree_core(1) == 1);
  CHECK(squarefree_core(-28) == -7);
  CHECK(squarefree_core(50) == 2);
  CHECK(squarefree_core(-1) == -1);
  CHECK_THROWS_AS(squarefree_core(0), std::domain_error);
  for (long n = -2000; n <= 2000; ++n) {
    if (n == 0) continue;
    BigInt c = squarefree_core(n);
    CHECK(c == oracle::core(n));
    BigInt q = BigInt(n) / c;
    CHECK(q > 0);
    CHECK(is_perfect_square(q));
    for (auto& pp : factorize(abs(c))) CHECK(pp.exponent == 1);
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(2, BigRational(48)) == 4);
  CHECK(padic_valuation(3, BigRational(54)) == 3);
  CHECK(padic_valuation(2, make_rational(5, 8)) == -3);
  CHECK(padic_valuation(5, make_rational(3, 7)) == 0);
  CHECK_THROWS_AS(padic_valuation(4, BigRational(8)), std::domain_error);
  CHECK_THROWS_AS(padic_valuation(2, BigRational(0)), std::domain_error);
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1).empty());
  CHECK(factorize(24) == std::vector<PrimePower>{{2, 3}, {3, 1}});
  CHECK(factorize(3025) == std::vector<PrimePower>{{5, 2}, {11, 2}});
}

TEST_CASE("factorize round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt n = BigInt(static_cast<unsigned long>(rng() % 1'000'000'000'000ull)) + 1;
    auto f = factorize(n);
    CHECK(multiply_out(f) == n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      CHECK(is_probable_prime(f[j].prime));
      if (j) CHECK(f[j - 1].prime < f[j].prime);
    }
    if (n < 10'000'000) {
      auto o = oracle::factor(n);
      REQUIRE(o.size() == f.size());
      for (std::size_t j = 0; j < f.size(); ++j) {
        CHECK(o[j].first == f[j].prime);
        CHECK(o[j].second == f[j].exponent);
      }
    }
  }
  // a semiprime beyond trial division
  BigInt p("1000000007"), q("998244353");
  CHECK(factorize(p * q) == std::vector<PrimePower>{{q, 1}, {p, 1}});
}

TEST_CASE("exact decimal constants") {
  CHECK(rational_from_decimal("16.33") == make_rational(1633, 100));
  CHECK(rational_from_decimal("0.19") == make_rational(19, 100));
  CHECK(rational_from_decimal("0.882") == make_rational(441, 500));
  CHECK(rational_from_decimal("-57.32") == make_rational(-1433, 25));
  CHECK(rational_from_decimal("85") == BigRational(85));
  CHECK_THROWS(rational_from_decimal("1.2.3"));
  CHECK_THROWS(rational_from_decimal(""));
}

TEST_CASE("small helpers agree with the big versions") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = rng() % 10'000'000'000'000ull;
    CHECK(BigInt(static_cast<unsigned long>(small::isqrt(n))) == isqrt(BigInt(static_cast<unsigned long>(n))));
    CHECK(small::is_square(n) == is_perfect_square(BigInt(static_cast<unsigned long>(n))));
    CHECK(small::is_square(n % 100000 * (n % 100000)));
  }
  for (std::uint64_t n = 1; n < 3000; ++n) {
    auto f = small::factorize(n);
    std::uint64_t prod = 1;
    for (auto [p, e] : f) {
      CHECK(small::is_prime(p));
      for (unsigned j = 0; j < e; ++j) prod *= p;
    }
    CHECK(prod == n);
  }
}
