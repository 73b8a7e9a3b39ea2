#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pellsq {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Exact decimal literal such as "16.33" or "-0.882" as a reduced rational.
BigRational rational_from_decimal(const std::string& text);

BigInt ipow(const BigInt& base, unsigned long exponent);
BigRational ipow(const BigRational& base, unsigned long exponent);

/// floor(sqrt(n)); throws std::domain_error for n < 0.
BigInt isqrt(const BigInt& n);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt floor_root(const BigInt& n, unsigned long k);

/// Root m >= 0 with m*m == n, or nothing. Negative n is never a square.
std::optional<BigInt> perfect_square_root(const BigInt& n);
bool is_perfect_square(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Baillie-PSW style probable-prime test (GMP, 30 rounds).
bool is_probable_prime(const BigInt& n);

/// Complete factorisation of n >= 1, primes ascending. Trial division below
/// 10^6, Pollard-Brent rho above.
std::vector<PrimePower> factorize(const BigInt& n);

BigInt multiply_out(std::span<const PrimePower> factors);

/// Unique squarefree c with n/c a positive square; sign(c) == sign(n).
/// Throws std::domain_error for n == 0.
BigInt squarefree_core(const BigInt& n);

/// Largest e with p^e | x (negative when p divides the denominator).
/// Throws std::domain_error when p is not prime or x == 0.
long padic_valuation(const BigInt& p, const BigRational& x);

inline std::string to_string(const BigInt& n) { return n.get_str(); }
std::string to_string(const BigRational& q);

// 64-bit helpers used by the search kernel. All inputs fit in uint64_t.
namespace small {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

}  // namespace small

}  // namespace pellsq
