#include "pellsq/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pellsq {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    auto step = [&](const BigInt& v) {
      BigInt r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational rational_from_decimal(const std::string& text) {
  std::string digits;
  BigInt scale = 1;
  bool after_point = false;
  bool negative = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (i == 0 && (ch == '-' || ch == '+')) {
      negative = ch == '-';
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (after_point) scale *= 10;
    } else {
      throw std::invalid_argument("bad decimal literal: " + text);
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + text);
  BigInt num(digits, 10);
  if (negative) num = -num;
  return make_rational(num, scale);
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRational ipow(const BigRational& base, unsigned long exponent) {
  return make_rational(ipow(BigInt(base.get_num()), exponent), ipow(BigInt(base.get_den()), exponent));
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt floor_root(const BigInt& n, unsigned long k) {
  if (n < 0) throw std::domain_error("floor_root of negative integer");
  if (k == 0) throw std::domain_error("zeroth root");
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

std::optional<BigInt> perfect_square_root(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return isqrt(n);
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_probable_prime(const BigInt& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) throw std::domain_error("factorize requires n >= 1");
  std::vector<PrimePower> result;
  BigInt rest = n;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      result.push_back({BigInt(p), e});
    }
  }
  if (rest != 1) {
    std::map<BigInt, unsigned> big;
    factor_into(rest, big);
    for (auto& [p, e] : big) result.push_back({p, e});
  }
  std::sort(result.begin(), result.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  return result;
}

BigInt multiply_out(std::span<const PrimePower> factors) {
  BigInt r = 1;
  for (const auto& f : factors) r *= ipow(f.prime, f.exponent);
  return r;
}

BigInt squarefree_core(const BigInt& n) {
  if (n == 0) throw std::domain_error("core(0) is undefined");
  BigInt c = 1;
  for (const auto& f : factorize(abs(n)))
    if (f.exponent % 2 == 1) c *= f.prime;
  return n < 0 ? BigInt(-c) : c;
}

long padic_valuation(const BigInt& p, const BigRational& x) {
  if (!is_probable_prime(p)) throw std::domain_error("padic_valuation: modulus is not prime");
  if (x == 0) throw std::domain_error("padic_valuation of zero");
  auto val = [&p](BigInt v) {
    long e = 0;
    v = abs(v);
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    return e;
  };
  return val(x.get_num()) - val(x.get_den());
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace small {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 2;
    constexpr std::uint64_t m = 64;
    for (std::uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = gcd64(q, n);
      }
    }
    if (d == n) {
      do {
        ys = f(ys);
        d = gcd64(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  Factorization result;
  for (std::uint64_t p = 2; p < 1024 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.emplace_back(p, e);
  }
  if (n > 1) {
    std::vector<std::uint64_t> primes;
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
      if (!result.empty() && result.back().first == p)
        ++result.back().second;
      else
        result.emplace_back(p, 1);
    }
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n;
}

}  // namespace small

}  // namespace pellsq
