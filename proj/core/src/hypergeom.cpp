#include "pellsq/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace pellsq {

BigRational QuadInt::norm() const {
  BigRational r = rational * rational - surd * surd * BigRational(radicand);
  r.canonicalize();
  return r;
}

Complex QuadInt::to_complex(mpfr_prec_t bits) const {
  Real root = sqrt(Real(BigInt(abs(radicand)), bits));
  if (radicand >= 0) return Complex(Real(rational, bits) + Real(surd, bits) * root, Real(bits));
  return Complex(Real(rational, bits), Real(surd, bits) * root);
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  QuadInt r{x.rational + y.rational, x.surd + y.surd, x.radicand};
  r.rational.canonicalize();
  r.surd.canonicalize();
  return r;
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  QuadInt r{x.rational * y.rational + x.surd * y.surd * BigRational(x.radicand),
            x.rational * y.surd + x.surd * y.rational, x.radicand};
  r.rational.canonicalize();
  r.surd.canonicalize();
  return r;
}

QuadInt operator*(const QuadInt& x, const BigRational& s) {
  QuadInt r{x.rational * s, x.surd * s, x.radicand};
  r.rational.canonicalize();
  r.surd.canonicalize();
  return r;
}

std::vector<BigRational> xpoly_coeffs(long m, long n, long r) {
  if (n < 2 || m <= 0 || m >= n || std::gcd(m, n) != 1)
    throw std::invalid_argument("xpoly_coeffs requires 0 < m < n and gcd(m, n) = 1");
  if (r < 0) throw std::invalid_argument("xpoly_coeffs requires r >= 0");
  const BigRational nu = make_rational(m, n);
  std::vector<BigRational> c{BigRational(1)};
  for (long i = 0; i < r; ++i) {
    BigRational next = c.back() * (BigRational(-r + i) - nu) * BigRational(-r + i) /
                       ((BigRational(1 + i) - nu) * BigRational(i + 1));
    next.canonicalize();
    c.push_back(next);
  }
  return c;
}

namespace {

std::vector<long> admissible_m(long n) {
  std::vector<long> ms;
  for (long m = 1; m < n; ++m)
    if (std::gcd(m, n) == 1) ms.push_back(m);
  return ms;
}

BigInt binomial(long n, long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

BigInt dnr(long n, long r) {
  BigInt L = 1;
  for (long m : admissible_m(n))
    for (const auto& c : xpoly_coeffs(m, n, r)) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  return L;
}

BigInt ndnr(const BigInt& d_prime, long n, long r) {
  const BigInt D = dnr(n, r);
  const BigInt ad = abs(d_prime);
  BigInt g = 0;
  for (long m : admissible_m(n)) {
    auto c = xpoly_coeffs(m, n, r);
    for (long j = 0; j <= r; ++j) {
      BigRational e = 0;
      for (long i = j; i <= r; ++i) e += c[static_cast<std::size_t>(i)] * BigRational(binomial(i, j));
      e *= D;
      e.canonicalize();
      if (e.get_den() != 1) throw std::logic_error("ndnr: D does not clear denominators");
      BigInt v = abs(BigInt(e.get_num())) * ipow(ad, static_cast<unsigned long>(j / 2));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  }
  return g == 0 ? BigInt(1) : g;
}

BigRational script_n_squared(const BigRational& d_prime, long n) {
  if (n != 4) throw std::invalid_argument("script_n_squared supports n = 4 only");
  long e = 6;
  if (d_prime != 0) e = std::min(padic_valuation(2, d_prime), 6L);
  if (e >= 0) return BigRational(ipow(BigInt(2), static_cast<unsigned long>(e)));
  return make_rational(1, ipow(BigInt(2), static_cast<unsigned long>(-e)));
}

GFactor g_factor(const BigInt& u1, const BigInt& u2, const BigInt& t_prime) {
  if (u1 == 0 || u2 == 0) throw std::invalid_argument("g_factor requires nonzero u1, u2");
  if (t_prime >= 0) throw std::invalid_argument("g_factor requires t' < 0");
  GFactor f;
  mpz_gcd(f.g1.get_mpz_t(), u1.get_mpz_t(), u2.get_mpz_t());
  BigInt q = u1 / f.g1;
  mpz_gcd(f.g2.get_mpz_t(), q.get_mpz_t(), t_prime.get_mpz_t());
  unsigned long t_mod4 = mpz_fdiv_ui(t_prime.get_mpz_t(), 4);
  BigInt diff = (u1 - u2) / f.g1;
  bool even = mpz_even_p(diff.get_mpz_t()) != 0;
  if (t_mod4 == 1 && even)
    f.g3 = 1;
  else if (t_mod4 == 3 && even)
    f.g3 = 2;
  else
    f.g3 = 4;
  f.g_squared = make_rational(f.g1 * f.g1 * f.g2, f.g3);
  return f;
}

Real script_d4(mpfr_prec_t bits) { return exp(Real(rational_from_decimal("1.68"), bits)); }

Real ApproximantTriple::identity_residual() const { return (q * omega_quarter - p - R).abs(); }

namespace {

// 2F1(a, b; c; z) by direct summation, |z| < 1.
Complex hyp2f1_series(const BigRational& a, const BigRational& b, const BigRational& c, const Complex& z,
                      mpfr_prec_t bits) {
  const Real eps = pow(Real(2.0, bits), -static_cast<long>(bits) - 16);
  const Real zabs = z.abs();
  const Real one(1.0, bits);
  Complex sum(one, Real(bits));
  Complex term(one, Real(bits));
  constexpr long kMaxTerms = 2'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    BigRational ratio = (a + n) * (b + n) / ((c + n) * BigRational(n + 1));
    ratio.canonicalize();
    term = term * z * Real(ratio, bits);
    sum += term;
    if (ratio <= 1) {
      // Remaining tail is at most |term| |z| / (1 - |z|).
      Real tail = term.abs() * zabs / (one - zabs);
      if (tail <= eps * sum.abs()) return sum;
    }
  }
  throw PrecisionError("2F1 series did not converge");
}

BigRational pochhammer(const BigRational& x, long n) {
  BigRational r = 1;
  for (long i = 0; i < n; ++i) r *= x + i;
  r.canonicalize();
  return r;
}

}  // namespace

ApproximantTriple approximants(const BigInt& u1, const BigInt& u2, const BigInt& t_prime, long r,
                               mpfr_prec_t precision_bits) {
  if (precision_bits < 128) throw std::invalid_argument("approximants requires at least 128 bits");
  if (r < 0) throw std::invalid_argument("approximants requires r >= 0");
  ApproximantTriple A;
  A.r = r;
  A.u1 = u1;
  A.u2 = u2;
  A.t_prime = t_prime;
  A.precision = precision_bits;
  A.g = g_factor(u1, u2, t_prime);
  A.d_prime = BigRational(u2 * u2 * t_prime) / A.g.g_squared;
  A.d_prime.canonicalize();
  if (A.d_prime.get_den() != 1) throw DomainError("d' = u2^2 t'/g^2 is not an integer");
  A.script_n2 = script_n_squared(A.d_prime);
  A.D = dnr(4, r);
  A.N = ndnr(BigInt(A.d_prime.get_num()), 4, r);

  // |p|, |q| grow like (|u| / g)^r, so absolute accuracy needs guard bits on top of that.
  auto nbits = [](const BigInt& v) { return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)); };
  const long per_step = nbits(abs(u1)) + nbits(abs(u2 * t_prime)) + nbits(BigInt(A.g.g_squared.get_den())) + 4;
  const auto bits = static_cast<mpfr_prec_t>(precision_bits + 64 + r * per_step + nbits(A.D));

  const QuadInt u{make_rational(u1, 2), make_rational(u2, 2), t_prime};
  const QuadInt su = u.conj();
  const Complex uc = u.to_complex(bits);
  const Complex suc = su.to_complex(bits);
  A.omega = uc / suc;
  A.phi = A.omega.arg();
  Complex one(Real(1.0, bits), Real(bits));
  if ((A.omega - one).abs() >= Real(1.0, bits)) throw DomainError("|omega - 1| >= 1");

  const auto c = xpoly_coeffs(1, 4, r);
  const BigRational scale = make_rational(A.D, A.N);
  // Powers of u and sigma(u) up to r.
  std::vector<QuadInt> up{QuadInt{1, 0, t_prime}}, sp{QuadInt{1, 0, t_prime}};
  for (long i = 0; i < r; ++i) {
    up.push_back(up.back() * u);
    sp.push_back(sp.back() * su);
  }
  QuadInt P{0, 0, t_prime}, Qx{0, 0, t_prime};
  for (long i = 0; i <= r; ++i) {
    auto ii = static_cast<std::size_t>(i), ri = static_cast<std::size_t>(r - i);
    P = P + up[ii] * sp[ri] * c[ii];
    Qx = Qx + up[ri] * sp[ii] * c[ii];
  }
  A.p_exact = P * scale;
  A.q_exact = Qx * scale;

  const Real g = sqrt(Real(A.g.g_squared, bits));
  const Real gr = pow(g, r);
  A.p = A.p_exact.to_complex(bits) * (Real(1.0, bits) / gr);
  A.q = A.q_exact.to_complex(bits) * (Real(1.0, bits) / gr);

  const BigRational nu = make_rational(1, 4);
  BigRational pre = pochhammer(nu, r + 1) / pochhammer(BigRational(r + 1), r + 1);
  pre.canonicalize();
  Complex z = one - A.omega;
  Complex F = hyp2f1_series(BigRational(r + 1) - nu, BigRational(r + 1), BigRational(2 * r + 2), z, bits);
  Complex Rm = pow(A.omega - one, static_cast<unsigned long>(2 * r + 1)) * F * Real(pre, bits);
  A.R = Rm * pow(suc * (Real(1.0, bits) / g), static_cast<unsigned long>(r)) * Real(scale, bits);
  A.omega_quarter = Complex::polar(A.phi / Real(4.0, bits));

  const Real root = Real(BigInt(abs(u1)), bits) + sqrt(Real(BigInt(u1 * u1 - t_prime * u2 * u2), bits));
  const Real gn = g * sqrt(Real(A.script_n2, bits));
  const Real d4 = script_d4(bits);
  A.Q = d4 * root / gn;
  A.E = gn * root / (d4 * Real(BigInt(u2 * u2 * abs(t_prime)), bits));
  A.ell0 = Real(rational_from_decimal("0.2"), bits) * abs(A.phi);
  A.k0 = Real(rational_from_decimal("0.89"), bits);
  return A;
}

Lemma21Result lemma21_bound(double Q, double E, double k0, double ell0, double q_abs, double c, bool same_fraction) {
  if (!(Q > 1 && E > 1)) throw std::invalid_argument("lemma21_bound requires Q, E > 1");
  if (!(c > 0 && c < 1)) throw std::invalid_argument("lemma21_bound requires 0 < c < 1");
  if (!(k0 > 0 && ell0 > 0)) throw std::invalid_argument("lemma21_bound requires k0, ell0 > 0");
  const double lhs = (Q - 1 / E) * ell0 * q_abs / (Q - 1);
  Lemma21Result res;
  for (long r0 = 1; r0 < 1'000'000; ++r0) {
    if (lhs < c * std::pow(E, static_cast<double>(r0))) {
      res.r0 = r0;
      break;
    }
  }
  if (res.r0 == 0) throw std::runtime_error("lemma21_bound: r0 not found");
  res.bound_a = (1 - c / E) / (k0 * std::pow(Q, static_cast<double>(res.r0 + 1)));
  res.bound_b = (1 - c) / (k0 * std::pow(Q, static_cast<double>(res.r0)));
  res.bound = same_fraction ? res.bound_a : res.bound_b;
  return res;
}

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  for (const auto& f : factorize(n)) {
    std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

struct ZQ {
  BigInt x, y;  // x + y sqrt(c)
};

ZQ zmul(const ZQ& p, const ZQ& q, const BigInt& c) { return {p.x * q.x + c * p.y * q.y, p.x * q.y + p.y * q.x}; }

}  // namespace

Decomposition lemma31_decompose(const BigInt& x, const BigInt& y_root, const BigInt& a, const BigInt& b,
                                const BigInt& n_alpha, int n_eps_k, std::optional<int> want_sign) {
  if (n_alpha >= 0 || !is_perfect_square(BigInt(-n_alpha)))
    throw std::invalid_argument("lemma31_decompose requires -N_alpha a nonzero square");
  if (y_root <= 0 || b <= 0) throw std::invalid_argument("lemma31_decompose requires y_root, b > 0");
  const BigInt c = squarefree_core(n_alpha);
  const BigInt m = isqrt(BigInt(n_alpha / c));
  const BigInt ac = abs(c);
  const ZQ alpha{a, m};
  for (const BigInt& f : divisors(b * b)) {
    BigInt fy = f * y_root;
    if (!mpz_divisible_p(fy.get_mpz_t(), b.get_mpz_t())) continue;
    const BigInt M = fy / b;
    const BigInt f2 = f * f;
    const BigInt tx = f2 * x, ty = f2 * n_eps_k * m;
    for (BigInt s = 0; ac * s * s <= M; ++s) {
      auto rr = perfect_square_root(BigInt(M - ac * s * s));
      if (!rr) continue;
      for (const BigInt& r : {*rr, BigInt(-*rr)}) {
        for (const BigInt& ss : {s, BigInt(-s)}) {
          ZQ w{r, ss};
          ZQ w2 = zmul(w, w, c);
          ZQ v = zmul(alpha, zmul(w2, w2, c), c);
          int sign = 0;
          if (v.x == tx && v.y == ty)
            sign = 1;
          else if (v.x == -tx && v.y == -ty)
            sign = -1;
          if (sign == 0 || (want_sign && *want_sign != sign)) continue;
          return {f, r, ss, sign};
        }
      }
    }
  }
  throw NoDecomposition("no quartic decomposition for x = " + x.get_str() + ", y = " + y_root.get_str() + "^2");
}

Decomposition lemma31_decompose(const SequenceParams& p, const SequenceElement& e, std::optional<int> want_sign) {
  if (!mpz_even_p(e.x2.get_mpz_t()) || !e.y_integral())
    throw std::invalid_argument("lemma31_decompose requires integral x_k, y_k");
  auto root = perfect_square_root(BigInt(e.y2 / 2));
  if (!root) throw std::invalid_argument("lemma31_decompose requires y_k to be a square");
  int n_eps_k = (p.n_epsilon == -1 && (std::labs(e.k) % 2 == 1)) ? -1 : 1;
  return lemma31_decompose(BigInt(e.x2 / 2), *root, p.a, p.b, p.n_alpha, n_eps_k, want_sign);
}

Lemma35Inputs lemma35_inputs(const SequenceParams& p, const SequenceElement& e) {
  if (p.n_alpha >= 0) throw std::invalid_argument("lemma35_inputs requires N_alpha < 0");
  Lemma35Inputs in;
  in.t_prime = squarefree_core(p.n_alpha);
  in.u1 = e.x2;
  in.u2 = 2 * isqrt(BigInt(p.n_alpha / in.t_prime));
  return in;
}

BigRational lemma35_product(const SequenceParams& p, const SequenceElement& e) {
  auto in = lemma35_inputs(p, e);
  GFactor g = g_factor(in.u1, in.u2, in.t_prime);
  BigRational d_prime = BigRational(in.u2 * in.u2 * in.t_prime) / g.g_squared;
  d_prime.canonicalize();
  BigRational r = g.g_squared * script_n_squared(d_prime);
  r.canonicalize();
  return r;
}

}  // namespace pellsq
