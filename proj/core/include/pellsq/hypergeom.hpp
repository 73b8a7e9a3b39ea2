#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pellsq/bigfloat.hpp"
#include "pellsq/numeric.hpp"
#include "pellsq/sequences.hpp"

namespace pellsq {

/// p + q sqrt(t') with rational p, q.
struct QuadInt {
  BigRational rational;
  BigRational surd;
  BigInt radicand;

  QuadInt conj() const { return {rational, -surd, radicand}; }
  BigRational norm() const;
  Complex to_complex(mpfr_prec_t bits) const;

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const BigRational& s);
  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.rational == y.rational && x.surd == y.surd && x.radicand == y.radicand;
  }
};

/// Coefficients of 2F1(-r-nu, -r; 1-nu; z), nu = m/n, ascending powers.
std::vector<BigRational> xpoly_coeffs(long m, long n, long r);

/// lcm of coefficient denominators over m in {1, 3} (n = 4).
BigInt dnr(long n, long r);

/// gcd over j and m of |D * e_j * d'^{floor(j/2)}|.
BigInt ndnr(const BigInt& d_prime, long n, long r);

/// Square of script N_{d',4} = 2^{min(v_2(d')/2, 3)}.
BigRational script_n_squared(const BigRational& d_prime, long n = 4);

struct GFactor {
  BigInt g1, g2, g3;
  BigRational g_squared;
};

GFactor g_factor(const BigInt& u1, const BigInt& u2, const BigInt& t_prime);

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ApproximantTriple {
  long r = 0;
  BigInt u1, u2, t_prime;
  BigRational d_prime;
  GFactor g;
  BigRational script_n2;
  BigInt D, N;
  // (D/N) * sigma(u)^r * X(omega) and the Y analogue; p_r = p_exact / g^r.
  QuadInt p_exact, q_exact;
  Complex omega, p, q, R, omega_quarter;
  Real phi, Q, E, ell0, k0;
  mpfr_prec_t precision = 0;

  /// |q omega^{1/4} - p - R|.
  Real identity_residual() const;
};

/// Requires |omega - 1| < 1 and precision_bits >= 128.
ApproximantTriple approximants(const BigInt& u1, const BigInt& u2, const BigInt& t_prime, long r,
                               mpfr_prec_t precision_bits = 256);

/// Paper constant D_4 = e^{1.68}.
Real script_d4(mpfr_prec_t bits);

struct Lemma21Result {
  long r0 = 0;
  double bound_a = 0;  // (1 - c/E) / (k0 Q^{r0+1})
  double bound_b = 0;  // (1 - c) / (k0 Q^{r0})
  double bound = 0;    // a when same_fraction, b otherwise
};

Lemma21Result lemma21_bound(double Q, double E, double k0, double ell0, double q_abs, double c, bool same_fraction);

class NoDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Decomposition {
  BigInt f, r, s;
  int sign = 0;
};

/// Witness for +-f^2 (x + N_eps m sqrt(c)) = (a + m sqrt(c)) (r + s sqrt(c))^4 and
/// f y = b (r^2 - c s^2), where N_alpha = m^2 c, c = core(N_alpha) < 0 and f | b^2.
/// want_sign restricts the sign when given.
Decomposition lemma31_decompose(const BigInt& x, const BigInt& y_root, const BigInt& a, const BigInt& b,
                                const BigInt& n_alpha, int n_eps_k, std::optional<int> want_sign = std::nullopt);

/// Same, taking the element of a sequence; N_{eps^k} = N_eps^k.
Decomposition lemma31_decompose(const SequenceParams& p, const SequenceElement& e,
                                std::optional<int> want_sign = std::nullopt);

/// Approximant inputs from a sequence element: t' = core(N), u1 = 2x_k, u2 = 2 sqrt(N / core(N)).
struct Lemma35Inputs {
  BigInt u1, u2, t_prime;
};

Lemma35Inputs lemma35_inputs(const SequenceParams& p, const SequenceElement& e);

/// g^2 * scriptN^2 for those inputs.
BigRational lemma35_product(const SequenceParams& p, const SequenceElement& e);

}  // namespace pellsq
