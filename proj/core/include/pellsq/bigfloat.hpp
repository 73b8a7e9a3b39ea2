#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace pellsq {

/// Owning MPFR real with round-to-nearest arithmetic at the precision of the
/// left operand.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 256);
  Real(double v, mpfr_prec_t bits);
  Real(const mpz_class& v, mpfr_prec_t bits);
  Real(const mpq_class& v, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real abs(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);

/// Complex number as a pair of Reals sharing one precision.
class Complex {
 public:
  explicit Complex(mpfr_prec_t bits = 256) : re_(bits), im_(bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }

  Real norm() const;  // |z|^2
  Real abs() const;
  Real arg() const;
  Complex conj() const { return Complex(re_, -im_); }

  /// e^{i theta}.
  static Complex polar(const Real& theta);

 private:
  Real re_, im_;
};

Complex pow(Complex z, unsigned long n);

}  // namespace pellsq
