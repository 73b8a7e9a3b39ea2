#include "pellsq/bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace pellsq {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::unique_ptr<char, void (*)(char*)> guard(buf, mpfr_free_str);
  return std::string(buf);
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

namespace {

template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(x.precision());
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.norm();
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Real Complex::norm() const { return re_ * re_ + im_ * im_; }
Real Complex::abs() const { return sqrt(norm()); }
Real Complex::arg() const { return atan2(im_, re_); }

Complex Complex::polar(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex pow(Complex z, unsigned long n) {
  Complex r(Real(1.0, z.precision()), Real(z.precision()));
  while (n) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

}  // namespace pellsq
