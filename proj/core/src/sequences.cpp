#include "pellsq/sequences.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace pellsq {

const char* to_string(ParamError e) {
  switch (e) {
    case ParamError::NonPositive:
      return "NonPositive";
    case ParamError::SquareD:
      return "SquareD";
    case ParamError::NonUnit:
      return "NonUnit";
  }
  return "?";
}

Doubled multiply(const Doubled& p, const Doubled& q, const BigInt& d) {
  Doubled r;
  r.x2 = p.x2 * q.x2 + d * p.y2 * q.y2;
  r.y2 = p.x2 * q.y2 + p.y2 * q.x2;
  mpz_divexact_ui(r.x2.get_mpz_t(), r.x2.get_mpz_t(), 2);
  mpz_divexact_ui(r.y2.get_mpz_t(), r.y2.get_mpz_t(), 2);
  return r;
}

Doubled power(Doubled base, unsigned long exponent, const BigInt& d) {
  Doubled r{2, 0};
  while (exponent) {
    if (exponent & 1) r = multiply(r, base, d);
    exponent >>= 1;
    if (exponent) base = multiply(base, base, d);
  }
  return r;
}

SequenceParams SequenceParams::make(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& t,
                                    const BigInt& u) {
  if (a <= 0 || b <= 0 || d <= 0 || t <= 0 || u <= 0)
    throw InvalidParams(ParamError::NonPositive, "a, b, d, t, u must be positive");
  if (d < 2 || is_perfect_square(d)) throw InvalidParams(ParamError::SquareD, "d must be a nonsquare >= 2");
  BigInt norm4 = t * t - d * u * u;
  if (norm4 != 4 && norm4 != -4) throw InvalidParams(ParamError::NonUnit, "t^2 - d u^2 must be 4 or -4");
  SequenceParams p;
  p.a = a;
  p.b = b;
  p.d = d;
  p.t = t;
  p.u = u;
  BigInt b2 = b * b;
  p.n_alpha = a * a - b2 * b2 * d;
  p.n_epsilon = norm4 > 0 ? 1 : -1;
  p.recurrence_coeff = (t * t + d * u * u) / 2;
  return p;
}

bool SequenceParams::main_case() const { return n_alpha < 0 && is_perfect_square(BigInt(-n_alpha)); }

std::string SequenceParams::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + d.get_str() + "," + t.get_str() + "," + u.get_str() + ")";
}

namespace {

Doubled alpha_of(const SequenceParams& p) { return {2 * p.a, 2 * p.b * p.b}; }

Doubled eps_squared(const SequenceParams& p) { return {p.recurrence_coeff, p.t * p.u}; }

void check_norm([[maybe_unused]] const SequenceParams& p, [[maybe_unused]] const SequenceElement& e) {
  assert(e.x2 * e.x2 - p.d * e.y2 * e.y2 == 4 * p.n_alpha);
}

}  // namespace

SequenceElement element_at(const SequenceParams& p, long k) {
  Doubled unit = eps_squared(p);
  if (k < 0) unit.y2 = -unit.y2;
  Doubled v = multiply(alpha_of(p), power(unit, static_cast<unsigned long>(std::labs(k)), p.d), p.d);
  SequenceElement e{k, std::move(v.x2), std::move(v.y2)};
  check_norm(p, e);
  return e;
}

SequenceElement element_prime_at(const SequenceParams& p, long k) {
  Doubled unit{p.t, p.u};
  if (k < 0) unit = {p.n_epsilon * p.t, -p.n_epsilon * p.u};
  Doubled v = multiply(alpha_of(p), power(unit, static_cast<unsigned long>(std::labs(k)), p.d), p.d);
  return {k, std::move(v.x2), std::move(v.y2)};
}

namespace {

// Walks z_{j+1} = c z_j - n z_{j-1} in both directions from the seeds at -1, 0, 1.
std::vector<SequenceElement> walk(long k_lo, long k_hi, const BigInt& c, int n, const SequenceElement& m1,
                                  const SequenceElement& z0, const SequenceElement& p1) {
  std::vector<SequenceElement> out;
  if (k_lo > k_hi) return out;
  out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  auto in = [&](const SequenceElement& e) {
    if (e.k >= k_lo && e.k <= k_hi) out.push_back(e);
  };
  // Backward: z_{j-1} = (c z_j - z_{j+1}) / n.
  if (k_lo < -1) {
    SequenceElement hi = z0, cur = m1;
    std::vector<SequenceElement> back;
    while (cur.k > k_lo) {
      SequenceElement next{cur.k - 1, (c * cur.x2 - hi.x2) * n, (c * cur.y2 - hi.y2) * n};
      hi = std::move(cur);
      cur = std::move(next);
      if (cur.k <= k_hi) back.push_back(cur);
    }
    std::reverse(back.begin(), back.end());
    out.insert(out.end(), back.begin(), back.end());
  }
  in(m1);
  in(z0);
  in(p1);
  if (k_hi > 1) {
    SequenceElement lo = z0, cur = p1;
    while (cur.k < k_hi) {
      SequenceElement next{cur.k + 1, c * cur.x2 - n * lo.x2, c * cur.y2 - n * lo.y2};
      lo = std::move(cur);
      cur = std::move(next);
      if (cur.k >= k_lo) out.push_back(cur);
    }
  }
  return out;
}

}  // namespace

std::vector<SequenceElement> elements_by_recurrence(const SequenceParams& p, long k_lo, long k_hi) {
  const BigInt b2 = p.b * p.b;
  const BigInt s = p.t * p.t + p.d * p.u * p.u;
  const BigInt tu2 = 2 * p.t * p.u;
  SequenceElement z0{0, 2 * p.a, 2 * b2};
  SequenceElement p1{1, (p.a * s + b2 * p.d * tu2) / 2, (b2 * s + p.a * tu2) / 2};
  SequenceElement m1{-1, (p.a * s - b2 * p.d * tu2) / 2, (b2 * s - p.a * tu2) / 2};
  auto out = walk(k_lo, k_hi, p.recurrence_coeff, 1, m1, z0, p1);
#ifndef NDEBUG
  for (const auto& e : out) check_norm(p, e);
#endif
  return out;
}

std::vector<SequenceElement> prime_elements_by_recurrence(const SequenceParams& p, long k_lo, long k_hi) {
  SequenceElement z0 = element_prime_at(p, 0);
  SequenceElement p1 = element_prime_at(p, 1);
  SequenceElement m1 = element_prime_at(p, -1);
  return walk(k_lo, k_hi, p.t, p.n_epsilon, m1, z0, p1);
}

long compute_K(const SequenceParams& p) {
  const BigInt target = 2 * p.b * p.b;
  SequenceElement z0 = element_at(p, 0);
  SequenceElement cur = element_at(p, -1);
  BigInt hi = z0.y2, y = cur.y2;
  for (long k = -1; k > -kMaxDescent; --k) {
    if (y > target) return k;
    BigInt next = p.recurrence_coeff * y - hi;
    hi = std::move(y);
    y = std::move(next);
  }
  throw std::runtime_error("compute_K: descent cap exceeded for " + p.to_string());
}

std::vector<SquareHit> scan_squares(const SequenceParams& p, long k_lo, long k_hi, bool prime_sequence) {
  std::vector<SquareHit> hits;
  if (k_lo > k_hi) return hits;
  auto elements = prime_sequence ? prime_elements_by_recurrence(p, k_lo, k_hi) : elements_by_recurrence(p, k_lo, k_hi);
  for (const auto& e : elements) {
    if (!e.y_integral() || e.y2 <= 0) continue;
    if (auto r = perfect_square_root(BigInt(e.y2 / 2))) hits.push_back({e.k, *r});
  }
  return hits;
}

BigRational growth_b(const SequenceParams& p) { return BigRational(p.d * p.u * p.u - 3); }

BigRational growth_c(const SequenceParams& p, const BigRational& factor) {
  BigRational r = factor * BigRational(p.d * p.u * p.u);
  r.canonicalize();
  return r;
}

bool growth_c_applies(const SequenceParams& p) { return p.n_epsilon == 1 || p.d * p.u * p.u >= 300; }

bool growth_bound_holds(const SequenceParams& p, const SequenceElement& e, long K, const BigRational& growth) {
  if (e.k == 0) return false;
  long exponent = e.k > 0 ? e.k - 1 : std::max(0L, K - e.k);
  BigInt absn = abs(p.n_alpha);
  BigRational rhs = make_rational(absn * p.u * p.u, 4 * p.b * p.b) * ipow(growth, static_cast<unsigned long>(exponent));
  return make_rational(e.y2, 2) >= rhs;
}

}  // namespace pellsq
