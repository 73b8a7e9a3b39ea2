#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pellsq/numeric.hpp"

namespace pellsq {

enum class ParamError { NonPositive, SquareD, NonUnit };

const char* to_string(ParamError e);

class InvalidParams : public std::invalid_argument {
 public:
  InvalidParams(ParamError reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  ParamError reason() const { return reason_; }

 private:
  ParamError reason_;
};

/// Element (X + Y*sqrt(d))/2 of the quadratic order, stored doubled.
struct Doubled {
  BigInt x2;
  BigInt y2;

  friend bool operator==(const Doubled&, const Doubled&) = default;
};

Doubled multiply(const Doubled& p, const Doubled& q, const BigInt& d);
Doubled power(Doubled base, unsigned long exponent, const BigInt& d);

struct SequenceParams {
  BigInt a, b, d, t, u;
  BigInt n_alpha;            // a^2 - b^4 d
  int n_epsilon = 0;         // (t^2 - d u^2)/4
  BigInt recurrence_coeff;   // (t^2 + d u^2)/2

  /// Validates and derives; throws InvalidParams.
  static SequenceParams make(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& t, const BigInt& u);

  /// -N_alpha is a positive perfect square.
  bool main_case() const;
  std::string to_string() const;
};

struct SequenceElement {
  long k = 0;
  BigInt x2;
  BigInt y2;

  bool y_integral() const { return mpz_even_p(y2.get_mpz_t()) != 0; }
  friend bool operator==(const SequenceElement&, const SequenceElement&) = default;
};

/// x_k + y_k sqrt(d) = alpha eps^{2k}, by binary powering.
SequenceElement element_at(const SequenceParams& p, long k);

/// x'_k + y'_k sqrt(d) = alpha eps^k.
SequenceElement element_prime_at(const SequenceParams& p, long k);

/// Elements k_lo..k_hi by the three-term recurrence seeded at k = -1, 0, 1.
std::vector<SequenceElement> elements_by_recurrence(const SequenceParams& p, long k_lo, long k_hi);

/// Elements of the prime sequence k_lo..k_hi by its recurrence.
std::vector<SequenceElement> prime_elements_by_recurrence(const SequenceParams& p, long k_lo, long k_hi);

inline constexpr long kMaxDescent = 1'000'000;

/// Largest negative K with y_K > b^2. Throws std::runtime_error after
/// kMaxDescent steps.
long compute_K(const SequenceParams& p);

struct SquareHit {
  long k = 0;
  BigInt root;

  friend bool operator==(const SquareHit&, const SquareHit&) = default;
};

std::vector<SquareHit> scan_squares(const SequenceParams& p, long k_lo, long k_hi, bool prime_sequence = false);

/// Lower bound (|N|u^2/(4b^2)) * growth^{e} with e = k-1 for k > 0 and
/// max(0, K-k) for k < 0. Returns false for k == 0 (no claim).
bool growth_bound_holds(const SequenceParams& p, const SequenceElement& e, long K, const BigRational& growth);

/// du^2 - 3.
BigRational growth_b(const SequenceParams& p);

/// factor * du^2, with factor 99/100 by default.
BigRational growth_c(const SequenceParams& p, const BigRational& factor = BigRational(99, 100));

/// N_eps = 1 or du^2 >= 300.
bool growth_c_applies(const SequenceParams& p);

}  // namespace pellsq
