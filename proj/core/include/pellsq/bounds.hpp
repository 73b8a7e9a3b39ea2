#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellsq/numeric.hpp"
#include "pellsq/sequences.hpp"

namespace pellsq {

enum class Symbol { B, N, D, U, Y };
inline constexpr std::size_t kSymbolCount = 5;

const char* to_string(Symbol s);

/// coefficient * prod symbol^exponent, all exponents rational. N means |N_alpha|.
struct PowerTerm {
  std::string label;
  BigRational coefficient;
  std::array<BigRational, kSymbolCount> exponents{};

  PowerTerm& with(Symbol s, long num, long den = 1);
  const BigRational& exponent(Symbol s) const { return exponents[static_cast<std::size_t>(s)]; }

  /// lcm of exponent denominators.
  unsigned long clearing_power() const;
};

PowerTerm make_term(std::string label, const std::string& coefficient);

class MissingSymbol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SymbolValues {
  std::array<std::optional<BigRational>, kSymbolCount> values{};

  SymbolValues& set(Symbol s, const BigRational& v);
  const BigRational& get(Symbol s) const;

  static SymbolValues of(const SequenceParams& p);
};

/// term^L exactly, where L is a multiple of term.clearing_power().
BigRational term_power(const PowerTerm& term, const SymbolValues& values, unsigned long L);

/// Sign of lhs - term (lhs >= 0, symbol values > 0).
int compare_power(const BigRational& lhs, const PowerTerm& term, const SymbolValues& values);

/// Sign of lhs - rhs for two terms.
int compare_terms(const PowerTerm& lhs, const PowerTerm& rhs, const SymbolValues& values);

/// floor(term).
BigInt floor_term(const PowerTerm& term, const SymbolValues& values);

/// Approximate value for diagnostics only.
double approx_term(const PowerTerm& term, const SymbolValues& values);

/// Natural log of the term in double precision.
double log_term(const PowerTerm& term, const SymbolValues& values);

// Term tables.
const std::vector<PowerTerm>& prop41_terms();    // vs y, symbols b, N, d
const PowerTerm& thm12_term();                  // vs y
const std::vector<PowerTerm>& step_terms();      // vs d: ass-6a, ass-9a, ass-10a, dLB2
const std::vector<PowerTerm>& enum_bound_terms(); // vs d: 12b^2/u^2, ..., 85b^8/u^4
const PowerTerm& prerequisite_term();           // 12b^2/u^2

/// y_j > (1433/25) d^2 y_i^3 / (b^4 N^2). Inputs are doubled coordinates.
bool gap_holds(const BigInt& y2_i, const BigInt& y2_j, const SequenceParams& p);

/// Gap principle hypothesis: y_i >= max(4 sqrt(|N|/d), b^2|N|/d), with y doubled.
bool gap_hypothesis(const BigInt& y2_i, const SequenceParams& p);

/// y exceeds every term of the six-term maximum. y doubled.
bool prop41_exceeds(const BigInt& y2, const SequenceParams& p);
bool prop41_exceeds(const BigInt& y2, const SymbolValues& base);
bool thm12_threshold_exceeds(const BigInt& y2, const SequenceParams& p);

struct StepBounds {
  std::array<bool, 4> exceeds{};
  bool all() const { return exceeds[0] && exceeds[1] && exceeds[2] && exceeds[3]; }
};

/// d > each step term. Requires N_alpha < 0.
StepBounds step_d_bounds(const SequenceParams& p);
StepBounds step_d_bounds(const BigInt& b, const BigInt& d, const BigInt& u, const BigInt& abs_n);

/// Largest n with d > term(|N| = n^2) (d >= term when not strict); 0 when no
/// n >= 1 qualifies. Used by the search kernel.
BigInt step_n_cap(const PowerTerm& term, const BigInt& b, const BigInt& d, const BigInt& u, bool strict = true);

struct EnumBound {
  std::size_t term_index = 0;  // into enum_bound_terms()
  BigInt cap;                  // largest integer d <= D_{b,u}
};

EnumBound search_enum_bound(const BigInt& b, const BigInt& u);

/// d vs D_{b,u}, exact.
int compare_enum_bound(const BigRational& d, const BigInt& b, const BigInt& u);

/// Smallest u with D_{b,u} < 2.
BigInt compute_Ub(const BigInt& b);

bool admissible_b(const BigInt& b);

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the conclusion "every prime divisor of b is 1 mod 4" on an instance.
/// Throws PreconditionViolation when gcd(a,b^2) is not squarefree or
/// db^4 - a^2 is not a positive square.
bool lemma36_all_divisors_1mod4(const BigInt& a, const BigInt& b, const BigInt& d);

}  // namespace pellsq
