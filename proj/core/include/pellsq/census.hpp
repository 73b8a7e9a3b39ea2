#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellsq/numeric.hpp"
#include "pellsq/sequences.hpp"

namespace pellsq {

enum class NormClass { SquareNorm, TwoPNorm, General };

const char* to_string(NormClass c);

/// square-norm if |N| is a square; 2p-norm if core(|N|) divides 2p for an odd prime p.
NormClass classify_norm(const BigInt& n_alpha);

/// |N| is a prime power or a perfect square.
bool prime_power_or_square(const BigInt& n_alpha);

inline constexpr long kCensusWindowGuard = 10'000;
inline constexpr long kDefaultCensusWindow = 100;

class WindowGuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct SquareValue {
  BigInt root;
  std::vector<long> indices;

  BigInt value() const { return root * root; }
};

struct SquareCensus {
  SequenceParams params;
  long k_lo = 0, k_hi = 0;
  bool prime_sequence = false;
  std::vector<SquareValue> squares;  // distinct, ascending
  NormClass norm_class = NormClass::General;
  std::size_t even_index_values = 0;  // distinct values hit at even k
  std::size_t odd_index_values = 0;   // distinct values hit at odd k
  int limit = 4;                      // conjecture limit for this sequence kind
  bool violation = false;

  std::size_t count() const { return squares.size(); }
  std::string to_json() const;
};

/// Distinct integer squares among y_k (or y'_k) for k in [k_lo, k_hi].
SquareCensus square_census(const SequenceParams& p, long k_lo, long k_hi, bool prime_sequence = false);

/// Limits: base sequence 2 / 3 / 4 by class; prime sequence 3 when |N| is a
/// prime power or square, else 4.
int conjecture_limit(const SequenceParams& p, bool prime_sequence);

struct PalindromeReport {
  bool palindrome = false;       // y_{-k} == y_{k-1} for 1 <= k <= k_max
  bool alpha_ratio_unit = false; // alpha^2 / N_alpha has doubled-integer coordinates
};

PalindromeReport palindrome_report(const SequenceParams& p, long k_max);
bool palindrome_check(const SequenceParams& p, long k_max);

/// Censuses for many tuples, ordered as given.
std::vector<SquareCensus> census_batch(const std::vector<SequenceParams>& params, long k_lo, long k_hi,
                                       bool prime_sequence, unsigned threads);

void write_census_jsonl(const std::filesystem::path& path, const std::vector<SquareCensus>& rows);
void write_violation_report(const std::filesystem::path& path, const std::vector<SquareCensus>& rows);

}  // namespace pellsq
