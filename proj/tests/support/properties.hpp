#pragma once

// Corpus-wide property checks shared by the unit tests and the acceptance
// binary.

#include <cstddef>
#include <string>
#include <vector>

#include "pellsq/sequences.hpp"

namespace props {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void check(bool ok, const std::string& what);
  bool ok() const { return checked > 0 && failed == 0; }
  std::string summary() const;
};

/// 100 random valid tuples, both signs of N_alpha.
const std::vector<pellsq::SequenceParams>& random_corpus();

/// Tuples with -N_alpha a positive square: random ones plus a small exhaustive family.
const std::vector<pellsq::SequenceParams>& main_corpus();

struct CorpusSquare {
  pellsq::SequenceParams params;
  long K = 0;
  pellsq::SequenceElement element;
  pellsq::BigInt root;
};

/// Integer squares y_k over [K - window, window] for every main-corpus tuple.
const std::vector<CorpusSquare>& main_corpus_squares();

/// Direct powering vs recurrence, base and prime sequences, |k| <= k_max,
/// with the norm identity on every element.
Tally dual_path(const std::vector<pellsq::SequenceParams>& tuples, long k_max);

/// Growth lower bounds for 1 <= k <= 20; the 0.99 variant where it applies.
Tally growth(const std::vector<pellsq::SequenceParams>& tuples);

struct GapResult {
  std::size_t pairs = 0;  // distinct square pairs with i, j != 0
  Tally holds;            // those meeting the hypothesis on y_i
};

/// Gap principle over pairs of distinct squares with i, j != 0.
GapResult gap(const std::vector<CorpusSquare>& squares);

/// 4 <= g^2 N^2 <= 4|N_alpha| for elements with k != 0 and integral x, y.
Tally lemma35(const std::vector<pellsq::SequenceParams>& tuples, long k_max);

/// Decomposition witness for every square with k >= 1 or k <= K.
Tally lemma31(const std::vector<CorpusSquare>& squares);

/// |phi_k| < 2.29 sqrt|N| / |x_k| < 0.6 on squares with y_k >= 4 sqrt(|N|/d).
Tally lemma34(const std::vector<CorpusSquare>& squares);

struct HypSample {
  pellsq::BigInt u1, u2, t_prime;
};

/// Inputs (2x_k, 2 sqrt(N/core N), core N) from main-corpus elements that
/// fall inside the approximant domain.
std::vector<HypSample> hypergeom_samples(std::size_t n);

/// |q_r omega^{1/4} - p_r - R_r| < 2^-(bits - 16) for r <= r_max.
Tally hyp_identity(const std::vector<HypSample>& samples, long r_max, long bits = 256);

/// |q_r| <= 0.89 Q^r and |R_r| <= ell0 E^-r for r <= r_max.
Tally hyp_growth(const std::vector<HypSample>& samples, long r_max, long bits = 256);

}  // namespace props
