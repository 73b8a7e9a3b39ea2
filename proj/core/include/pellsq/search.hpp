#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pellsq/numeric.hpp"
#include "pellsq/sequences.hpp"

namespace pellsq {

struct CandidateTuple {
  BigInt a, b, d, t, u;
  int sign = 0;  // N_eps
  BigInt n_alpha;
  BigInt n_root;

  SequenceParams params() const;
  friend bool operator==(const CandidateTuple&, const CandidateTuple&) = default;
};

enum class RecordPredicate {
  EscapesBounds,    // record unless the prerequisite and all four step bounds hold
  SatisfiesBounds,  // record when the prerequisite and all four step bounds hold
  All,              // record every enumerated tuple
};

const char* to_string(RecordPredicate p);
std::optional<RecordPredicate> parse_record_predicate(const std::string& s);

struct SearchConfig {
  std::uint64_t b = 5;
  unsigned threads = 1;
  RecordPredicate predicate = RecordPredicate::EscapesBounds;
  bool prerequisite_strict = false;  // d > 12b^2/u^2 instead of >=
  bool step_strict = true;           // d > term instead of >=
  bool verify = true;

  // Restriction to a sub-block (micro runs).
  std::optional<std::uint64_t> only_u;
  std::optional<std::uint64_t> only_t;
  std::optional<int> only_sign;  // N_eps

  std::optional<std::filesystem::path> jsonl_path;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> progress_path;

  /// Called after each u completes (u, running count).
  std::function<void(std::uint64_t, std::uint64_t)> on_u_done;

  std::string canonical() const;
  std::uint64_t fingerprint() const;  // FNV-1a of canonical()
};

struct Violation {
  CandidateTuple tuple;
  long k = 0;
  BigInt root;
};

struct SearchReport {
  std::uint64_t b = 0;
  BigInt U_b;
  BigInt D_b;
  std::uint64_t candidate_count = 0;
  std::uint64_t enumerated_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> per_u;  // (u, count), nonzero only
  std::vector<Violation> violations;
  double wall_seconds = 0;
  double cpu_seconds = 0;
  std::uint64_t fingerprint = 0;
  bool resumed = false;
};

/// Squares y_k (k >= 2 or k <= K-1) below the six-term threshold.
std::vector<std::pair<long, BigInt>> verify_candidate(const CandidateTuple& tuple);

/// Whether a tuple is recorded under cfg. Exact.
bool record_tuple(const CandidateTuple& tuple, const SearchConfig& cfg);

/// Enumerates and records tuples, calling sink in (u, sign, t, a) order.
/// Returns the number recorded.
std::uint64_t enumerate_candidates(const SearchConfig& cfg, const std::function<void(const CandidateTuple&)>& sink);

/// Full search run with persistence; throws std::runtime_error on I/O errors.
SearchReport run_search(const SearchConfig& cfg);

std::string to_jsonl(const CandidateTuple& t);
void write_csv(const std::filesystem::path& path, const SearchReport& r);

/// All (a, n) with a^2 + n^2 = m, a, n >= 1, sorted by a. Brute force oracle.
std::vector<std::pair<std::uint64_t, std::uint64_t>> two_squares_bruteforce(std::uint64_t m);

/// Same via Gaussian integer factorisation.
std::vector<std::pair<std::uint64_t, std::uint64_t>> two_squares(std::uint64_t m);

}  // namespace pellsq
