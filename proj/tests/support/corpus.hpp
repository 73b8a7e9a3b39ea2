#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pellsq/sequences.hpp"

namespace corpus {

struct Unit {
  std::uint64_t t = 0, u = 0;
  int norm = 0;  // +1 or -1
};

/// Smallest u >= 1 with d u^2 +- 4 a square, searching u <= max_u.
std::optional<Unit> smallest_unit(std::uint64_t d, std::uint64_t max_u = 20000);

/// Valid tuples with N_alpha of either sign. Fixed seed, deterministic.
std::vector<pellsq::SequenceParams> random_tuples(std::size_t n, std::uint64_t seed = 20240611);

/// Valid tuples with N_alpha < 0.
std::vector<pellsq::SequenceParams> negative_norm_tuples(std::size_t n, std::uint64_t seed = 77);

/// Tuples with -N_alpha a positive square (a^2 + n^2 = d b^4).
std::vector<pellsq::SequenceParams> main_case_tuples(std::size_t n, std::uint64_t seed = 1234);

/// Exhaustive small family: b <= max_b, d <= max_d, smallest unit and its
/// square, every a with d b^4 - a^2 a positive square.
std::vector<pellsq::SequenceParams> small_main_case_family(std::uint64_t max_b, std::uint64_t max_d);

}  // namespace corpus
