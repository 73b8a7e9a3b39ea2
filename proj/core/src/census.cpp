#include "pellsq/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

namespace pellsq {

const char* to_string(NormClass c) {
  switch (c) {
    case NormClass::SquareNorm:
      return "square-norm";
    case NormClass::TwoPNorm:
      return "2p-norm";
    case NormClass::General:
      return "general";
  }
  return "?";
}

NormClass classify_norm(const BigInt& n_alpha) {
  if (n_alpha == 0) throw std::domain_error("classify_norm: N_alpha = 0");
  BigInt n = abs(n_alpha);
  if (is_perfect_square(n)) return NormClass::SquareNorm;
  BigInt c = squarefree_core(n);
  if (c == 2) return NormClass::TwoPNorm;
  if (mpz_even_p(c.get_mpz_t())) c /= 2;
  if (c > 2 && is_probable_prime(c)) return NormClass::TwoPNorm;
  return NormClass::General;
}

bool prime_power_or_square(const BigInt& n_alpha) {
  BigInt n = abs(n_alpha);
  if (n == 0) return false;
  if (n == 1 || is_perfect_square(n)) return true;
  return factorize(n).size() == 1;
}

int conjecture_limit(const SequenceParams& p, bool prime_sequence) {
  if (prime_sequence) return prime_power_or_square(p.n_alpha) ? 3 : 4;
  switch (classify_norm(p.n_alpha)) {
    case NormClass::SquareNorm:
      return 2;
    case NormClass::TwoPNorm:
      return 3;
    case NormClass::General:
      return 4;
  }
  return 4;
}

SquareCensus square_census(const SequenceParams& p, long k_lo, long k_hi, bool prime_sequence) {
  if (k_lo > k_hi) throw std::invalid_argument("square_census requires k_lo <= k_hi");
  if (std::labs(k_lo) > kCensusWindowGuard || std::labs(k_hi) > kCensusWindowGuard)
    throw WindowGuardError("census window exceeds |k| <= 10^4");
  SquareCensus c;
  c.params = p;
  c.k_lo = k_lo;
  c.k_hi = k_hi;
  c.prime_sequence = prime_sequence;
  c.norm_class = classify_norm(p.n_alpha);
  c.limit = conjecture_limit(p, prime_sequence);
  std::map<BigInt, std::vector<long>> by_root;
  for (auto& hit : scan_squares(p, k_lo, k_hi, prime_sequence)) by_root[hit.root].push_back(hit.k);
  std::set<BigInt> even, odd;
  for (auto& [root, ks] : by_root) {
    for (long k : ks) (k % 2 == 0 ? even : odd).insert(root);
    c.squares.push_back({root, ks});
  }
  c.even_index_values = even.size();
  c.odd_index_values = odd.size();
  c.violation = static_cast<int>(c.squares.size()) > c.limit;
  return c;
}

std::string SquareCensus::to_json() const {
  nlohmann::json j;
  j["tuple"] = {params.a.get_str(), params.b.get_str(), params.d.get_str(), params.t.get_str(), params.u.get_str()};
  j["n_alpha"] = params.n_alpha.get_str();
  j["window"] = {k_lo, k_hi};
  j["sequence"] = prime_sequence ? "prime" : "base";
  j["class"] = to_string(norm_class);
  j["distinct"] = squares.size();
  j["limit"] = limit;
  j["violation"] = violation;
  j["even_index_values"] = even_index_values;
  j["odd_index_values"] = odd_index_values;
  j["squares"] = nlohmann::json::array();
  for (const auto& s : squares) j["squares"].push_back({{"root", s.root.get_str()}, {"k", s.indices}});
  return j.dump();
}

PalindromeReport palindrome_report(const SequenceParams& p, long k_max) {
  if (k_max < 1) throw std::invalid_argument("palindrome_check requires k_max >= 1");
  PalindromeReport r;
  auto els = elements_by_recurrence(p, -k_max, k_max - 1);
  // els[i] has k = -k_max + i
  auto y2 = [&](long k) -> const BigInt& { return els[static_cast<std::size_t>(k + k_max)].y2; };
  r.palindrome = true;
  for (long k = 1; k <= k_max; ++k)
    if (y2(-k) != y2(k - 1)) {
      r.palindrome = false;
      break;
    }
  if (p.n_alpha != 0) {
    BigInt b2 = p.b * p.b;
    BigInt x2 = 2 * (p.a * p.a + b2 * b2 * p.d);
    BigInt yy2 = 4 * p.a * b2;
    r.alpha_ratio_unit = mpz_divisible_p(x2.get_mpz_t(), p.n_alpha.get_mpz_t()) &&
                         mpz_divisible_p(yy2.get_mpz_t(), p.n_alpha.get_mpz_t());
  }
  return r;
}

bool palindrome_check(const SequenceParams& p, long k_max) { return palindrome_report(p, k_max).palindrome; }

std::vector<SquareCensus> census_batch(const std::vector<SequenceParams>& params, long k_lo, long k_hi,
                                       bool prime_sequence, unsigned threads) {
  std::vector<SquareCensus> out(params.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < params.size();) {
      try {
        out[i] = square_census(params[i], k_lo, k_hi, prime_sequence);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < std::max(1u, threads); ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

void write_census_jsonl(const std::filesystem::path& path, const std::vector<SquareCensus>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& r : rows) out << r.to_json() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_violation_report(const std::filesystem::path& path, const std::vector<SquareCensus>& rows) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& r : rows)
    if (r.violation) out << r.to_json() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace pellsq
