#include "pellsq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "pellsq/bounds.hpp"

namespace pellsq {

SequenceParams CandidateTuple::params() const { return SequenceParams::make(a, b, d, t, u); }

const char* to_string(RecordPredicate p) {
  switch (p) {
    case RecordPredicate::EscapesBounds:
      return "escapes-bounds";
    case RecordPredicate::SatisfiesBounds:
      return "satisfies-bounds";
    case RecordPredicate::All:
      return "all";
  }
  return "?";
}

std::optional<RecordPredicate> parse_record_predicate(const std::string& s) {
  for (auto p : {RecordPredicate::EscapesBounds, RecordPredicate::SatisfiesBounds, RecordPredicate::All})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

std::string SearchConfig::canonical() const {
  std::ostringstream os;
  os << "b=" << b << ";predicate=" << to_string(predicate) << ";prereq_strict=" << prerequisite_strict
     << ";step_strict=" << step_strict << ";verify=" << verify;
  if (only_u) os << ";u=" << *only_u;
  if (only_t) os << ";t=" << *only_t;
  if (only_sign) os << ";sign=" << *only_sign;
  return os.str();
}

std::uint64_t SearchConfig::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_jsonl(const CandidateTuple& t) {
  std::string s = "{\"a\":\"" + t.a.get_str() + "\",\"b\":\"" + t.b.get_str() + "\",\"d\":\"" + t.d.get_str() +
                  "\",\"t\":\"" + t.t.get_str() + "\",\"u\":\"" + t.u.get_str() + "\",\"sign\":\"" +
                  std::to_string(t.sign) + "\",\"n\":\"" + t.n_root.get_str() + "\"}";
  return s;
}

void write_csv(const std::filesystem::path& path, const SearchReport& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "b,U_b,D_b,c_b,violations,cpu_seconds\n";
  char cpu[64];
  std::snprintf(cpu, sizeof cpu, "%.3f", r.cpu_seconds);
  out << r.b << ',' << r.U_b.get_str() << ',' << r.D_b.get_str() << ',' << r.candidate_count << ','
      << r.violations.size() << ',' << cpu << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

// y exceeds the six-term maximum; double filter with exact fallback.
class Prop41Gate {
 public:
  explicit Prop41Gate(const SequenceParams& p) : values_(SymbolValues::of(p)) {
    log_max_ = -INFINITY;
    for (const auto& t : prop41_terms()) log_max_ = std::max(log_max_, log_term(t, values_));
  }

  bool exceeds(const BigInt& y2) const {
    if (y2 <= 0) return false;
    long e = 0;
    double m = mpz_get_d_2exp(&e, y2.get_mpz_t());
    double log_y = std::log(m) + (static_cast<double>(e) - 1.0) * std::log(2.0);
    double tol = 1e-9 * (1.0 + std::fabs(log_y));
    if (log_y > log_max_ + tol) return true;
    if (log_y < log_max_ - tol) return false;
    return prop41_exceeds(y2, values_);
  }

 private:
  SymbolValues values_;
  double log_max_;
};

bool square_half(const BigInt& y2, BigInt& root) {
  if (!mpz_even_p(y2.get_mpz_t())) return false;
  BigInt y = y2 / 2;
  if (!mpz_perfect_square_p(y.get_mpz_t())) return false;
  root = isqrt(y);
  return true;
}

constexpr long kMaxScan = 100'000;

}  // namespace

std::vector<std::pair<long, BigInt>> verify_candidate(const CandidateTuple& tuple) {
  const SequenceParams p = tuple.params();
  const Prop41Gate gate(p);
  std::vector<std::pair<long, BigInt>> hits;
  BigInt root;
  const BigInt& C = p.recurrence_coeff;

  // Upward from k = 2.
  SequenceElement e1 = element_at(p, 1);
  BigInt lo = 2 * p.b * p.b, cur = e1.y2;
  for (long k = 2; k < kMaxScan; ++k) {
    BigInt next = C * cur - lo;
    lo = std::move(cur);
    cur = std::move(next);
    if (gate.exceeds(cur)) break;
    if (square_half(cur, root)) hits.emplace_back(k, root);
  }

  // Downward from K - 1.
  const BigInt target = 2 * p.b * p.b;
  BigInt hi = target;
  cur = element_at(p, -1).y2;
  long k = -1;
  while (cur <= target) {
    if (k <= -kMaxScan) throw std::runtime_error("verify_candidate: K descent cap for " + p.to_string());
    BigInt next = C * cur - hi;
    hi = std::move(cur);
    cur = std::move(next);
    --k;
  }
  for (--k; k > -kMaxScan; --k) {
    BigInt next = C * cur - hi;
    hi = std::move(cur);
    cur = std::move(next);
    if (gate.exceeds(cur)) break;
    if (square_half(cur, root)) hits.emplace_back(k, root);
  }
  return hits;
}

bool record_tuple(const CandidateTuple& tuple, const SearchConfig& cfg) {
  if (cfg.predicate == RecordPredicate::All) return true;
  SymbolValues v;
  v.set(Symbol::B, BigRational(tuple.b)).set(Symbol::U, BigRational(tuple.u)).set(Symbol::N, BigRational(abs(tuple.n_alpha)));
  const BigRational d(tuple.d);
  int pre = compare_power(d, prerequisite_term(), v);
  bool holds = cfg.prerequisite_strict ? pre > 0 : pre >= 0;
  for (const auto& term : step_terms()) {
    int c = compare_power(d, term, v);
    holds = holds && (cfg.step_strict ? c > 0 : c >= 0);
  }
  return cfg.predicate == RecordPredicate::SatisfiesBounds ? holds : !holds;
}

// ---------------------------------------------------------------------------
// Two squares.

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Gauss {
  i64 re, im;
};

Gauss gmul(Gauss x, Gauss y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// x^2 + y^2 = p for a prime p = 1 mod 4 (Hermite-Serret).
Gauss prime_two_squares(u64 p) {
  u64 c = 2;
  while (powmod(c, (p - 1) / 2, p) != p - 1) ++c;
  u64 x = powmod(c, (p - 1) / 4, p);
  u64 a = p, b = x;
  u64 lim = small::isqrt(p);
  while (b > lim) {
    u64 r = a % b;
    a = b;
    b = r;
  }
  u64 y = small::isqrt(p - b * b);
  return {static_cast<i64>(b), static_cast<i64>(y)};
}

// Representations from a factorisation, or empty if some 3 mod 4 prime has odd exponent.
std::vector<std::pair<u64, u64>> reps_from(const small::Factorization& f) {
  std::vector<std::pair<u64, u64>> out;
  Gauss base{1, 0};
  std::vector<Gauss> zs{{1, 0}};
  for (auto [p, e] : f) {
    if (p == 2) {
      for (unsigned i = 0; i < e; ++i) base = gmul(base, {1, 1});
    } else if (p % 4 == 3) {
      if (e % 2) return out;
      for (unsigned i = 0; i < e / 2; ++i) base = gmul(base, {static_cast<i64>(p), 0});
    } else {
      Gauss pi = prime_two_squares(p), pc{pi.re, -pi.im};
      std::vector<Gauss> pp{{1, 0}}, cp{{1, 0}};
      for (unsigned i = 0; i < e; ++i) {
        pp.push_back(gmul(pp.back(), pi));
        cp.push_back(gmul(cp.back(), pc));
      }
      std::vector<Gauss> next;
      next.reserve(zs.size() * (e + 1));
      for (const auto& z : zs)
        for (unsigned j = 0; j <= e; ++j) next.push_back(gmul(z, gmul(pp[j], cp[e - j])));
      zs = std::move(next);
    }
  }
  for (auto z : zs) {
    z = gmul(z, base);
    u64 A = static_cast<u64>(z.re < 0 ? -z.re : z.re);
    u64 B = static_cast<u64>(z.im < 0 ? -z.im : z.im);
    if (A > 0 && B > 0) {
      out.emplace_back(A, B);
      out.emplace_back(B, A);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

small::Factorization merge(const small::Factorization& x, const small::Factorization& y) {
  small::Factorization r;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.push_back(y[j++]);
    } else {
      r.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

std::vector<std::pair<u64, u64>> two_squares_bruteforce(u64 m) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 a = 1; a * a < m; ++a) {
    u64 rest = m - a * a;
    if (small::is_square(rest)) out.emplace_back(a, small::isqrt(rest));
  }
  return out;
}

std::vector<std::pair<u64, u64>> two_squares(u64 m) {
  if (m == 0) return {};
  return reps_from(small::factorize(m));
}

// ---------------------------------------------------------------------------
// Search engine.

namespace {

struct Hit {
  u64 u, t, d, a, n;
  int sign;
};

struct Block {
  u64 u;
  int sign;
  u64 t_lo, t_hi;  // inclusive
  bool last_of_u;
};

struct BlockResult {
  std::vector<Hit> hits;  // only when kept
  u64 recorded = 0;
  u64 enumerated = 0;
  std::vector<Violation> violations;
};

CandidateTuple to_tuple(const Hit& h, u64 b) {
  CandidateTuple c;
  c.a = BigInt(static_cast<unsigned long>(h.a));
  c.b = BigInt(static_cast<unsigned long>(b));
  c.d = BigInt(static_cast<unsigned long>(h.d));
  c.t = BigInt(static_cast<unsigned long>(h.t));
  c.u = BigInt(static_cast<unsigned long>(h.u));
  c.sign = h.sign;
  c.n_root = BigInt(static_cast<unsigned long>(h.n));
  c.n_alpha = -(c.n_root * c.n_root);
  return c;
}

u64 to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw std::overflow_error("value exceeds 64 bits");
  return static_cast<u64>(mpz_get_ui(v.get_mpz_t()));
}

class Engine {
 public:
  Engine(const SearchConfig& cfg, bool keep_hits) : cfg_(cfg), keep_hits_(keep_hits) {
    if (cfg.b < 1) throw std::invalid_argument("b must be >= 1");
    b_ = BigInt(static_cast<unsigned long>(cfg.b));
    Ub_ = compute_Ub(b_);
    b4_ = cfg.b * cfg.b * cfg.b * cfg.b;
    b4_factors_ = small::factorize(b4_);
    twelve_b2_ = 12 * cfg.b * cfg.b;
    caps_.resize(to_u64(Ub_));
    for (u64 u = 1; u < caps_.size(); ++u) caps_[u] = to_u64(search_enum_bound(b_, BigInt(static_cast<unsigned long>(u))).cap);
    // d b^4 must fit comfortably in 64 bits.
    u128 biggest = static_cast<u128>(caps_.size() > 1 ? caps_[1] : 0) * b4_;
    if (biggest >> 62) throw std::overflow_error("b too large for the 64-bit search kernel");
  }

  const BigInt& Ub() const { return Ub_; }
  u64 cap(u64 u) const { return caps_[u]; }

  std::vector<Block> blocks(u64 first_u) const {
    std::vector<Block> out;
    const u64 chunk = 1024;
    for (u64 u = std::max<u64>(first_u, 1); u < caps_.size(); ++u) {
      if (cfg_.only_u && *cfg_.only_u != u) continue;
      std::size_t first = out.size();
      for (int sign : {-1, 1}) {
        if (cfg_.only_sign && *cfg_.only_sign != sign) continue;
        // t^2 = d u^2 + 4 sign with d <= cap
        u128 cu2 = static_cast<u128>(caps_[u]) * u * u;
        if (sign < 0 && cu2 < 4) continue;
        u64 t_max = small::isqrt(static_cast<u64>(sign > 0 ? cu2 + 4 : cu2 - 4));
        if (cfg_.only_t) {
          if (*cfg_.only_t <= t_max) out.push_back({u, sign, *cfg_.only_t, *cfg_.only_t, false});
          continue;
        }
        for (u64 lo = 1; lo <= t_max; lo += chunk) out.push_back({u, sign, lo, std::min(t_max, lo + chunk - 1), false});
      }
      if (out.size() == first) out.push_back({u, 1, 1, 0, false});  // empty placeholder keeps per-u progress
      out.back().last_of_u = true;
    }
    return out;
  }

  BlockResult run(const Block& blk) const {
    BlockResult res;
    const u64 u = blk.u, u2 = u * u;
    for (u64 t = blk.t_lo; t <= blk.t_hi; ++t) {
      u128 t2 = static_cast<u128>(t) * t;
      u128 num;
      if (blk.sign > 0) {
        if (t2 <= 4) continue;
        num = t2 - 4;
      } else {
        num = t2 + 4;
      }
      if (num % u2) continue;
      u64 d = static_cast<u64>(num / u2);
      if (d < 2 || d > caps_[u] || small::is_square(d)) continue;
      auto reps = reps_from(merge(small::factorize(d), b4_factors_));
      if (reps.empty()) continue;
      res.enumerated += reps.size();
      u64 ncap = 0;
      bool pre = false;
      if (cfg_.predicate != RecordPredicate::All) {
        u128 du2 = static_cast<u128>(d) * u2;
        pre = cfg_.prerequisite_strict ? du2 > twelve_b2_ : du2 >= twelve_b2_;
        ncap = n_cap(d, u);
      }
      for (auto [a, n] : reps) {
        bool holds = pre && n <= ncap;
        bool rec = cfg_.predicate == RecordPredicate::All ||
                   (cfg_.predicate == RecordPredicate::EscapesBounds ? !holds : holds);
        if (!rec) continue;
        Hit h{u, t, d, a, n, blk.sign};
        ++res.recorded;
        if (keep_hits_) res.hits.push_back(h);
        if (cfg_.verify) {
          CandidateTuple c = to_tuple(h, cfg_.b);
          for (auto& [k, root] : verify_candidate(c)) res.violations.push_back({c, k, root});
        }
      }
    }
    return res;
  }

 private:
  u64 n_cap(u64 d, u64 u) const {
    BigInt bd(static_cast<unsigned long>(d)), bu(static_cast<unsigned long>(u));
    BigInt best;
    bool first = true;
    for (const auto& term : step_terms()) {
      BigInt c = step_n_cap(term, b_, bd, bu, cfg_.step_strict);
      if (first || c < best) best = c;
      first = false;
    }
    if (mpz_sizeinbase(best.get_mpz_t(), 2) > 63) return UINT64_MAX;
    return static_cast<u64>(mpz_get_ui(best.get_mpz_t()));
  }

  const SearchConfig& cfg_;
  bool keep_hits_;
  BigInt b_, Ub_;
  u64 b4_;
  small::Factorization b4_factors_;
  u64 twelve_b2_;
  std::vector<u64> caps_;
};

// Runs blocks on a pool and hands results to flush() strictly in block order.
template <typename Flush>
void run_ordered(const Engine& engine, const std::vector<Block>& blocks, unsigned threads, Flush flush) {
  threads = std::max(1u, threads);
  const std::size_t window = 8 * static_cast<std::size_t>(threads);
  std::vector<std::optional<BlockResult>> slots(blocks.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next_block = 0, next_flush = 0;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return error || next_block >= blocks.size() || next_block < next_flush + window; });
        if (error || next_block >= blocks.size()) return;
        i = next_block++;
      }
      try {
        BlockResult r = engine.run(blocks[i]);
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  try {
    while (next_flush < blocks.size()) {
      BlockResult r;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return error || slots[next_flush].has_value(); });
        if (error) break;
        r = std::move(*slots[next_flush]);
        slots[next_flush].reset();
      }
      flush(blocks[next_flush], r);
      {
        std::lock_guard lock(mu);
        ++next_flush;
      }
      cv.notify_all();
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!error) error = std::current_exception();
  }
  cv.notify_all();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct ResumeState {
  u64 next_u = 1;
  u64 count = 0;
  u64 enumerated = 0;
  std::uintmax_t jsonl_bytes = 0;
  std::vector<std::pair<u64, u64>> per_u;
  std::vector<Violation> violations;
  bool resumed = false;
};

nlohmann::json violation_json(const Violation& v) {
  return {{"a", v.tuple.a.get_str()}, {"b", v.tuple.b.get_str()}, {"d", v.tuple.d.get_str()},
          {"t", v.tuple.t.get_str()}, {"u", v.tuple.u.get_str()}, {"sign", std::to_string(v.tuple.sign)},
          {"n", v.tuple.n_root.get_str()}, {"k", v.k}, {"root", v.root.get_str()}};
}

Violation violation_from(const nlohmann::json& j) {
  Violation v;
  v.tuple.a = BigInt(j.at("a").get<std::string>());
  v.tuple.b = BigInt(j.at("b").get<std::string>());
  v.tuple.d = BigInt(j.at("d").get<std::string>());
  v.tuple.t = BigInt(j.at("t").get<std::string>());
  v.tuple.u = BigInt(j.at("u").get<std::string>());
  v.tuple.sign = std::stoi(j.at("sign").get<std::string>());
  v.tuple.n_root = BigInt(j.at("n").get<std::string>());
  v.tuple.n_alpha = -(v.tuple.n_root * v.tuple.n_root);
  v.k = j.at("k").get<long>();
  v.root = BigInt(j.at("root").get<std::string>());
  return v;
}

ResumeState load_progress(const SearchConfig& cfg) {
  ResumeState st;
  if (!cfg.progress_path || !std::filesystem::exists(*cfg.progress_path)) return st;
  std::ifstream in(*cfg.progress_path);
  std::string line;
  const std::string fp = std::to_string(cfg.fingerprint());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      break;  // torn final line
    }
    if (j.at("fingerprint").get<std::string>() != fp)
      throw std::runtime_error("progress file belongs to a different configuration");
    u64 u = j.at("u").get<u64>();
    u64 cu = j.at("u_count").get<u64>();
    st.next_u = u + 1;
    st.count = j.at("count").get<u64>();
    st.enumerated = j.at("enumerated").get<u64>();
    st.jsonl_bytes = j.at("jsonl_bytes").get<std::uintmax_t>();
    if (cu) st.per_u.emplace_back(u, cu);
    for (const auto& v : j.at("violations")) st.violations.push_back(violation_from(v));
    st.resumed = true;
  }
  return st;
}

}  // namespace

std::uint64_t enumerate_candidates(const SearchConfig& cfg, const std::function<void(const CandidateTuple&)>& sink) {
  SearchConfig local = cfg;
  local.verify = false;
  Engine engine(local, true);
  u64 count = 0;
  run_ordered(engine, engine.blocks(1), local.threads, [&](const Block&, const BlockResult& r) {
    for (const auto& h : r.hits) sink(to_tuple(h, local.b));
    count += r.recorded;
  });
  return count;
}

SearchReport run_search(const SearchConfig& cfg) {
  const auto wall0 = std::chrono::steady_clock::now();
  const std::clock_t cpu0 = std::clock();
  Engine engine(cfg, cfg.jsonl_path.has_value());

  SearchReport rep;
  rep.b = cfg.b;
  rep.U_b = engine.Ub();
  rep.D_b = BigInt(static_cast<unsigned long>(engine.cap(1)));
  rep.fingerprint = cfg.fingerprint();

  ResumeState st = load_progress(cfg);
  rep.resumed = st.resumed;
  rep.candidate_count = st.count;
  rep.enumerated_count = st.enumerated;
  rep.per_u = st.per_u;
  rep.violations = st.violations;

  std::ofstream jsonl;
  if (cfg.jsonl_path) {
    if (st.resumed) {
      if (!std::filesystem::exists(*cfg.jsonl_path) || std::filesystem::file_size(*cfg.jsonl_path) < st.jsonl_bytes)
        throw std::runtime_error("JSONL output is shorter than the recorded progress");
      std::filesystem::resize_file(*cfg.jsonl_path, st.jsonl_bytes);
      jsonl.open(*cfg.jsonl_path, std::ios::app | std::ios::binary);
    } else {
      jsonl.open(*cfg.jsonl_path, std::ios::trunc | std::ios::binary);
    }
    if (!jsonl) throw std::runtime_error("cannot open " + cfg.jsonl_path->string());
  }
  std::ofstream progress;
  if (cfg.progress_path) {
    progress.open(*cfg.progress_path, st.resumed ? std::ios::app : std::ios::trunc);
    if (!progress) throw std::runtime_error("cannot open " + cfg.progress_path->string());
  }

  u64 u_count = 0;
  std::vector<Violation> u_violations;
  std::uintmax_t bytes = st.jsonl_bytes;
  std::string buf;
  run_ordered(engine, engine.blocks(st.next_u), cfg.threads, [&](const Block& blk, const BlockResult& r) {
    rep.candidate_count += r.recorded;
    rep.enumerated_count += r.enumerated;
    u_count += r.recorded;
    for (const auto& v : r.violations) {
      rep.violations.push_back(v);
      u_violations.push_back(v);
    }
    if (jsonl.is_open()) {
      buf.clear();
      for (const auto& h : r.hits) {
        buf += to_jsonl(to_tuple(h, cfg.b));
        buf += '\n';
      }
      jsonl.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      if (!jsonl) throw std::runtime_error("write failed for " + cfg.jsonl_path->string());
      bytes += buf.size();
    }
    if (!blk.last_of_u) return;
    if (u_count) rep.per_u.emplace_back(blk.u, u_count);
    if (progress.is_open()) {
      if (jsonl.is_open()) jsonl.flush();
      nlohmann::json j;
      j["fingerprint"] = std::to_string(rep.fingerprint);
      j["u"] = blk.u;
      j["u_count"] = u_count;
      j["count"] = rep.candidate_count;
      j["enumerated"] = rep.enumerated_count;
      j["jsonl_bytes"] = bytes;
      j["violations"] = nlohmann::json::array();
      for (const auto& v : u_violations) j["violations"].push_back(violation_json(v));
      progress << j.dump() << '\n';
      progress.flush();
      if (!progress) throw std::runtime_error("write failed for " + cfg.progress_path->string());
    }
    if (cfg.on_u_done) cfg.on_u_done(blk.u, rep.candidate_count);
    u_count = 0;
    u_violations.clear();
  });

  rep.cpu_seconds = static_cast<double>(std::clock() - cpu0) / CLOCKS_PER_SEC;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  if (cfg.csv_path) write_csv(*cfg.csv_path, rep);
  return rep;
}

}  // namespace pellsq
