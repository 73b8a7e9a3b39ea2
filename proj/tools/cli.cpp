#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "pellsq/bounds.hpp"
#include "pellsq/census.hpp"
#include "pellsq/hypergeom.hpp"
#include "pellsq/search.hpp"
#include "pellsq/sequences.hpp"

namespace pellsq::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

long parse_long(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

BigInt parse_big(const std::string& s) {
  if (s.empty()) throw UsageError("empty integer");
  BigInt v;
  if (v.set_str(s, 10) != 0) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

SequenceParams parse_tuple(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 5) throw UsageError("tuple must be a,b,d,t,u: '" + s + "'");
  try {
    return SequenceParams::make(parse_big(parts[0]), parse_big(parts[1]), parse_big(parts[2]), parse_big(parts[3]),
                                parse_big(parts[4]));
  } catch (const InvalidParams& e) {
    throw UsageError(std::string("invalid tuple ") + s + ": " + to_string(e.reason()) + " (" + e.what() + ")");
  }
}

std::pair<long, long> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw UsageError("range must be lo..hi: '" + s + "'");
  long lo = parse_long(s.substr(0, pos));
  long hi = parse_long(s.substr(pos + 2));
  if (lo > hi) throw UsageError("empty range '" + s + "'");
  if (std::labs(lo) > kCensusWindowGuard || std::labs(hi) > kCensusWindowGuard)
    throw UsageError("range exceeds |k| <= " + std::to_string(kCensusWindowGuard));
  return {lo, hi};
}

std::string tuple_str(const SequenceParams& p) {
  return p.a.get_str() + "," + p.b.get_str() + "," + p.d.get_str() + "," + p.t.get_str() + "," + p.u.get_str();
}

std::string tuple_str(const CandidateTuple& t) {
  return t.a.get_str() + "," + t.b.get_str() + "," + t.d.get_str() + "," + t.t.get_str() + "," + t.u.get_str();
}

const char* yes(bool b) { return b ? "true" : "false"; }

struct SeqOpts {
  std::string tuple;
  std::string range = "-5..5";
  bool prime = false;
};

int cmd_seq(const SeqOpts& o, bool scan, std::ostream& out) {
  auto p = parse_tuple(o.tuple);
  auto [lo, hi] = parse_range(o.range);
  std::string canon = std::string(scan ? "scan" : "seq") + ";tuple=" + tuple_str(p) + ";range=" + std::to_string(lo) +
                      ".." + std::to_string(hi) + ";prime=" + (o.prime ? "1" : "0");
  out << "# " << (scan ? "scan" : "seq") << " tuple=" << tuple_str(p) << " N_alpha=" << p.n_alpha
      << " N_eps=" << p.n_epsilon << (o.prime ? " sequence=prime" : " sequence=base") << " fingerprint=" << hex(fnv1a(canon))
      << '\n';
  if (scan) {
    out << "# k root (y = root^2)\n";
    for (const auto& h : scan_squares(p, lo, hi, o.prime)) out << h.k << ' ' << h.root << '\n';
    return kExitOk;
  }
  out << "# k 2x 2y (doubled coordinates)\n";
  auto els = o.prime ? prime_elements_by_recurrence(p, lo, hi) : elements_by_recurrence(p, lo, hi);
  for (const auto& e : els) out << e.k << ' ' << e.x2 << ' ' << e.y2 << '\n';
  return kExitOk;
}

struct CensusOpts {
  std::vector<std::string> tuples;
  std::string tuples_file;
  std::string window = "-100..100";
  bool prime = false;
  unsigned threads = 1;
  std::string jsonl;
  std::string violations;
  long palindrome = 0;
};

int cmd_census(const CensusOpts& o, std::ostream& out, std::ostream& err) {
  std::vector<SequenceParams> params;
  for (const auto& s : o.tuples) params.push_back(parse_tuple(s));
  if (!o.tuples_file.empty()) {
    std::ifstream in(o.tuples_file);
    if (!in) throw std::runtime_error("cannot read " + o.tuples_file);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      params.push_back(parse_tuple(line));
    }
  }
  if (params.empty()) throw UsageError("census needs --tuple or --tuples-file");
  auto [lo, hi] = parse_range(o.window);

  std::string canon = "census;window=" + std::to_string(lo) + ".." + std::to_string(hi) + ";prime=" + (o.prime ? "1" : "0");
  for (const auto& p : params) canon += ";" + tuple_str(p);
  out << "# census window=" << lo << ".." << hi << (o.prime ? " sequence=prime" : " sequence=base")
      << " tuples=" << params.size() << " fingerprint=" << hex(fnv1a(canon)) << '\n';

  auto rows = census_batch(params, lo, hi, o.prime, o.threads);
  std::size_t violations = 0;
  for (const auto& c : rows) {
    out << tuple_str(c.params) << " N_alpha=" << c.params.n_alpha << " class=" << to_string(c.norm_class)
        << " distinct=" << c.count() << " limit=" << c.limit << " squares=";
    for (std::size_t i = 0; i < c.squares.size(); ++i) {
      out << (i ? "," : "") << c.squares[i].value() << "@";
      for (std::size_t j = 0; j < c.squares[i].indices.size(); ++j)
        out << (j ? "/" : "") << c.squares[i].indices[j];
    }
    if (c.squares.empty()) out << "-";
    if (o.palindrome > 0) {
      auto pr = palindrome_report(c.params, o.palindrome);
      out << " palindrome=" << yes(pr.palindrome) << " alpha_ratio_unit=" << yes(pr.alpha_ratio_unit);
    }
    if (c.violation) {
      out << " VIOLATION";
      ++violations;
    }
    out << '\n';
  }
  if (!o.jsonl.empty()) write_census_jsonl(o.jsonl, rows);
  if (violations) {
    if (!o.violations.empty()) write_violation_report(o.violations, rows);
    for (const auto& c : rows)
      if (c.violation) err << "conjecture violation: " << c.to_json() << '\n';
    return kExitViolations;
  }
  return kExitOk;
}

struct BoundsOpts {
  std::string tuple;
  std::string y2;
  std::string gap;
};

int cmd_bounds(const BoundsOpts& o, std::ostream& out) {
  auto p = parse_tuple(o.tuple);
  out << "# bounds tuple=" << tuple_str(p) << " fingerprint=" << hex(fnv1a("bounds;" + tuple_str(p))) << '\n';
  out << "N_alpha = " << p.n_alpha << '\n';
  out << "N_eps = " << p.n_epsilon << '\n';
  out << "main_case = " << yes(p.main_case()) << '\n';
  out << "K = " << compute_K(p) << '\n';
  auto v = SymbolValues::of(p);
  for (const auto& t : prop41_terms()) out << "prop41 floor(" << t.label << ") = " << floor_term(t, v) << '\n';
  out << "thm12 floor(" << thm12_term().label << ") = " << floor_term(thm12_term(), v) << '\n';
  const BigRational d(p.d);
  out << "prerequisite d >= " << prerequisite_term().label << ": "
      << yes(compare_power(d, prerequisite_term(), v) >= 0) << '\n';
  if (p.n_alpha < 0) {
    auto sb = step_d_bounds(p);
    for (std::size_t i = 0; i < step_terms().size(); ++i)
      out << "step d > " << step_terms()[i].label << ": " << yes(sb.exceeds[i]) << '\n';
  }
  auto eb = search_enum_bound(p.b, p.u);
  out << "D_{b,u} = floor(" << enum_bound_terms()[eb.term_index].label << ") = " << eb.cap << '\n';
  out << "d <= D_{b,u}: " << yes(compare_enum_bound(d, p.b, p.u) <= 0) << '\n';
  out << "U_b = " << compute_Ub(p.b) << '\n';
  out << "admissible_b = " << yes(admissible_b(p.b)) << '\n';
  if (!o.y2.empty()) {
    BigInt y2 = parse_big(o.y2);
    out << "prop41_exceeds(2y=" << y2 << ") = " << yes(prop41_exceeds(y2, p)) << '\n';
    out << "thm12_threshold_exceeds(2y=" << y2 << ") = " << yes(thm12_threshold_exceeds(y2, p)) << '\n';
  }
  if (!o.gap.empty()) {
    auto parts = split(o.gap, ',');
    if (parts.size() != 2) throw UsageError("--gap takes 2y_i,2y_j");
    BigInt yi = parse_big(parts[0]), yj = parse_big(parts[1]);
    out << "gap_hypothesis(2y_i=" << yi << ") = " << yes(gap_hypothesis(yi, p)) << '\n';
    out << "gap_holds(2y_i=" << yi << ", 2y_j=" << yj << ") = " << yes(gap_holds(yi, yj, p)) << '\n';
  }
  return kExitOk;
}

struct HypOpts {
  std::string u1, u2, t_prime;
  std::string tuple;
  long k = 1;
  long r = 4;
  long bits = 256;
};

int cmd_hypgeom(const HypOpts& o, std::ostream& out) {
  BigInt u1, u2, tp;
  std::string source;
  if (!o.tuple.empty()) {
    auto p = parse_tuple(o.tuple);
    if (!p.main_case()) throw UsageError("--tuple needs -N_alpha to be a positive square");
    auto in = lemma35_inputs(p, element_at(p, o.k));
    u1 = in.u1;
    u2 = in.u2;
    tp = in.t_prime;
    source = " tuple=" + tuple_str(p) + " k=" + std::to_string(o.k);
  } else {
    if (o.u1.empty() || o.u2.empty() || o.t_prime.empty()) throw UsageError("hypgeom needs --u1 --u2 --tprime or --tuple");
    u1 = parse_big(o.u1);
    u2 = parse_big(o.u2);
    tp = parse_big(o.t_prime);
  }
  if (tp >= 0) throw UsageError("--tprime must be negative");
  if (o.r < 0) throw UsageError("--r must be >= 0");
  if (o.bits < 128) throw UsageError("--bits must be >= 128");
  std::string canon = "hypgeom;u1=" + u1.get_str() + ";u2=" + u2.get_str() + ";t=" + tp.get_str() +
                      ";r=" + std::to_string(o.r) + ";bits=" + std::to_string(o.bits);
  out << "# hypgeom u1=" << u1 << " u2=" << u2 << " t'=" << tp << source << " precision_bits=" << o.bits
      << " fingerprint=" << hex(fnv1a(canon)) << '\n';
  for (long r = 0; r <= o.r; ++r) {
    auto a = approximants(u1, u2, tp, r, o.bits);
    if (r == 0) {
      out << "d' = " << to_string(a.d_prime) << '\n';
      out << "g^2 = " << to_string(a.g.g_squared) << " (g1=" << a.g.g1 << " g2=" << a.g.g2 << " g3=" << a.g.g3 << ")\n";
      out << "scriptN^2 = " << to_string(a.script_n2) << '\n';
      out << "phi = " << a.phi.to_string(25) << '\n';
      out << "Q = " << a.Q.to_string(25) << '\n';
      out << "E = " << a.E.to_string(25) << '\n';
      out << "ell0 = " << a.ell0.to_string(25) << '\n';
      out << "k0 = " << a.k0.to_string(4) << '\n';
      out << "# r D_{4,r} N_{d',4,r} |q_r w^(1/4) - p_r - R_r| |q_r| k0*Q^r |R_r| ell0*E^-r\n";
    }
    Real qbound = a.k0 * pow(a.Q, r);
    Real rbound = a.ell0 / pow(a.E, r);
    out << r << ' ' << a.D << ' ' << a.N << ' ' << a.identity_residual().to_string(6) << ' ' << a.q.abs().to_string(12)
        << ' ' << qbound.to_string(12) << ' ' << a.R.abs().to_string(12) << ' ' << rbound.to_string(12) << '\n';
  }
  return kExitOk;
}

struct SearchOpts {
  std::uint64_t b = 5;
  unsigned threads = 1;
  std::string predicate = "escapes-bounds";
  bool prereq_strict = false;
  bool step_nonstrict = false;
  bool no_verify = false;
  std::optional<std::uint64_t> only_u, only_t;
  std::optional<int> only_sign;
  std::string jsonl, csv, progress;
  bool confirm_long = false;
  bool per_u = false;
  bool verbose = false;
};

inline constexpr unsigned long kLongSearchCap = 1'000'000'000;

int cmd_search(const SearchOpts& o, std::ostream& out, std::ostream& err) {
  if (o.b < 1) throw UsageError("--b must be >= 1");
  if (!admissible_b(BigInt(static_cast<unsigned long>(o.b))))
    throw UsageError("b = " + std::to_string(o.b) + " is not admissible");
  auto pred = parse_record_predicate(o.predicate);
  if (!pred) throw UsageError("unknown predicate '" + o.predicate + "'");
  BigInt cap = search_enum_bound(BigInt(static_cast<unsigned long>(o.b)), 1).cap;
  if (cap > kLongSearchCap && !o.confirm_long && !o.only_u)
    throw UsageError("b = " + std::to_string(o.b) + " is a long search (D_b = " + cap.get_str() +
                     "); pass --confirm-long");

  SearchConfig cfg;
  cfg.b = o.b;
  cfg.threads = std::max(1u, o.threads);
  cfg.predicate = *pred;
  cfg.prerequisite_strict = o.prereq_strict;
  cfg.step_strict = !o.step_nonstrict;
  cfg.verify = !o.no_verify;
  cfg.only_u = o.only_u;
  cfg.only_t = o.only_t;
  cfg.only_sign = o.only_sign;
  if (!o.jsonl.empty()) cfg.jsonl_path = o.jsonl;
  if (!o.csv.empty()) cfg.csv_path = o.csv;
  if (!o.progress.empty()) cfg.progress_path = o.progress;
  if (o.verbose)
    cfg.on_u_done = [&err](std::uint64_t u, std::uint64_t count) { err << "u=" << u << " count=" << count << '\n'; };

  out << "# search " << cfg.canonical() << " threads=" << cfg.threads << " fingerprint=" << hex(cfg.fingerprint())
      << '\n';
  auto rep = run_search(cfg);
  if (rep.resumed) out << "# resumed from " << o.progress << '\n';
  out << "U_b = " << rep.U_b << '\n';
  out << "D_b = " << rep.D_b << '\n';
  out << "enumerated = " << rep.enumerated_count << '\n';
  if (o.per_u)
    for (auto [u, c] : rep.per_u) out << "u " << u << " " << c << '\n';
  for (const auto& v : rep.violations)
    out << "violation " << tuple_str(v.tuple) << " k=" << v.k << " root=" << v.root << '\n';
  out << "c_b = " << rep.candidate_count << ", violations = " << rep.violations.size() << '\n';
  out << "cpu_seconds = " << rep.cpu_seconds << ", wall_seconds = " << rep.wall_seconds << '\n';
  return rep.violations.empty() ? kExitOk : kExitViolations;
}

int cmd_table1(const std::vector<std::uint64_t>& bs, std::ostream& out) {
  std::string canon = "table1";
  for (auto b : bs) canon += ";" + std::to_string(b);
  out << "# table1 fingerprint=" << hex(fnv1a(canon)) << '\n';
  out << "b D_b U_b\n";
  for (auto b : bs) {
    BigInt bb(static_cast<unsigned long>(b));
    out << b << ' ' << search_enum_bound(bb, 1).cap << ' ' << compute_Ub(bb) << '\n';
  }
  return kExitOk;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("PELLSQ_THREADS")) {
    unsigned v = 0;
    std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(int argc, char** argv) { return run_cli(argc, argv, std::cout, std::cerr); }

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pell-type sequence squares: sequences, bounds, approximants and the exhaustive tuple search"};
  app.require_subcommand(1);

  SeqOpts seq, scan;
  auto* seq_cmd = app.add_subcommand("seq", "print (k, 2x_k, 2y_k) over a range");
  seq_cmd->add_option("--tuple", seq.tuple, "a,b,d,t,u")->required();
  seq_cmd->add_option("--range", seq.range, "lo..hi")->capture_default_str();
  seq_cmd->add_flag("--prime", seq.prime, "use alpha eps^k instead of alpha eps^{2k}");

  auto* scan_cmd = app.add_subcommand("scan", "list k where y_k is an integer square");
  scan_cmd->add_option("--tuple", scan.tuple, "a,b,d,t,u")->required();
  scan_cmd->add_option("--range", scan.range, "lo..hi")->capture_default_str();
  scan_cmd->add_flag("--prime", scan.prime, "use alpha eps^k");

  CensusOpts census;
  census.threads = default_threads();
  auto* census_cmd = app.add_subcommand("census", "count distinct squares per tuple against the conjectured limits");
  census_cmd->add_option("--tuple", census.tuples, "a,b,d,t,u (repeatable)");
  census_cmd->add_option("--tuples-file", census.tuples_file, "one a,b,d,t,u per line");
  census_cmd->add_option("--window", census.window, "lo..hi")->capture_default_str();
  census_cmd->add_flag("--prime", census.prime, "census the alpha eps^k sequence");
  census_cmd->add_option("--threads", census.threads, "worker threads (default PELLSQ_THREADS)");
  census_cmd->add_option("--jsonl", census.jsonl, "write census records");
  census_cmd->add_option("--violations", census.violations, "append violating records here");
  census_cmd->add_option("--palindrome", census.palindrome, "also check y_{-k} = y_{k-1} for 1 <= k <= N");

  BoundsOpts bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every threshold for a tuple");
  bounds_cmd->add_option("--tuple", bounds.tuple, "a,b,d,t,u")->required();
  bounds_cmd->add_option("--y2", bounds.y2, "doubled y to test against the square-exclusion thresholds");
  bounds_cmd->add_option("--gap", bounds.gap, "2y_i,2y_j for the gap principle");

  HypOpts hyp;
  auto* hyp_cmd = app.add_subcommand("hypgeom", "approximant diagnostics for (u1, u2, t')");
  hyp_cmd->add_option("--u1", hyp.u1);
  hyp_cmd->add_option("--u2", hyp.u2);
  hyp_cmd->add_option("--tprime", hyp.t_prime, "negative radicand");
  hyp_cmd->add_option("--tuple", hyp.tuple, "derive (u1, u2, t') from element k of a tuple");
  hyp_cmd->add_option("--k", hyp.k, "element index with --tuple")->capture_default_str();
  hyp_cmd->add_option("--r", hyp.r, "largest r")->capture_default_str();
  hyp_cmd->add_option("--bits", hyp.bits, "precision")->capture_default_str();

  SearchOpts search;
  search.threads = default_threads();
  std::optional<std::uint64_t> only_u, only_t;
  std::optional<int> only_sign;
  auto* search_cmd = app.add_subcommand("search", "exhaustive tuple search for one b");
  search_cmd->add_option("--b", search.b)->required();
  search_cmd->add_option("--threads", search.threads, "worker threads (default PELLSQ_THREADS)");
  search_cmd->add_option("--predicate", search.predicate, "escapes-bounds | satisfies-bounds | all")
      ->capture_default_str();
  search_cmd->add_flag("--prereq-strict", search.prereq_strict, "d > 12b^2/u^2 instead of >=");
  search_cmd->add_flag("--step-nonstrict", search.step_nonstrict, "d >= step term instead of >");
  search_cmd->add_flag("--no-verify", search.no_verify, "skip the small-square scan");
  search_cmd->add_option("--only-u", only_u);
  search_cmd->add_option("--only-t", only_t);
  search_cmd->add_option("--only-sign", only_sign, "N_eps, +1 or -1")->check(CLI::IsMember({-1, 1}));
  search_cmd->add_option("--jsonl", search.jsonl, "tuple output");
  search_cmd->add_option("--csv", search.csv, "one-row report");
  search_cmd->add_option("--progress", search.progress, "per-u progress file; resumes when present");
  search_cmd->add_flag("--confirm-long", search.confirm_long, "allow searches with D_b > 10^9");
  search_cmd->add_flag("--per-u", search.per_u, "print the per-u counts");
  search_cmd->add_flag("-v,--verbose", search.verbose, "per-u progress on stderr");

  std::vector<std::uint64_t> table_bs{5, 13, 17};
  auto* table_cmd = app.add_subcommand("table1", "U_b and D_b");
  table_cmd->add_option("--b", table_bs, "values of b")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  search.only_u = only_u;
  search.only_t = only_t;
  search.only_sign = only_sign;

  try {
    if (seq_cmd->parsed()) return cmd_seq(seq, false, out);
    if (scan_cmd->parsed()) return cmd_seq(scan, true, out);
    if (census_cmd->parsed()) return cmd_census(census, out, err);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (hyp_cmd->parsed()) return cmd_hypgeom(hyp, out);
    if (search_cmd->parsed()) return cmd_search(search, out, err);
    if (table_cmd->parsed()) return cmd_table1(table_bs, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace pellsq::cli
