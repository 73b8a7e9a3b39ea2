#include "pellsq/bounds.hpp"

#include <cmath>
#include <numeric>

namespace pellsq {

const char* to_string(Symbol s) {
  switch (s) {
    case Symbol::B:
      return "b";
    case Symbol::N:
      return "|N|";
    case Symbol::D:
      return "d";
    case Symbol::U:
      return "u";
    case Symbol::Y:
      return "y";
  }
  return "?";
}

PowerTerm& PowerTerm::with(Symbol s, long num, long den) {
  exponents[static_cast<std::size_t>(s)] = make_rational(num, den);
  return *this;
}

unsigned long PowerTerm::clearing_power() const {
  unsigned long L = 1;
  for (const auto& e : exponents) L = std::lcm(L, e.get_den().get_ui());
  return L;
}

PowerTerm make_term(std::string label, const std::string& coefficient) {
  PowerTerm t;
  t.label = std::move(label);
  t.coefficient = rational_from_decimal(coefficient);
  return t;
}

SymbolValues& SymbolValues::set(Symbol s, const BigRational& v) {
  values[static_cast<std::size_t>(s)] = v;
  return *this;
}

const BigRational& SymbolValues::get(Symbol s) const {
  const auto& v = values[static_cast<std::size_t>(s)];
  if (!v) throw MissingSymbol(std::string("missing value for symbol ") + to_string(s));
  return *v;
}

SymbolValues SymbolValues::of(const SequenceParams& p) {
  SymbolValues v;
  v.set(Symbol::B, BigRational(p.b)).set(Symbol::D, BigRational(p.d)).set(Symbol::U, BigRational(p.u));
  if (p.n_alpha != 0) v.set(Symbol::N, BigRational(abs(p.n_alpha)));
  return v;
}

BigRational term_power(const PowerTerm& term, const SymbolValues& values, unsigned long L) {
  BigRational r = ipow(term.coefficient, L);
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    const BigRational& e = term.exponents[i];
    if (e == 0) continue;
    BigRational scaled = e * L;
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw std::invalid_argument("term_power: L does not clear exponents");
    long m = scaled.get_num().get_si();
    const BigRational& v = values.get(static_cast<Symbol>(i));
    BigRational p = ipow(v, static_cast<unsigned long>(std::labs(m)));
    r = m > 0 ? BigRational(r * p) : BigRational(r / p);
  }
  r.canonicalize();
  return r;
}

namespace {

double log_of(const BigInt& v) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

double log_of(const BigRational& v) { return log_of(BigInt(v.get_num())) - log_of(BigInt(v.get_den())); }

}  // namespace

double log_term(const PowerTerm& term, const SymbolValues& values) {
  double r = log_of(term.coefficient);
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    const BigRational& e = term.exponents[i];
    if (e == 0) continue;
    r += e.get_d() * log_of(values.get(static_cast<Symbol>(i)));
  }
  return r;
}

namespace {

int sign_of(int c) { return (c > 0) - (c < 0); }

// Float filter; returns 0 when the gap is too small to trust.
int quick_sign(double lhs, double rhs) {
  double tol = 1e-9 * (1.0 + std::fabs(lhs) + std::fabs(rhs));
  if (lhs > rhs + tol) return 1;
  if (lhs < rhs - tol) return -1;
  return 0;
}

}  // namespace

int compare_power(const BigRational& lhs, const PowerTerm& term, const SymbolValues& values) {
  if (lhs <= 0) return -1;
  if (int q = quick_sign(log_of(lhs), log_term(term, values))) return q;
  unsigned long L = term.clearing_power();
  return sign_of(cmp(ipow(lhs, L), term_power(term, values, L)));
}

int compare_terms(const PowerTerm& lhs, const PowerTerm& rhs, const SymbolValues& values) {
  if (int q = quick_sign(log_term(lhs, values), log_term(rhs, values))) return q;
  unsigned long L = std::lcm(lhs.clearing_power(), rhs.clearing_power());
  return sign_of(cmp(term_power(lhs, values, L), term_power(rhs, values, L)));
}

BigInt floor_term(const PowerTerm& term, const SymbolValues& values) {
  unsigned long L = term.clearing_power();
  BigRational p = term_power(term, values, L);
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
  return floor_root(f, L);
}

double approx_term(const PowerTerm& term, const SymbolValues& values) { return std::exp(log_term(term, values)); }

const std::vector<PowerTerm>& prop41_terms() {
  static const std::vector<PowerTerm> terms = [] {
    std::vector<PowerTerm> t;
    t.push_back(make_term("0.19 b^(26/11) N^(13/11) / d^(12/11)", "0.19")
                    .with(Symbol::B, 26, 11).with(Symbol::N, 13, 11).with(Symbol::D, -12, 11));
    t.push_back(make_term("b^(8/3) N^(7/6) / (10 d^(7/6))", "0.1")
                    .with(Symbol::B, 8, 3).with(Symbol::N, 7, 6).with(Symbol::D, -7, 6));
    t.push_back(make_term("14.8 b^(4/3) N^(5/3) / d^(1/2)", "14.8")
                    .with(Symbol::B, 4, 3).with(Symbol::N, 5, 3).with(Symbol::D, -1, 2));
    t.push_back(make_term("16.33 b^2 N^2 / d^(1/2)", "16.33")
                    .with(Symbol::B, 2).with(Symbol::N, 2).with(Symbol::D, -1, 2));
    t.push_back(make_term("4 N / d^(1/2)", "4").with(Symbol::N, 1).with(Symbol::D, -1, 2));
    t.push_back(make_term("b^2 N / d", "1").with(Symbol::B, 2).with(Symbol::N, 1).with(Symbol::D, -1));
    return t;
  }();
  return terms;
}

const PowerTerm& thm12_term() {
  static const PowerTerm term = make_term("16.33 b^(8/3) N^2 / d^(1/2)", "16.33")
                                    .with(Symbol::B, 8, 3).with(Symbol::N, 2).with(Symbol::D, -1, 2);
  return term;
}

const std::vector<PowerTerm>& step_terms() {
  static const std::vector<PowerTerm> terms = [] {
    std::vector<PowerTerm> t;
    t.push_back(make_term("0.882 N^(2/23) b^(48/23) / u^(44/23)", "0.882")
                    .with(Symbol::N, 2, 23).with(Symbol::B, 48, 23).with(Symbol::U, -44, 23));
    t.push_back(make_term("0.66 N^(1/13) b^(28/13) / u^(24/13)", "0.66")
                    .with(Symbol::N, 1, 13).with(Symbol::B, 28, 13).with(Symbol::U, -24, 13));
    t.push_back(make_term("15.3 N^(4/11) b^(20/11) / u^(24/11)", "15.3")
                    .with(Symbol::N, 4, 11).with(Symbol::B, 20, 11).with(Symbol::U, -24, 11));
    t.push_back(make_term("17 b^2 N^(1/2) / u^2", "17")
                    .with(Symbol::B, 2).with(Symbol::N, 1, 2).with(Symbol::U, -2));
    return t;
  }();
  return terms;
}

const std::vector<PowerTerm>& enum_bound_terms() {
  static const std::vector<PowerTerm> terms = [] {
    std::vector<PowerTerm> t;
    t.push_back(make_term("12 b^2 / u^2", "12").with(Symbol::B, 2).with(Symbol::U, -2));
    t.push_back(make_term("0.88 b^(8/3) / u^(44/21)", "0.88").with(Symbol::B, 8, 3).with(Symbol::U, -44, 21));
    t.push_back(make_term("0.64 b^(8/3) / u^2", "0.64").with(Symbol::B, 8, 3).with(Symbol::U, -2));
    t.push_back(make_term("60 b^(36/7) / u^(24/7)", "60").with(Symbol::B, 36, 7).with(Symbol::U, -24, 7));
    t.push_back(make_term("85 b^8 / u^4", "85").with(Symbol::B, 8).with(Symbol::U, -4));
    return t;
  }();
  return terms;
}

const PowerTerm& prerequisite_term() { return enum_bound_terms().front(); }

bool gap_holds(const BigInt& y2_i, const BigInt& y2_j, const SequenceParams& p) {
  // y = Y/2:  100 Y_j b^4 N^2 > 1433 d^2 Y_i^3
  BigInt b4 = ipow(p.b, 4);
  BigInt n2 = p.n_alpha * p.n_alpha;
  return 100 * y2_j * b4 * n2 > 1433 * p.d * p.d * y2_i * y2_i * y2_i;
}

bool gap_hypothesis(const BigInt& y2_i, const SequenceParams& p) {
  BigInt absn = abs(p.n_alpha);
  if (y2_i <= 0) return false;
  // (Y/2)^2 d >= 16|N|  and  (Y/2) d >= b^2|N|
  bool first = y2_i * y2_i * p.d >= 64 * absn;
  bool second = y2_i * p.d >= 2 * p.b * p.b * absn;
  return first && second;
}

bool prop41_exceeds(const BigInt& y2, const SymbolValues& base) {
  if (y2 <= 0) return false;
  BigRational y = make_rational(y2, 2);
  for (const auto& term : prop41_terms())
    if (compare_power(y, term, base) <= 0) return false;
  return true;
}

bool prop41_exceeds(const BigInt& y2, const SequenceParams& p) { return prop41_exceeds(y2, SymbolValues::of(p)); }

bool thm12_threshold_exceeds(const BigInt& y2, const SequenceParams& p) {
  if (y2 <= 0) return false;
  return compare_power(make_rational(y2, 2), thm12_term(), SymbolValues::of(p)) > 0;
}

StepBounds step_d_bounds(const BigInt& b, const BigInt& d, const BigInt& u, const BigInt& abs_n) {
  SymbolValues v;
  v.set(Symbol::B, BigRational(b)).set(Symbol::U, BigRational(u)).set(Symbol::N, BigRational(abs_n));
  StepBounds r;
  const auto& terms = step_terms();
  for (std::size_t i = 0; i < terms.size(); ++i) r.exceeds[i] = compare_power(BigRational(d), terms[i], v) > 0;
  return r;
}

StepBounds step_d_bounds(const SequenceParams& p) {
  if (p.n_alpha >= 0) throw std::invalid_argument("step_d_bounds requires N_alpha < 0");
  return step_d_bounds(p.b, p.d, p.u, abs(p.n_alpha));
}

BigInt step_n_cap(const PowerTerm& term, const BigInt& b, const BigInt& d, const BigInt& u, bool strict) {
  // d^L > T(N=1)^L * n^k with k = 2 L alpha.
  unsigned long L = term.clearing_power();
  BigRational k_rat = term.exponent(Symbol::N) * 2 * L;
  k_rat.canonicalize();
  unsigned long k = k_rat.get_num().get_ui();
  SymbolValues v;
  v.set(Symbol::B, BigRational(b)).set(Symbol::U, BigRational(u)).set(Symbol::N, BigRational(1));
  BigRational R = BigRational(ipow(d, L)) / term_power(term, v, L);
  R.canonicalize();
  // largest integer m < R, or m <= R when not strict
  BigInt m;
  if (strict) {
    mpz_cdiv_q(m.get_mpz_t(), R.get_num_mpz_t(), R.get_den_mpz_t());
    m -= 1;
  } else {
    mpz_fdiv_q(m.get_mpz_t(), R.get_num_mpz_t(), R.get_den_mpz_t());
  }
  if (m < 1) return 0;
  return floor_root(m, k);
}

namespace {

SymbolValues bu_values(const BigInt& b, const BigInt& u) {
  SymbolValues v;
  v.set(Symbol::B, BigRational(b)).set(Symbol::U, BigRational(u));
  return v;
}

std::size_t max_term_index(const SymbolValues& v) {
  const auto& terms = enum_bound_terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (compare_terms(terms[i], terms[best], v) > 0) best = i;
  return best;
}

}  // namespace

EnumBound search_enum_bound(const BigInt& b, const BigInt& u) {
  if (b < 1 || u < 1) throw std::invalid_argument("search_enum_bound requires b, u >= 1");
  SymbolValues v = bu_values(b, u);
  EnumBound r;
  r.term_index = max_term_index(v);
  r.cap = floor_term(enum_bound_terms()[r.term_index], v);
  return r;
}

int compare_enum_bound(const BigRational& d, const BigInt& b, const BigInt& u) {
  SymbolValues v = bu_values(b, u);
  return compare_power(d, enum_bound_terms()[max_term_index(v)], v);
}

BigInt compute_Ub(const BigInt& b) {
  if (b < 1) throw std::invalid_argument("compute_Ub requires b >= 1");
  for (BigInt u = 1;; ++u) {
    if (compare_enum_bound(BigRational(2), b, u) > 0) return u;
  }
}

bool admissible_b(const BigInt& b) {
  if (b < 1) throw std::invalid_argument("admissible_b requires b >= 1");
  for (int b1 : {1, 5, 13, 17}) {
    if (!mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(b1))) continue;
    BigInt q = b / b1;
    bool ok = true;
    for (const auto& f : factorize(q))
      if (mpz_fdiv_ui(f.prime.get_mpz_t(), 4) == 1) ok = false;
    if (ok) return true;
  }
  return false;
}

bool lemma36_all_divisors_1mod4(const BigInt& a, const BigInt& b, const BigInt& d) {
  BigInt g;
  BigInt b2 = b * b;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b2.get_mpz_t());
  for (const auto& f : factorize(g))
    if (f.exponent > 1) throw PreconditionViolation("gcd(a, b^2) is not squarefree");
  BigInt n2 = d * b2 * b2 - a * a;
  if (n2 <= 0 || !is_perfect_square(n2)) throw PreconditionViolation("d b^4 - a^2 is not a positive square");
  for (const auto& f : factorize(b))
    if (mpz_fdiv_ui(f.prime.get_mpz_t(), 4) != 1) return false;
  return true;
}

}  // namespace pellsq
