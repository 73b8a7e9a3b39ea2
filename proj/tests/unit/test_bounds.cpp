#include <cmath>

#include "doctest.h"

#include "corpus.hpp"
#include "pellsq/bigfloat.hpp"
#include "pellsq/bounds.hpp"

using namespace pellsq;

namespace {

SequenceParams P(long a, long b, long d, long t, long u) { return SequenceParams::make(a, b, d, t, u); }

// 200-bit evaluation of a term.
Real eval(const PowerTerm& term, const SymbolValues& v) {
  Real r(term.coefficient, 200);
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    const auto& e = term.exponents[i];
    if (e == 0) continue;
    Real base(v.get(static_cast<Symbol>(i)), 200);
    r *= pow(base, Real(e, 200));
  }
  return r;
}

}  // namespace

TEST_CASE("compare_power examples") {
  SymbolValues v;
  v.set(Symbol::N, BigRational(4)).set(Symbol::D, BigRational(4));
  const PowerTerm& four_n = prop41_terms()[4];
  CHECK(compare_power(BigRational(1), four_n, v) < 0);
  CHECK(compare_power(BigRational(8), four_n, v) == 0);
  CHECK(compare_power(BigRational(9), four_n, v) > 0);

  SymbolValues w;
  w.set(Symbol::B, BigRational(5)).set(Symbol::U, BigRational(1));
  CHECK(compare_power(BigRational(5), prerequisite_term(), w) < 0);
  CHECK(compare_power(BigRational(301), prerequisite_term(), w) > 0);
  CHECK(compare_power(BigRational(300), prerequisite_term(), w) == 0);

  SymbolValues missing;
  CHECK_THROWS_AS(compare_power(BigRational(1), four_n, missing), MissingSymbol);
}

TEST_CASE("compare_power agrees with 200-bit evaluation") {
  std::vector<PowerTerm> terms = prop41_terms();
  terms.push_back(thm12_term());
  for (const auto& t : step_terms()) terms.push_back(t);
  for (const auto& t : enum_bound_terms()) terms.push_back(t);
  std::size_t decided = 0;
  for (const auto& p : corpus::main_case_tuples(40, 21)) {
    auto v = SymbolValues::of(p);
    for (const auto& term : terms) {
      Real val = eval(term, v);
      for (long scale : {1L, 7L, 1000L, 123456L}) {
        BigRational lhs(BigInt(static_cast<long>(std::floor(val.to_double() / scale * 1000))), 1000);
        lhs.canonicalize();
        lhs *= scale;
        Real diff = Real(lhs, 200) - val;
        if (abs(diff) < Real(1e-40, 200)) continue;
        int expect = diff > Real(0.0, 200) ? 1 : -1;
        CHECK(compare_power(lhs, term, v) == expect);
        ++decided;
      }
      BigInt fl = floor_term(term, v);
      CHECK(Real(fl, 200) <= val);
      CHECK(Real(BigInt(fl + 1), 200) > val);
    }
  }
  CHECK(decided > 1000);
}

TEST_CASE("compare_terms") {
  SymbolValues v;
  v.set(Symbol::B, BigRational(5)).set(Symbol::U, BigRational(1));
  const auto& t = enum_bound_terms();
  CHECK(compare_terms(t[4], t[0], v) > 0);
  CHECK(compare_terms(t[0], t[0], v) == 0);
}

TEST_CASE("gap principle examples") {
  auto p = P(8, 2, 5, 1, 1);
  CHECK(gap_holds(2, 12, p));
  CHECK_FALSE(gap_holds(4, 4, p));
  CHECK_FALSE(gap_holds(12, 12, p));
  // 57.32 * 25 / (16 * 256) = 0.3498...; y_j = 0.5 > 0.35 > 0
  CHECK(gap_holds(2, 1, p));
  auto q = P(42, 4, 7, 16, 6);
  CHECK_FALSE(gap_holds(2 * 1000, 2 * 1001, q));
}

TEST_CASE("prop41 and thm12 thresholds") {
  auto p = P(8, 2, 5, 1, 1);
  CHECK(prop41_exceeds(BigInt(2'000'000), p));
  CHECK_FALSE(prop41_exceeds(BigInt(14'000), p));
  CHECK_FALSE(prop41_exceeds(BigInt(0), p));
  CHECK(prop41_exceeds(BigInt(2 * 7479), p));
  CHECK_FALSE(prop41_exceeds(BigInt(2 * 7478), p));
  CHECK(thm12_threshold_exceeds(BigInt(200'000), p));
  CHECK_FALSE(thm12_threshold_exceeds(BigInt(2), p));
  CHECK(thm12_threshold_exceeds(BigInt(2 * 11872), p));
  CHECK_FALSE(thm12_threshold_exceeds(BigInt(2 * 11871), p));

  // boundary: 16.33 * 8^(8/3) * 1 / sqrt((16.33)^2) = 256 exactly
  SymbolValues v;
  v.set(Symbol::B, BigRational(8)).set(Symbol::N, BigRational(1)).set(Symbol::D, make_rational(1633 * 1633, 10000));
  CHECK(compare_power(BigRational(256), thm12_term(), v) == 0);
}

TEST_CASE("step d-bounds") {
  auto sb = step_d_bounds(P(10, 5, 5, 1, 1));
  for (bool e : sb.exceeds) CHECK_FALSE(e);
  CHECK_FALSE(sb.all());
  auto all = step_d_bounds(1, 2, 1000, 1);
  for (bool e : all.exceeds) CHECK(e);
  CHECK(all.all());
  CHECK_FALSE(step_d_bounds(1, 17, 1, 1).exceeds[3]);
  CHECK(step_d_bounds(1, 18, 1, 1).exceeds[3]);
  CHECK_THROWS(step_d_bounds(P(3, 1, 5, 1, 1)));  // N_alpha = 4 > 0
}

TEST_CASE("step_n_cap brackets the strict bound") {
  for (long b : {5L, 13L})
    for (long u : {1L, 2L, 7L})
      for (long d : {300L, 5000L, 123457L, 33203125L}) {
        for (std::size_t i = 0; i < step_terms().size(); ++i) {
          const auto& term = step_terms()[i];
          BigInt cap = step_n_cap(term, b, d, u);
          auto holds = [&](const BigInt& n) {
            SymbolValues v;
            v.set(Symbol::B, BigRational(b)).set(Symbol::U, BigRational(u)).set(Symbol::N, BigRational(n * n));
            return compare_power(BigRational(d), term, v) > 0;
          };
          if (cap > 0) CHECK(holds(cap));
          CHECK_FALSE(holds(cap + 1));
          BigInt cap_ge = step_n_cap(term, b, d, u, false);
          CHECK(cap_ge >= cap);
        }
      }
}

TEST_CASE("search enumeration bound") {
  auto e5 = search_enum_bound(5, 1);
  CHECK(e5.cap == 33203125);
  CHECK(e5.term_index == 4);
  CHECK(search_enum_bound(13, 1).cap == BigInt("69337111285"));
  CHECK(search_enum_bound(17, 1).cap == BigInt("592939382485"));
  auto e52 = search_enum_bound(5, 2);
  CHECK(e52.cap == 2075195);
  CHECK(e52.term_index == 4);
  CHECK(compare_enum_bound(BigRational(2075195), 5, 2) < 0);
  CHECK(compare_enum_bound(BigRational(2075196), 5, 2) > 0);
  CHECK(compute_Ub(5) == 64);
  CHECK(compute_Ub(13) == 432);
  CHECK(compute_Ub(17) == 738);
  CHECK(compare_enum_bound(BigRational(2), 5, 64) > 0);
  CHECK(compare_enum_bound(BigRational(2), 5, 63) <= 0);
}

TEST_CASE("admissible b") {
  CHECK(admissible_b(5));
  CHECK(admissible_b(24));
  CHECK_FALSE(admissible_b(25));
  CHECK_FALSE(admissible_b(29));
  CHECK(admissible_b(5 * 3 * 7));
  CHECK_FALSE(admissible_b(5 * 13));
  for (long b = 1; b <= 24; ++b) CHECK(admissible_b(b));
}

TEST_CASE("prime divisors of b are 1 mod 4") {
  CHECK(lemma36_all_divisors_1mod4(10, 5, 5));
  CHECK(lemma36_all_divisors_1mod4(1, 1, 2));
  CHECK_THROWS_AS(lemma36_all_divisors_1mod4(42, 4, 7), PreconditionViolation);
  for (const auto& p : corpus::small_main_case_family(12, 40)) {
    bool sqfree = true;
    for (auto& pp : factorize(gcd(p.a, p.b * p.b)))
      if (pp.exponent > 1) sqfree = false;
    if (!sqfree) {
      CHECK_THROWS_AS(lemma36_all_divisors_1mod4(p.a, p.b, p.d), PreconditionViolation);
      continue;
    }
    CHECK(lemma36_all_divisors_1mod4(p.a, p.b, p.d));
  }
}
