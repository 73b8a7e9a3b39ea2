#include "doctest.h"

#include "pellsq/bounds.hpp"
#include "pellsq/census.hpp"
#include "pellsq/search.hpp"
#include "properties.hpp"

using namespace pellsq;

TEST_CASE("corpus sizes") {
  CHECK(props::random_corpus().size() == 100);
  CHECK(props::main_corpus().size() >= 100);
  CHECK(props::main_corpus_squares().size() > 50);
}

TEST_CASE("dual path and norm identity, |k| <= 30") {
  auto t = props::dual_path(props::random_corpus(), 30);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("growth bounds for 1 <= k <= 20") {
  auto t = props::growth(props::random_corpus());
  INFO(t.summary());
  CHECK(t.ok());
  auto m = props::growth(props::main_corpus());
  INFO(m.summary());
  CHECK(m.ok());
}

TEST_CASE("gap principle on corpus squares") {
  // No pair in the corpus meets the hypothesis; the check is vacuous there.
  auto g = props::gap(props::main_corpus_squares());
  INFO(g.holds.summary());
  CHECK(g.pairs > 20);
  CHECK(g.holds.failed == 0);
}

TEST_CASE("g^2 N^2 range") {
  auto t = props::lemma35(props::main_corpus(), 8);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("quartic decomposition witnesses") {
  auto t = props::lemma31(props::main_corpus_squares());
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("argument bound on squares") {
  auto t = props::lemma34(props::main_corpus_squares());
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("approximant identity on sequence inputs") {
  auto s = props::hypergeom_samples(24);
  CHECK(s.size() >= 20);
  auto t = props::hyp_identity(s, 10);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("census on the prime sequence at even indices matches the base census") {
  for (const auto& p : props::random_corpus()) {
    auto base = square_census(p, -20, 20);
    std::vector<BigInt> even;
    for (const auto& h : scan_squares(p, -40, 40, true))
      if (h.k % 2 == 0) even.push_back(h.root);
    std::vector<BigInt> want;
    for (const auto& h : scan_squares(p, -20, 20)) want.push_back(h.root);
    CHECK(even == want);
    CHECK(base.count() <= want.size());
  }
}

TEST_CASE("search tuples have at most two large squares") {
  SearchConfig c;
  c.b = 5;
  c.predicate = RecordPredicate::All;
  c.only_u = 1;
  std::size_t n = 0;
  enumerate_candidates(c, [&](const CandidateTuple& t) {
    if (n++ % 7) return;
    auto p = t.params();
    long K = compute_K(p);
    std::size_t big = 0;
    for (const auto& h : scan_squares(p, K - 40, 40))
      if ((h.k >= 1 || h.k <= K) && prop41_exceeds(BigInt(2 * h.root * h.root), p)) ++big;
    CHECK(big <= 2);
  });
  CHECK(n > 1000);
}
