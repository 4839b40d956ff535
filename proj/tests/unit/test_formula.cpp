#include <algorithm>

#include "doctest.h"
#include "qmis/formula.hpp"
#include "qmis/harness.hpp"
#include "support/oracles.hpp"

using namespace qmis;
using testsupport::phiZero;

namespace {

Assignment bind(std::initializer_list<std::pair<int, bool>> pairs) {
  Assignment a;
  for (auto [var, value] : pairs) a.set(var, value);
  return a;
}

}  // namespace

TEST_CASE("evaluateTerm basics") {
  Term allX1{{1, true}, {1, true}, {1, true}};
  CHECK(evaluateTerm(allX1, bind({{1, true}})));
  CHECK_FALSE(evaluateTerm(allX1, bind({{1, false}})));

  Term mixedVars{{1, true}, {2, true}, {2, true}};
  CHECK_FALSE(evaluateTerm(mixedVars, bind({{1, true}, {2, false}})));

  Term allNegative{{1, false}, {2, false}, {3, false}};
  CHECK(evaluateTerm(allNegative,
                     bind({{1, false}, {2, false}, {3, false}})));

  CHECK_THROWS_AS(evaluateTerm(allX1, bind({{2, true}})), ScopeError);
}

TEST_CASE("evaluateMatrix disjunction over terms") {
  Q3DNF f;
  f.existentials = 1;
  f.universals = 1;
  f.terms = {Term{{1, true}, {1, true}, {2, true}}};
  CHECK(evaluateMatrix(f, bind({{1, true}, {2, true}})));

  f.terms.push_back(Term{{1, false}, {1, false}, {2, false}});
  CHECK_FALSE(evaluateMatrix(f, bind({{1, true}, {2, false}})));

  Q3DNF empty;
  empty.existentials = 1;
  CHECK_THROWS_AS(evaluateMatrix(empty, bind({{1, true}})), PreconditionError);
}

TEST_CASE("evaluateQ3DNF exhaustive search") {
  Q3DNF xControls;
  xControls.existentials = 1;
  xControls.universals = 1;
  xControls.terms = {Term{{1, true}, {1, true}, {1, true}}};
  EvalResult r = evaluateQ3DNF(xControls);
  CHECK(r.holds);
  CHECK(r.witness->value(1));

  Q3DNF yControls;
  yControls.existentials = 1;
  yControls.universals = 1;
  yControls.terms = {Term{{2, true}, {2, true}, {2, true}}};
  CHECK_FALSE(evaluateQ3DNF(yControls).holds);
  CHECK_FALSE(evaluateQ3DNF(yControls).witness.has_value());
}

TEST_CASE("phi0 holds; witness is the lexicographically least x-vector") {
  const EvalResult r = evaluateQ3DNF(phiZero());
  REQUIRE(r.holds);
  // Both (F,T) and (T,F) satisfy phi0; false < true with variable 1 most
  // significant makes (F,T) the least. Confirmed against a hand-rolled
  // scan below.
  CHECK_FALSE(r.witness->value(1));
  CHECK(r.witness->value(2));

  // Independent scan over all four x-vectors in lexicographic order.
  const Q3DNF f = phiZero();
  int firstSatisfying = -1;
  for (int code = 0; code < 4 && firstSatisfying < 0; ++code) {
    bool x1 = (code >> 1) & 1, x2 = code & 1;
    bool allY = true;
    for (bool y1 : {false, true})
      if (!evaluateMatrix(f, bind({{1, x1}, {2, x2}, {3, y1}}))) allY = false;
    if (allY) firstSatisfying = code;
  }
  CHECK(firstSatisfying == 1);  // (F,T)
}

TEST_CASE("polaritySplit partitions term indices") {
  Q3DNF f;
  f.existentials = 2;
  f.universals = 1;
  f.terms = {Term{{1, true}, {1, true}, {3, true}},
             Term{{1, false}, {3, false}, {3, false}},
             Term{{1, true}, {2, true}, {3, false}}};
  const PolaritySplit s = polaritySplit(f);
  CHECK(s.positive == std::vector<int>{0});
  CHECK(s.negative == std::vector<int>{1});
  CHECK(s.mixed == std::vector<int>{2});
  CHECK_FALSE(isMonotone(f));
}

TEST_CASE("isMonotone") {
  CHECK(isMonotone(phiZero()));

  Q3DNF degenerate;
  degenerate.existentials = 0;
  degenerate.universals = 1;
  degenerate.terms = {Term{{1, true}, {1, true}, {1, true}}};
  CHECK(isMonotone(degenerate));
}

TEST_CASE("isNice") {
  CHECK(isNice(phiZero()).nice);

  Q3DNF onlyX1;
  onlyX1.existentials = 1;
  onlyX1.universals = 1;
  onlyX1.terms = {Term{{1, true}, {1, true}, {2, true}},
                  Term{{1, false}, {1, false}, {2, false}}};
  const NiceReport r = isNice(onlyX1);
  CHECK_FALSE(r.nice);
  REQUIRE(r.deficiencies.size() == 2);
  CHECK(r.deficiencies[0] == std::pair{1, DeficiencySide::Positive});
  CHECK(r.deficiencies[1] == std::pair{1, DeficiencySide::Negative});

  Q3DNF noExistentials;
  noExistentials.existentials = 0;
  noExistentials.universals = 2;
  noExistentials.terms = {Term{{1, true}, {2, true}, {2, true}}};
  CHECK(isNice(noExistentials).nice);  // vacuous

  Q3DNF mixed;
  mixed.existentials = 2;
  mixed.universals = 1;
  mixed.terms = {Term{{1, true}, {2, true}, {3, false}}};
  CHECK_THROWS_AS(isNice(mixed), PreconditionError);
}

TEST_CASE("truth value is invariant under term permutation") {
  SplitMix64 rng(7);
  for (int round = 0; round < 50; ++round) {
    Q3DNF f = genQ3DNF(2, 2, 3, rng.next());
    Q3DNF g = f;
    std::reverse(g.terms.begin(), g.terms.end());
    CHECK(evaluateQ3DNF(f).holds == evaluateQ3DNF(g).holds);
  }
}

TEST_CASE("adding a term never flips the matrix from true to false") {
  SplitMix64 rng(11);
  for (int round = 0; round < 50; ++round) {
    Q3DNF f = genQ3DNF(2, 2, 3, rng.next());
    Q3DNF g = f;
    g.terms.push_back(g.terms[rng.below(3)]);
    for (int code = 0; code < 16; ++code) {
      Assignment a;
      for (int var = 1; var <= 4; ++var) a.set(var, (code >> (var - 1)) & 1);
      if (evaluateMatrix(f, a)) CHECK(evaluateMatrix(g, a));
    }
  }
}

TEST_CASE("monotone formulas under constant assignments") {
  SplitMix64 rng(13);
  for (int round = 0; round < 30; ++round) {
    Q3DNF f = genNiceMonotone(2, 2, 2, 2, rng.next());
    Assignment allTrue, allFalse;
    for (int var = 1; var <= f.variableCount(); ++var) {
      allTrue.set(var, true);
      allFalse.set(var, false);
    }
    const PolaritySplit s = polaritySplit(f);
    for (int idx : s.positive) CHECK(evaluateTerm(f.terms[idx], allTrue));
    for (int idx : s.negative) CHECK(evaluateTerm(f.terms[idx], allFalse));
  }
}

TEST_CASE("evaluateQ3DNF rejects oversized instances explicitly") {
  Q3DNF f;
  f.existentials = 20;
  f.universals = 20;
  f.terms = {Term{{1, true}, {2, true}, {3, true}}};
  CHECK_THROWS_AS(evaluateQ3DNF(f), ResourceLimitError);
}
