#include "doctest.h"
#include "qmis/harness.hpp"
#include "qmis/normalize.hpp"
#include "support/oracles.hpp"

using namespace qmis;
using testsupport::phiZero;

TEST_CASE("SplitMix64 is deterministic and portable") {
  SplitMix64 a(1234), b(1234);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());

  // Frozen reference values for seed 0.
  SplitMix64 ref(0);
  CHECK(ref.next() == 0xe220a8397b1dcdafULL);
  CHECK(ref.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(ref.next() == 0x06c45d188009454fULL);
}

TEST_CASE("genQ3DNF postconditions and determinism") {
  SplitMix64 seeds(91);
  for (int round = 0; round < 30; ++round) {
    const std::uint64_t seed = seeds.next();
    const Q3DNF f = genQ3DNF(3, 2, 4, seed);
    CHECK(f == genQ3DNF(3, 2, 4, seed));
    CHECK(f.existentials == 3);
    CHECK(f.universals == 2);
    CHECK(f.terms.size() == 4);
    f.validate(/*requireWidth3=*/true);
  }
}

TEST_CASE("genNiceMonotone postconditions") {
  SplitMix64 seeds(92);
  for (int round = 0; round < 50; ++round) {
    const std::uint64_t seed = seeds.next();
    const Q3DNF f = genNiceMonotone(2, 1, 2, 2, seed);
    CHECK(f == genNiceMonotone(2, 1, 2, 2, seed));
    CHECK(f.existentials == 2);
    f.validate(true);
    CHECK(isMonotone(f));
    CHECK(isNice(f).nice);
    const PolaritySplit s = polaritySplit(f);
    CHECK(s.positive.size() >= 2);
    CHECK(s.negative.size() >= 2);
  }
}

TEST_CASE("genNiceMonotone rejects structurally impossible parameters") {
  // One existential, no universals, one term per side: every width-3
  // positive term over {x1} mentions x1, so niceness cannot hold.
  CHECK_THROWS_AS(genNiceMonotone(1, 0, 1, 1, 7), PreconditionError);
  // Feasible cousins of that shape.
  CHECK(isNice(genNiceMonotone(1, 1, 1, 1, 7)).nice);
  CHECK(isNice(genNiceMonotone(2, 0, 2, 2, 7)).nice);
}

TEST_CASE("generated instances realize both truth values") {
  int holds = 0, fails = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    if (evaluateQ3DNF(genNiceMonotone(2, 2, 2, 2, seed)).holds)
      ++holds;
    else
      ++fails;
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}

TEST_CASE("roundTrip on the worked instance") {
  const RoundTripReport r = roundTrip(phiZero());
  CHECK(r.normalized == phiZero());
  CHECK(r.holds);
  CHECK(r.k == 8);
  CHECK(r.withinBudget);
  REQUIRE(r.minTransversalSize.has_value());
  CHECK(*r.minTransversalSize == 8);
  CHECK(r.exactAtBudget);
  CHECK(r.consistent);
}

TEST_CASE("roundTrip is consistent on random nice monotone instances") {
  SplitMix64 seeds(93);
  for (int round = 0; round < 25; ++round) {
    const RoundTripReport r =
        roundTrip(genNiceMonotone(2, 1, 2, 2, seeds.next()));
    CHECK(r.consistent);
    CHECK(r.exactAtBudget);
    if (r.holds) {
      REQUIRE(r.minTransversalSize.has_value());
      CHECK(*r.minTransversalSize == r.k);
    }
  }
}

TEST_CASE("roundTrip is consistent across normalization of mixed input") {
  SplitMix64 seeds(94);
  for (int round = 0; round < 15; ++round) {
    const Q3DNF f = genQ3DNF(2, 1, 3, seeds.next());
    const RoundTripReport r = roundTrip(f);
    CHECK(r.consistent);
    CHECK(r.holds == evaluateQ3DNF(f).holds);
  }
}

TEST_CASE("classificationAudit on the worked instance") {
  const ReductionOutput red = buildGraph(phiZero());
  const ClassificationAuditReport audit = classificationAudit(red);
  CHECK(audit.misCount > 0);
  CHECK(audit.unclassified == 0);
  CHECK(audit.unclassifiedSets.empty());
  CHECK(audit.perType[2] == 2);
  CHECK(audit.perType[3] == 8);
  CHECK(audit.perType[4] == 2);
  CHECK(audit.perType[5] == 2);
  CHECK(audit.perType[6] == 2);
  CHECK(audit.perType[7] == 2);
  CHECK(audit.perType[8] == 2);
  CHECK(audit.perType[9] == 2);
  CHECK(audit.multiplicitiesOk);
  int total = audit.unclassified;
  for (int c : audit.perType) total += c;
  CHECK(total == audit.misCount);
}

TEST_CASE("classificationAudit on random instances leaves nothing over") {
  SplitMix64 seeds(95);
  for (int round = 0; round < 10; ++round) {
    const Q3DNF f = genNiceMonotone(2, 1, 2, 2, seeds.next());
    const ClassificationAuditReport audit = classificationAudit(buildGraph(f));
    CHECK(audit.unclassified == 0);
    CHECK(audit.multiplicitiesOk);
  }
}
