#include "qmis/harness.hpp"

#include <string>

#include "qmis/normalize.hpp"

namespace qmis {

namespace {

Term drawTerm(SplitMix64& rng, int varCount, bool positive) {
  Term t;
  for (int d = 0; d < 3; ++d)
    t.lits.push_back({1 + rng.below(varCount), positive});
  return t;
}

// Can some choice of `count` monotone terms avoid every existential
// variable on this side? Always, unless the terms are confined to the
// existential block and cannot take turns avoiding each variable.
bool sideFeasible(int n, int m, int count) {
  if (n == 0 || m >= 1) return true;
  return count >= 2 && n >= 2;
}

}  // namespace

Q3DNF genNiceMonotone(int n, int m, int q, int qprime, std::uint64_t seed) {
  if (n < 1 || m < 0 || q < 1 || qprime < 1)
    throw PreconditionError("genNiceMonotone requires n >= 1, m >= 0, q >= 1, q' >= 1");

  SplitMix64 rng(seed);
  Q3DNF f;
  for (int attempt = 0; attempt < kNiceGenerationRetryCap; ++attempt) {
    f = Q3DNF{};
    f.existentials = n;
    f.universals = m;
    for (int l = 0; l < q; ++l)
      f.terms.push_back(drawTerm(rng, n + m, /*positive=*/true));
    for (int l = 0; l < qprime; ++l)
      f.terms.push_back(drawTerm(rng, n + m, /*positive=*/false));
    if (isNice(f).nice) return f;
  }

  if (!sideFeasible(n, m, q) || !sideFeasible(n, m, qprime))
    throw PreconditionError(
        "no nice formula exists with n=" + std::to_string(n) + " m=" +
        std::to_string(m) + " q=" + std::to_string(q) + " q'=" +
        std::to_string(qprime));
  // Feasible but unlucky: repair the last draw deterministically. Term and
  // universal counts exceed the requested ones.
  return padTerms(addNicenessTerms(f));
}

Q3DNF genQ3DNF(int n, int m, int terms, std::uint64_t seed) {
  if (terms < 1) throw PreconditionError("genQ3DNF requires at least one term");
  if (n + m < 1) throw PreconditionError("genQ3DNF requires at least one variable");
  SplitMix64 rng(seed);
  Q3DNF f;
  f.existentials = n;
  f.universals = m;
  for (int l = 0; l < terms; ++l) {
    Term t;
    for (int d = 0; d < 3; ++d) {
      int var = 1 + rng.below(n + m);
      bool positive = rng.below(2) == 0;
      t.lits.push_back({var, positive});
    }
    f.terms.push_back(t);
  }
  return f;
}

RoundTripReport roundTrip(const Q3DNF& f) {
  RoundTripReport report;
  report.normalized = normalizePipeline(f);

  const EvalResult eval = evaluateQ3DNF(report.normalized);
  report.holds = eval.holds;
  report.witness = eval.witness;

  const ReductionOutput red = buildGraph(report.normalized);
  report.k = red.k;

  const MinTransversalResult mt = minTransversal(red.graph, red.k);
  report.withinBudget = mt.feasible;
  if (mt.feasible) {
    report.minTransversalSize = mt.size;
    report.minSet = mt.set;
  }
  report.exactAtBudget = !report.holds || (mt.feasible && mt.size == red.k);
  report.consistent = (report.holds == report.withinBudget);
  return report;
}

ClassificationAuditReport classificationAudit(const ReductionOutput& red) {
  ClassificationAuditReport report;
  for (const VertexSet& s : enumerateMIS(red.graph)) {
    ++report.misCount;
    try {
      const MISClass c = classifyMIS(red, s);
      ++report.perType[c.type];
    } catch (const InternalInvariantError&) {
      ++report.unclassified;
      report.unclassifiedSets.push_back(s);
    }
  }
  report.multiplicitiesOk = report.perType[2] == 2 &&
                            report.perType[3] == 4 * red.n &&
                            report.perType[6] == red.q &&
                            report.perType[8] == red.qprime;
  return report;
}

}  // namespace qmis
