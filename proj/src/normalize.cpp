#include "qmis/normalize.hpp"

#include <algorithm>

namespace qmis {

std::pair<Term, Term> splitMixedTerm(const Term& t, int freshUniversal) {
  if (t.polarity() != Polarity::Mixed)
    throw PreconditionError("splitMixedTerm requires a mixed term");
  Term positivePart, negativePart;
  negativePart.lits.push_back({freshUniversal, false});
  for (const Literal& l : t.distinct())
    (l.positive ? positivePart : negativePart).lits.push_back(l);
  positivePart.lits.push_back({freshUniversal, true});
  return {positivePart, negativePart};
}

Q3DNF monotonize(const Q3DNF& f) {
  f.validate();
  Q3DNF out;
  out.existentials = f.existentials;
  out.universals = f.universals;
  int nextFresh = f.variableCount() + 1;
  for (const Term& t : f.terms) {
    if (t.polarity() == Polarity::Mixed) {
      auto [pos, neg] = splitMixedTerm(t, nextFresh++);
      ++out.universals;
      out.terms.push_back(pos);
      out.terms.push_back(neg);
    } else {
      out.terms.push_back(t);
    }
  }
  return out;
}

Q3DNF addNicenessTerms(const Q3DNF& f) {
  const NiceReport report = isNice(f);  // also checks monotonicity
  Q3DNF out = f;
  int nextFresh = f.variableCount() + 1;
  // isNice lists deficiencies in ascending variable id with the positive
  // side first; the repair order contract is negative fix first.
  for (int i = 1; i <= f.existentials; ++i) {
    bool missingPositive = false, missingNegative = false;
    for (const auto& [var, side] : report.deficiencies) {
      if (var != i) continue;
      (side == DeficiencySide::Positive ? missingPositive : missingNegative) =
          true;
    }
    if (missingNegative) {
      int z = nextFresh++, w = nextFresh++;
      out.universals += 2;
      out.terms.push_back(Term{{i, true}, {z, true}, {w, true}});
      out.terms.push_back(Term{{z, false}, {w, false}});
    }
    if (missingPositive) {
      int z = nextFresh++, w = nextFresh++;
      out.universals += 2;
      out.terms.push_back(Term{{i, false}, {z, false}, {w, false}});
      out.terms.push_back(Term{{z, true}, {w, true}});
    }
  }
  return out;
}

Q3DNF padTerms(const Q3DNF& f) {
  if (!isMonotone(f))
    throw PreconditionError("padTerms requires a monotone formula");
  Q3DNF out = f;
  for (Term& t : out.terms)
    if (t.width() == 2) t.lits.push_back(t.lits.back());
  return out;
}

Q3DNF normalizePipeline(const Q3DNF& f) {
  f.validate();
  if (f.terms.empty())
    throw PreconditionError("normalizePipeline requires at least one term");
  if (f.existentials < 1)
    throw PreconditionError("normalizePipeline requires n >= 1");

  Q3DNF out = padTerms(addNicenessTerms(monotonize(f)));

  if (!isMonotone(out))
    throw InternalInvariantError("pipeline output is not monotone");
  if (!isNice(out).nice)
    throw InternalInvariantError("pipeline output is not nice");
  for (const Term& t : out.terms)
    if (t.width() != 3)
      throw InternalInvariantError("pipeline output has a non-width-3 term");
  return out;
}

}  // namespace qmis
