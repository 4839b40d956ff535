#include "qmis/formula.hpp"

#include <algorithm>
#include <string>

namespace qmis {

std::vector<Literal> Term::distinct() const {
  std::vector<Literal> out = lits;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polarity Term::polarity() const {
  bool anyPos = false, anyNeg = false;
  for (const Literal& l : lits) (l.positive ? anyPos : anyNeg) = true;
  if (anyPos && anyNeg) return Polarity::Mixed;
  return anyNeg ? Polarity::Negative : Polarity::Positive;
}

bool Term::mentionsVariable(int var) const {
  return std::any_of(lits.begin(), lits.end(),
                     [var](const Literal& l) { return l.var == var; });
}

void Q3DNF::validate(bool requireWidth3) const {
  if (existentials < 0 || universals < 0)
    throw PreconditionError("negative variable block size");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Term& term = terms[t];
    if (term.width() < 2 || term.width() > 3)
      throw PreconditionError("term " + std::to_string(t) +
                              " has width " + std::to_string(term.width()));
    if (requireWidth3 && term.width() != 3)
      throw PreconditionError("term " + std::to_string(t) +
                              " is not width 3");
    for (const Literal& l : term.lits) {
      if (l.var < 1 || l.var > variableCount())
        throw PreconditionError("literal variable " + std::to_string(l.var) +
                                " outside [1, " +
                                std::to_string(variableCount()) + "]");
    }
  }
}

bool evaluateTerm(const Term& term, const Assignment& a) {
  for (const Literal& l : term.lits)
    if (a.value(l.var) != l.positive) return false;
  return true;
}

bool evaluateMatrix(const Q3DNF& f, const Assignment& a) {
  f.validate();
  if (f.terms.empty())
    throw PreconditionError("formula has no terms");
  for (const Term& t : f.terms)
    if (evaluateTerm(t, a)) return true;
  return false;
}

namespace {

struct TermMasks {
  std::uint32_t pos = 0;  // bit var-1 set when the positive literal occurs
  std::uint32_t neg = 0;
};

std::vector<TermMasks> termMasks(const Q3DNF& f) {
  std::vector<TermMasks> out;
  out.reserve(f.terms.size());
  for (const Term& t : f.terms) {
    TermMasks m;
    for (const Literal& l : t.lits) {
      std::uint32_t bit = std::uint32_t{1} << (l.var - 1);
      (l.positive ? m.pos : m.neg) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

bool matrixTrue(const std::vector<TermMasks>& masks, std::uint32_t a) {
  for (const TermMasks& m : masks)
    if ((a & m.pos) == m.pos && (a & m.neg) == 0) return true;
  return false;
}

}  // namespace

EvalResult evaluateQ3DNF(const Q3DNF& f) {
  f.validate();
  if (f.terms.empty())
    throw PreconditionError("formula has no terms");
  const int n = f.existentials, m = f.universals;
  if (n + m > kMaxExhaustiveVariables)
    throw ResourceLimitError(
        "exhaustive evaluation supports at most " +
        std::to_string(kMaxExhaustiveVariables) + " variables, got " +
        std::to_string(n + m));

  const std::vector<TermMasks> masks = termMasks(f);

  // xcode counts up with variable 1 as the most significant bit, so the
  // first satisfying xcode is the lexicographically least witness.
  for (std::uint64_t xcode = 0; xcode < (std::uint64_t{1} << n); ++xcode) {
    std::uint32_t xbits = 0;
    for (int i = 1; i <= n; ++i)
      if ((xcode >> (n - i)) & 1) xbits |= std::uint32_t{1} << (i - 1);

    bool allY = true;
    for (std::uint64_t ycode = 0; ycode < (std::uint64_t{1} << m); ++ycode) {
      std::uint32_t a = xbits | static_cast<std::uint32_t>(ycode << n);
      if (!matrixTrue(masks, a)) {
        allY = false;
        break;
      }
    }
    if (allY) {
      Assignment witness;
      for (int i = 1; i <= n; ++i)
        witness.set(i, ((xbits >> (i - 1)) & 1) != 0);
      return {true, witness};
    }
  }
  return {false, std::nullopt};
}

PolaritySplit polaritySplit(const Q3DNF& f) {
  PolaritySplit split;
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    switch (f.terms[t].polarity()) {
      case Polarity::Positive: split.positive.push_back(static_cast<int>(t)); break;
      case Polarity::Negative: split.negative.push_back(static_cast<int>(t)); break;
      case Polarity::Mixed:    split.mixed.push_back(static_cast<int>(t)); break;
    }
  }
  return split;
}

bool isMonotone(const Q3DNF& f) { return polaritySplit(f).mixed.empty(); }

NiceReport isNice(const Q3DNF& f) {
  if (!isMonotone(f))
    throw PreconditionError("isNice requires a monotone formula");
  const PolaritySplit split = polaritySplit(f);
  NiceReport report;
  for (int i = 1; i <= f.existentials; ++i) {
    auto someTermAvoids = [&](const std::vector<int>& idx) {
      return std::any_of(idx.begin(), idx.end(), [&](int t) {
        return !f.terms[t].mentionsVariable(i);
      });
    };
    if (!someTermAvoids(split.positive))
      report.deficiencies.emplace_back(i, DeficiencySide::Positive);
    if (!someTermAvoids(split.negative))
      report.deficiencies.emplace_back(i, DeficiencySide::Negative);
  }
  report.nice = report.deficiencies.empty();
  return report;
}

}  // namespace qmis
