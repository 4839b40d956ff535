#ifndef QMIS_FORMULA_HPP
#define QMIS_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qmis/errors.hpp"

namespace qmis {

// Largest n+m accepted by the exhaustive evaluator (2^(n+m) assignments).
inline constexpr int kMaxExhaustiveVariables = 26;

// A literal over a 1-based variable id. Ids 1..n are existential,
// n+1..n+m universal; the owning formula knows n and m.
struct Literal {
  int var = 0;
  bool positive = true;

  // Signed-integer encoding, DIMACS style: -v means negated v.
  int encoded() const { return positive ? var : -var; }
  static Literal fromEncoded(int lit) { return {lit < 0 ? -lit : lit, lit > 0}; }
  Literal negated() const { return {var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class Polarity { Positive, Negative, Mixed };

// A conjunctive term. Canonical formulas use exactly three literal slots
// (duplicates permitted; the literal multiset is treated as a set by all
// downstream logic). Two-slot terms appear only as intermediates of the
// normalization pipeline.
struct Term {
  std::vector<Literal> lits;

  Term() = default;
  Term(std::initializer_list<Literal> ls) : lits(ls) {}
  explicit Term(std::vector<Literal> ls) : lits(std::move(ls)) {}

  int width() const { return static_cast<int>(lits.size()); }
  // Sorted, deduplicated literal set.
  std::vector<Literal> distinct() const;
  Polarity polarity() const;
  bool mentionsVariable(int var) const;

  friend bool operator==(const Term&, const Term&) = default;
};

// Two-block quantified 3-DNF: exists x_1..x_n, forall y_1..y_m, some term true.
struct Q3DNF {
  int existentials = 0;  // n
  int universals = 0;    // m
  std::vector<Term> terms;

  int variableCount() const { return existentials + universals; }
  bool isExistential(int var) const { return var >= 1 && var <= existentials; }

  // Structural well-formedness; throws PreconditionError on violation.
  void validate(bool requireWidth3 = false) const;

  friend bool operator==(const Q3DNF&, const Q3DNF&) = default;
};

// Truth values for a declared set of variables. Total on its scope;
// asking about an unbound variable is a ScopeError.
class Assignment {
 public:
  Assignment() = default;

  void set(int var, bool value) { values_[var] = value; }
  bool contains(int var) const { return values_.count(var) != 0; }
  bool value(int var) const {
    auto it = values_.find(var);
    if (it == values_.end()) throw ScopeError(var);
    return it->second;
  }
  const std::map<int, bool>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<int, bool> values_;
};

// True iff every literal slot of the term is satisfied under `a`.
bool evaluateTerm(const Term& term, const Assignment& a);

// Disjunction over terms; `a` must bind all n+m variables.
bool evaluateMatrix(const Q3DNF& f, const Assignment& a);

struct EvalResult {
  bool holds = false;
  // Lexicographically least satisfying x-assignment (variable 1 most
  // significant, false < true); absent when the formula does not hold.
  std::optional<Assignment> witness;
};

// Exhaustive exists-forall evaluation, 2^(n+m) loop. Deterministic.
// Throws ResourceLimitError when n+m exceeds kMaxExhaustiveVariables.
EvalResult evaluateQ3DNF(const Q3DNF& f);

struct PolaritySplit {
  std::vector<int> positive;  // term indices, ascending
  std::vector<int> negative;
  std::vector<int> mixed;
};

PolaritySplit polaritySplit(const Q3DNF& f);

bool isMonotone(const Q3DNF& f);

enum class DeficiencySide { Positive, Negative };

struct NiceReport {
  bool nice = true;
  // (existential variable id, side on which no term avoids it)
  std::vector<std::pair<int, DeficiencySide>> deficiencies;
};

// Requires a monotone formula. A formula is nice when every existential
// variable is avoided by at least one positive and one negative term.
NiceReport isNice(const Q3DNF& f);

}  // namespace qmis

#endif
