#ifndef QMIS_NORMALIZE_HPP
#define QMIS_NORMALIZE_HPP

#include <utility>

#include "qmis/formula.hpp"

namespace qmis {

// Splits a mixed term into a positive and a negative part over a fresh
// universally quantified variable d:
//   (a & b & ~c)  <->  forall d, (a & b & d) | (~d & ~c)
// Each part has 2 or 3 distinct literals. Duplicated literals inside the
// input collapse before the split.
std::pair<Term, Term> splitMixedTerm(const Term& t, int freshUniversal);

// Replaces every mixed term by its split, appending one fresh universal
// variable per mixed term. Truth-value preserving; output terms have
// 2 or 3 literal slots.
Q3DNF monotonize(const Q3DNF& f);

// Repairs niceness deficiencies of a monotone formula. For each
// existential variable with no avoiding negative term, appends
// (x_i & z & w) and (~z & ~w) over fresh universals z, w; symmetrically
// (~x_i & ~z & ~w) and (z & w) when no positive term avoids it.
// Deficiencies are taken from the input; repair order is ascending
// variable id, negative-side fix before positive-side fix.
Q3DNF addNicenessTerms(const Q3DNF& f);

// Pads every two-slot term (a & b) to (a & b & b). Logically inert and
// polarity preserving.
Q3DNF padTerms(const Q3DNF& f);

// monotonize -> addNicenessTerms -> padTerms, then a structural check
// that the result is monotone, nice, and width 3 (InternalInvariantError
// if not). Truth-value preserving; idempotent.
Q3DNF normalizePipeline(const Q3DNF& f);

}  // namespace qmis

#endif
