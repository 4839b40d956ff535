#ifndef QMIS_FORMULA_IO_HPP
#define QMIS_FORMULA_IO_HPP

#include <iosfwd>
#include <string>

#include "qmis/formula.hpp"

namespace qmis {

// Text format, one construct per line, `#` starts a comment:
//   p qdnf <n> <m> <#terms>
//   t <lit> <lit> <lit>        (signed integers, negative = negated)
// Variables 1..n are existential, n+1..n+m universal.
Q3DNF parseFormula(std::istream& in);
Q3DNF parseFormulaFile(const std::string& path);

void serializeFormula(const Q3DNF& f, std::ostream& out);
std::string formulaToString(const Q3DNF& f);

}  // namespace qmis

#endif
