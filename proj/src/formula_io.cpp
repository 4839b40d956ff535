#include "qmis/formula_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qmis {

namespace {

// Strips comments and splits on whitespace.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string tok;
  while (ss >> tok) toks.push_back(tok);
  return toks;
}

int parseInt(const std::string& tok, int lineNo) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(lineNo, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(lineNo, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

Q3DNF parseFormula(std::istream& in) {
  Q3DNF f;
  bool haveHeader = false;
  int declaredTerms = 0;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") {
      if (haveHeader) throw ParseError(lineNo, "duplicate header");
      if (toks.size() != 5 || toks[1] != "qdnf")
        throw ParseError(lineNo, "expected 'p qdnf <n> <m> <#terms>'");
      f.existentials = parseInt(toks[2], lineNo);
      f.universals = parseInt(toks[3], lineNo);
      declaredTerms = parseInt(toks[4], lineNo);
      if (f.existentials < 0 || f.universals < 0 || declaredTerms < 0)
        throw ParseError(lineNo, "negative count in header");
      haveHeader = true;
    } else if (toks[0] == "t") {
      if (!haveHeader)
        throw ParseError(lineNo, "term before 'p qdnf' header");
      if (toks.size() != 4)
        throw ParseError(lineNo, "term line must carry exactly three literals");
      Term term;
      for (int d = 1; d <= 3; ++d) {
        int lit = parseInt(toks[d], lineNo);
        if (lit == 0)
          throw ParseError(lineNo, "literal 0 is not a variable");
        Literal l = Literal::fromEncoded(lit);
        if (l.var > f.variableCount())
          throw ParseError(lineNo, "variable " + std::to_string(l.var) +
                                       " outside [1, " +
                                       std::to_string(f.variableCount()) + "]");
        term.lits.push_back(l);
      }
      f.terms.push_back(term);
    } else {
      throw ParseError(lineNo, "unrecognized line '" + toks[0] + " ...'");
    }
  }
  if (!haveHeader) throw ParseError(lineNo, "missing 'p qdnf' header");
  if (static_cast<int>(f.terms.size()) != declaredTerms)
    throw ParseError(lineNo, "header declares " + std::to_string(declaredTerms) +
                                 " terms, file has " +
                                 std::to_string(f.terms.size()));
  return f;
}

Q3DNF parseFormulaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parseFormula(in);
}

void serializeFormula(const Q3DNF& f, std::ostream& out) {
  out << "p qdnf " << f.existentials << ' ' << f.universals << ' '
      << f.terms.size() << '\n';
  for (const Term& t : f.terms) {
    out << 't';
    for (const Literal& l : t.lits) out << ' ' << l.encoded();
    out << '\n';
  }
}

std::string formulaToString(const Q3DNF& f) {
  std::ostringstream ss;
  serializeFormula(f, ss);
  return ss.str();
}

}  // namespace qmis
