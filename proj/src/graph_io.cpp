#include "qmis/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qmis {

namespace {

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

Side parseSide(const std::string& tok, int lineNo) {
  if (tok == "P") return Side::P;
  if (tok == "N") return Side::N;
  if (tok == "U") return Side::Unassigned;
  throw ParseError(lineNo, "side must be P, N, or U, got '" + tok + "'");
}

char sideChar(Side s) {
  switch (s) {
    case Side::P: return 'P';
    case Side::N: return 'N';
    default: return 'U';
  }
}

}  // namespace

ParsedGraph parseGraph(std::istream& in) {
  bool haveHeader = false;
  int declaredVertices = 0, declaredEdges = 0;
  std::vector<std::pair<Side, std::string>> pending;  // by id
  std::vector<bool> seen;
  std::vector<std::pair<int, int>> edgeLines;
  std::vector<int> edgeLineNos;
  std::optional<int> k;

  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") {
      if (haveHeader) throw ParseError(lineNo, "duplicate header");
      if (toks.size() != 4 || toks[1] != "graph")
        throw ParseError(lineNo, "expected 'p graph <#vertices> <#edges>'");
      declaredVertices = parseInt(toks[2], lineNo);
      declaredEdges = parseInt(toks[3], lineNo);
      if (declaredVertices < 0 || declaredEdges < 0)
        throw ParseError(lineNo, "negative count in header");
      pending.assign(declaredVertices, {Side::Unassigned, ""});
      seen.assign(declaredVertices, false);
      haveHeader = true;
    } else if (toks[0] == "v") {
      if (!haveHeader) throw ParseError(lineNo, "vertex before header");
      if (toks.size() != 4)
        throw ParseError(lineNo, "expected 'v <id> <P|N|U> <label>'");
      int id = parseInt(toks[1], lineNo);
      if (id < 0 || id >= declaredVertices)
        throw ParseError(lineNo, "vertex id " + std::to_string(id) +
                                     " outside [0, " +
                                     std::to_string(declaredVertices) + ")");
      if (seen[id])
        throw ParseError(lineNo, "vertex id " + std::to_string(id) +
                                     " declared twice");
      seen[id] = true;
      pending[id] = {parseSide(toks[2], lineNo), toks[3]};
    } else if (toks[0] == "e") {
      if (!haveHeader) throw ParseError(lineNo, "edge before header");
      if (toks.size() != 3)
        throw ParseError(lineNo, "expected 'e <id> <id>'");
      edgeLines.emplace_back(parseInt(toks[1], lineNo), parseInt(toks[2], lineNo));
      edgeLineNos.push_back(lineNo);
    } else if (toks[0] == "k") {
      if (toks.size() != 2) throw ParseError(lineNo, "expected 'k <value>'");
      if (k) throw ParseError(lineNo, "duplicate 'k' line");
      k = parseInt(toks[1], lineNo);
    } else {
      throw ParseError(lineNo, "unrecognized line '" + toks[0] + " ...'");
    }
  }
  if (!haveHeader) throw ParseError(lineNo, "missing 'p graph' header");
  for (int id = 0; id < declaredVertices; ++id)
    if (!seen[id])
      throw ParseError(lineNo, "vertex id " + std::to_string(id) +
                                   " never declared");

  ParsedGraph out;
  out.k = k;
  try {
    for (auto& [side, label] : pending) out.graph.addVertex(label, side);
  } catch (const PreconditionError& e) {
    throw ParseError(lineNo, e.what());
  }
  for (std::size_t i = 0; i < edgeLines.size(); ++i) {
    auto [u, v] = edgeLines[i];
    int ln = edgeLineNos[i];
    if (u < 0 || u >= declaredVertices || v < 0 || v >= declaredVertices)
      throw ParseError(ln, "edge endpoint outside [0, " +
                               std::to_string(declaredVertices) + ")");
    if (u == v) throw ParseError(ln, "self-loop at vertex " + std::to_string(u));
    if (out.graph.adjacent(u, v))
      throw ParseError(ln, "parallel edge " + std::to_string(u) + "-" +
                               std::to_string(v));
    out.graph.addEdge(u, v);
  }
  if (out.graph.edgeCount() != declaredEdges)
    throw ParseError(lineNo, "header declares " + std::to_string(declaredEdges) +
                                 " edges, file has " +
                                 std::to_string(out.graph.edgeCount()));
  return out;
}

ParsedGraph parseGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parseGraph(in);
}

void serializeGraph(const Graph& g, std::ostream& out, std::optional<int> k) {
  out << "p graph " << g.vertexCount() << ' ' << g.edgeCount() << '\n';
  if (k) out << "k " << *k << '\n';
  for (int v = 0; v < g.vertexCount(); ++v)
    out << "v " << v << ' ' << sideChar(g.vertex(v).side) << ' '
        << g.vertex(v).label << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void writeDot(const Graph& g, std::ostream& out) {
  out << "graph G {\n  rankdir=LR;\n";
  for (Side side : {Side::P, Side::N}) {
    out << "  { rank=same;";
    for (int v = 0; v < g.vertexCount(); ++v)
      if (g.vertex(v).side == side) out << " \"" << g.vertex(v).label << "\";";
    out << " }\n";
  }
  for (int v = 0; v < g.vertexCount(); ++v)
    if (g.vertex(v).side == Side::Unassigned)
      out << "  \"" << g.vertex(v).label << "\";\n";
  for (auto [u, v] : g.edges())
    out << "  \"" << g.vertex(u).label << "\" -- \"" << g.vertex(v).label
        << "\";\n";
  out << "}\n";
}

}  // namespace qmis
