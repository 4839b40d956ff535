#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmis/formula_io.hpp"
#include "qmis/graph_io.hpp"
#include "qmis/harness.hpp"
#include "qmis/normalize.hpp"

namespace {

using namespace qmis;

// Exit codes: 0 success/true/consistent, 1 negative outcome,
// 2 parse error, 3 precondition violation, 4 resource/internal.
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

std::string witnessBits(const Assignment& a, int n) {
  std::string bits;
  for (int i = 1; i <= n; ++i) bits += a.value(i) ? '1' : '0';
  return bits;
}

std::string idList(const VertexSet& s) {
  std::string out;
  for (int v : s.ids()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

void writeToFileOrStdout(const std::string& path,
                         const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  emit(out);
}

VertexSet parseIdList(const std::string& text, const Graph& g) {
  VertexSet s;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int id = std::stoi(tok, &pos);
    if (pos != tok.size())
      throw PreconditionError("bad vertex id '" + tok + "'");
    if (id < 0 || id >= g.vertexCount())
      throw PreconditionError("vertex id " + std::to_string(id) +
                              " not in the graph");
    s.add(id);
  }
  return s;
}

int cmdEval(const std::string& path) {
  const Q3DNF f = parseFormulaFile(path);
  const EvalResult result = evaluateQ3DNF(f);
  if (result.holds) {
    std::cout << "TRUE x=" << witnessBits(*result.witness, f.existentials)
              << '\n';
    return 0;
  }
  std::cout << "FALSE\n";
  return kExitFalse;
}

int cmdNormalize(const std::string& path, const std::string& outPath) {
  const Q3DNF f = parseFormulaFile(path);
  const Q3DNF nice = normalizePipeline(f);
  writeToFileOrStdout(outPath, [&](std::ostream& os) { serializeFormula(nice, os); });
  return 0;
}

int cmdReduce(const std::string& path, const std::string& graphPath,
              const std::string& dotPath) {
  const Q3DNF f = parseFormulaFile(path);
  const ReductionOutput red = buildGraph(normalizePipeline(f));
  writeToFileOrStdout(graphPath, [&](std::ostream& os) {
    serializeGraph(red.graph, os, red.k);
  });
  if (!dotPath.empty()) {
    std::ofstream dot(dotPath);
    if (!dot) throw PreconditionError("cannot write '" + dotPath + "'");
    writeDot(red.graph, dot);
  }
  return 0;
}

int cmdMis(const std::string& path) {
  const Graph g = parseGraphFile(path).graph;
  for (const VertexSet& s : enumerateMIS(g)) std::cout << idList(s) << '\n';
  return 0;
}

int cmdMinTransversal(const std::string& path, std::optional<int> limit) {
  const Graph g = parseGraphFile(path).graph;
  const MinTransversalResult result = minTransversal(g, limit);
  if (!result.feasible) {
    std::cout << "INFEASIBLE-WITHIN-LIMIT\n";
    return kExitFalse;
  }
  std::cout << "size: " << result.size << '\n'
            << "set: " << idList(result.set) << '\n';
  return 0;
}

int cmdVerify(const std::string& path, const std::string& setText) {
  const Graph g = parseGraphFile(path).graph;
  const VertexSet candidate = parseIdList(setText, g);
  const TransversalCheck check = isTransversal(g, candidate);
  if (check.ok) {
    std::cout << "TRANSVERSAL\n";
    return 0;
  }
  std::cout << "NOT-TRANSVERSAL\n"
            << "counterexample: " << idList(*check.counterexample) << '\n';
  return kExitFalse;
}

int cmdRoundTrip(const std::string& path) {
  const Q3DNF f = parseFormulaFile(path);
  const RoundTripReport report = roundTrip(f);
  const PolaritySplit split = polaritySplit(report.normalized);
  std::cout << "n: " << report.normalized.existentials << '\n'
            << "m: " << report.normalized.universals << '\n'
            << "q: " << split.positive.size() << '\n'
            << "qn: " << split.negative.size() << '\n'
            << "holds: " << (report.holds ? "true" : "false") << '\n';
  if (report.witness)
    std::cout << "witness: "
              << witnessBits(*report.witness, report.normalized.existentials)
              << '\n';
  std::cout << "k: " << report.k << '\n';
  if (report.minTransversalSize)
    std::cout << "min_transversal_size: " << *report.minTransversalSize << '\n'
              << "min_transversal: " << idList(report.minSet) << '\n';
  else
    std::cout << "min_transversal_size: >" << report.k << '\n';
  std::cout << "exact_at_budget: " << (report.exactAtBudget ? "true" : "false")
            << '\n'
            << "consistent: " << (report.consistent ? "true" : "false") << '\n';
  return report.consistent ? 0 : kExitFalse;
}

int cmdGen(int n, int m, int q, int qn, std::uint64_t seed, bool plain,
           std::optional<int> terms) {
  Q3DNF f;
  if (plain)
    f = genQ3DNF(n, m, terms.value_or(q + qn), seed);
  else
    f = genNiceMonotone(n, m, q, qn, seed);
  serializeFormula(f, std::cout);
  return 0;
}

int cmdClassify(const std::string& path) {
  const ParsedGraph parsed = parseGraphFile(path);
  if (!parsed.k)
    throw PreconditionError("graph file has no 'k' line; not a reduce output");
  const ReductionOutput red = reductionFromLabeledGraph(parsed.graph, *parsed.k);
  const ClassificationAuditReport report = classificationAudit(red);
  std::cout << "mis_count: " << report.misCount << '\n';
  for (int type = 1; type <= 9; ++type)
    std::cout << "type_" << type << ": " << report.perType[type] << '\n';
  std::cout << "unclassified: " << report.unclassified << '\n'
            << "multiplicities: " << (report.multiplicitiesOk ? "ok" : "mismatch")
            << '\n';
  return (report.unclassified == 0 && report.multiplicitiesOk) ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantified 3-DNF formulas, their bipartite gadget graphs, "
               "and exact maximal-independent-set transversals"};
  app.require_subcommand(1);

  std::string formulaPath, graphPath, outPath, dotPath, setText;
  std::optional<int> limit, terms;
  int n = 1, m = 0, q = 1, qn = 1;
  std::uint64_t seed = 0;
  bool plain = false;

  auto* evalCmd = app.add_subcommand("eval", "Exhaustively evaluate a formula");
  evalCmd->add_option("formula", formulaPath)->required();

  auto* normCmd = app.add_subcommand("normalize",
                                     "Rewrite into nice monotone width-3 form");
  normCmd->add_option("formula", formulaPath)->required();
  normCmd->add_option("--out", outPath);

  auto* reduceCmd = app.add_subcommand("reduce",
                                       "Normalize and build the gadget graph");
  reduceCmd->add_option("formula", formulaPath)->required();
  reduceCmd->add_option("--graph", graphPath);
  reduceCmd->add_option("--dot", dotPath);

  auto* misCmd = app.add_subcommand("mis", "List all maximal independent sets");
  misCmd->add_option("graph", graphPath)->required();

  auto* mtCmd = app.add_subcommand("min-transversal",
                                   "Exact minimum transversal");
  mtCmd->add_option("graph", graphPath)->required();
  mtCmd->add_option("--limit", limit);

  auto* verifyCmd = app.add_subcommand("verify", "Check a candidate transversal");
  verifyCmd->add_option("graph", graphPath)->required();
  verifyCmd->add_option("--set", setText)->required();

  auto* rtCmd = app.add_subcommand("roundtrip",
                                   "Full oracle-vs-reduction consistency report");
  rtCmd->add_option("formula", formulaPath)->required();

  auto* genCmd = app.add_subcommand("gen", "Emit a seeded random formula");
  genCmd->add_option("--n", n)->required();
  genCmd->add_option("--m", m)->required();
  genCmd->add_option("--q", q)->required();
  genCmd->add_option("--qn", qn)->required();
  genCmd->add_option("--seed", seed)->required();
  genCmd->add_flag("--plain", plain, "arbitrary polarities, not necessarily nice");
  genCmd->add_option("--terms", terms, "term count for --plain (default q+qn)");

  auto* classifyCmd = app.add_subcommand("classify",
                                         "Audit the MIS taxonomy of a reduce output");
  classifyCmd->add_option("graph", graphPath)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*evalCmd) return cmdEval(formulaPath);
    if (*normCmd) return cmdNormalize(formulaPath, outPath);
    if (*reduceCmd) return cmdReduce(formulaPath, graphPath, dotPath);
    if (*misCmd) return cmdMis(graphPath);
    if (*mtCmd) return cmdMinTransversal(graphPath, limit);
    if (*verifyCmd) return cmdVerify(graphPath, setText);
    if (*rtCmd) return cmdRoundTrip(formulaPath);
    if (*genCmd) return cmdGen(n, m, q, qn, seed, plain, terms);
    if (*classifyCmd) return cmdClassify(graphPath);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitResource;
  }
  return 0;
}
