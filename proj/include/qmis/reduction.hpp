#ifndef QMIS_REDUCTION_HPP
#define QMIS_REDUCTION_HPP

#include <optional>
#include <vector>

#include "qmis/formula.hpp"
#include "qmis/graph.hpp"

namespace qmis {

// Vertex roles of the constructed graph. Labels are bit-exact:
// x<i>, xb<i>, a<i>, b<i>, ab<i>, bb<i>, y<j>, yb<j>,
// t<l>, r<l>, s<l>, tn<l>, rn<l>, sn<l>.
enum class Role {
  X, Xbar, A, B, Abar, Bbar,   // variable gadget, index i in [n]
  Y, Ybar,                     // universal literal pair, index j in [m]
  T, R, S,                     // positive term gadget, index l in [q]
  Tprime, Rprime, Sprime       // negative term gadget, index l in [q']
};

struct RoleRef {
  Role kind;
  int index;  // 1-based
  friend bool operator==(const RoleRef&, const RoleRef&) = default;
};

// The formula-to-graph construction together with its role metadata.
struct ReductionOutput {
  Graph graph;
  int k = 0;
  std::vector<RoleRef> roles;  // indexed by vertex id
  int n = 0, m = 0, q = 0, qprime = 0;

  int vertexOf(Role kind, int index) const;  // PreconditionError if absent
  RoleRef roleOf(int vertexId) const;
};

// Transversal budget 2n + q + q'. Requires a nice monotone width-3 formula.
int budget(const Q3DNF& f);

// Builds the bipartite gadget graph for a nice monotone width-3 formula
// with n >= 1 (preconditions checked individually; a not-nice input
// reports its deficiencies). Vertex count is 6n + 2m + 3q + 3q'.
ReductionOutput buildGraph(const Q3DNF& f);

// Reconstructs role metadata from a labeled graph emitted by buildGraph
// (the `reduce` file format round-trip).
ReductionOutput reductionFromLabeledGraph(const Graph& g, int k);

// The forward-direction transversal for a satisfying x-assignment:
// all t and t' vertices, plus {b_i, xb_i} when mu(x_i) is true and
// {bb_i, x_i} otherwise. Always has size exactly k.
VertexSet transversalFromAssignment(const ReductionOutput& red,
                                    const Assignment& mu);

// Rewrites a transversal of size <= k into the canonical form of equal
// size k: all t/t' vertices plus one of {bb_i, x_i} / {b_i, xb_i} per i.
// The precondition (input is a transversal) is checked only in strict mode.
VertexSet canonicalize(const ReductionOutput& red, const VertexSet& x,
                       bool strict = false);

// Reads the satisfying assignment off a canonical transversal:
// mu(x_i) = (x_i not in the set). Rejects non-canonical inputs.
Assignment assignmentFromTransversal(const ReductionOutput& red,
                                     const VertexSet& xprime);

// Taxonomy of the maximal independent sets of the constructed graph:
//   1 regular (avoids all a, b, ab, bb, r, s, rn, sn vertices)
//   2 P and N
//   3 {a_i,b_i,bb_i}, {ab_i,b_i,bb_i}, {a_i,bb_i,xb_i}, {ab_i,b_i,x_i}
//   4 S_i + T_i        5 S'_i + T'_i
//   6 {t_l,r_l,s_l}    7 W_l + Z_l
//   8 {tn_l,rn_l,sn_l} 9 W'_l + Z'_l
struct MISClass {
  int type = 0;
  int param = 0;  // i or l where applicable, else 0
  friend bool operator==(const MISClass&, const MISClass&) = default;
};

// Requires a maximal independent set. An input matching no class is an
// InternalInvariantError: the taxonomy is meant to be exhaustive.
MISClass classifyMIS(const ReductionOutput& red, const VertexSet& s);

// The k pairwise disjoint maximal independent sets {a_i,bb_i,xb_i},
// {ab_i,b_i,x_i}, {t_l,r_l,s_l}, {tn_l,rn_l,sn_l}; they force every
// transversal to have size at least k.
std::vector<VertexSet> disjointWitnessFamily(const ReductionOutput& red);

}  // namespace qmis

#endif
